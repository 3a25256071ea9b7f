#include "bicx/json_codec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bicx/errors.hpp"

namespace bicx {

using nlohmann::json;

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ConfigError(std::string(what) + ": expected a number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(std::string(what) + ": not finite");
  return v;
}

cplx complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(std::string(what) + ": expected [re, im], got " + j.dump());
  return {number(j[0], what), number(j[1], what)};
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

std::vector<Bicomplex> coeffs_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ConfigError("coefficient vector: missing \"coeffs\"");
  const json& c = j.at("coeffs");
  if (!c.is_array()) throw ConfigError("coefficient vector: \"coeffs\" must be an array");
  std::vector<Bicomplex> out;
  out.reserve(c.size());
  for (const json& e : c) out.push_back(bicomplex_from_json(e));
  return out;
}

double positive_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("coefficient vector: missing \"") + key + "\"");
  const double v = number(j.at(key), key);
  if (!(v > 0.0)) throw ConfigError(std::string(key) + " must be positive");
  return v;
}

json coeffs_to_json(const std::vector<Bicomplex>& c) {
  json arr = json::array();
  for (const Bicomplex& z : c) arr.push_back(to_json(z));
  return arr;
}

}  // namespace

json to_json(const Bicomplex& z) { return json::array({z.x1(), z.y1(), z.x2(), z.y2()}); }

json to_json(const IdempotentPair& p) {
  return json{{"alpha", complex_to_json(p.alpha)}, {"beta", complex_to_json(p.beta)}};
}

json to_json(const HermiteCoeffVector& v) { return json{{"sigma", v.sigma}, {"coeffs", coeffs_to_json(v.coeffs)}}; }

json to_json(const MonomialCoeffVector& v) { return json{{"nu", v.nu}, {"coeffs", coeffs_to_json(v.coeffs)}}; }

Bicomplex bicomplex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ConfigError("bicomplex: expected [x1, y1, x2, y2], got " + j.dump());
  return {number(j[0], "x1"), number(j[1], "y1"), number(j[2], "x2"), number(j[3], "y2")};
}

IdempotentPair idempotent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
    throw ConfigError("idempotent pair: expected {\"alpha\": [re, im], \"beta\": [re, im]}");
  return {complex_from_json(j.at("alpha"), "alpha"), complex_from_json(j.at("beta"), "beta")};
}

HermiteCoeffVector hermite_vector_from_json(const json& j) {
  return {positive_field(j, "sigma"), coeffs_from_json(j)};
}

MonomialCoeffVector monomial_vector_from_json(const json& j) {
  return {positive_field(j, "nu"), coeffs_from_json(j)};
}

Bicomplex parse_bicomplex(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse bicomplex \"" + text + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(d))
      throw ConfigError("cannot parse bicomplex \"" + text + "\"");
    v.push_back(d);
  }
  if (v.size() == 1) return v[0];
  if (v.size() == 2) return cplx(v[0], v[1]);
  if (v.size() != 4) throw ConfigError("bicomplex \"" + text + "\" needs 1, 2 or 4 comma-separated numbers");
  return {v[0], v[1], v[2], v[3]};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace bicx
