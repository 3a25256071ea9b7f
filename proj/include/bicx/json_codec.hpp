#pragma once

#include <json.hpp>
#include <string>

#include "bicx/bicomplex.hpp"
#include "bicx/spaces.hpp"

namespace bicx {

// Shared encodings. Decoders throw ConfigError on any schema violation.
//   Bicomplex           [x1, y1, x2, y2]
//   IdempotentPair      {"alpha": [re, im], "beta": [re, im]}
//   HermiteCoeffVector  {"sigma": s, "coeffs": [[x1, y1, x2, y2], ...]}
//   MonomialCoeffVector {"nu": v, "coeffs": [[x1, y1, x2, y2], ...]}

nlohmann::json to_json(const Bicomplex& z);
nlohmann::json to_json(const IdempotentPair& p);
nlohmann::json to_json(const HermiteCoeffVector& v);
nlohmann::json to_json(const MonomialCoeffVector& v);

Bicomplex bicomplex_from_json(const nlohmann::json& j);
IdempotentPair idempotent_from_json(const nlohmann::json& j);
HermiteCoeffVector hermite_vector_from_json(const nlohmann::json& j);
MonomialCoeffVector monomial_vector_from_json(const nlohmann::json& j);

/// Parses "x1,y1,x2,y2", "re,im" (z1 only) or a single real into a Bicomplex.
Bicomplex parse_bicomplex(const std::string& text);

/// Reads and parses a JSON file; ConfigError when unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

}  // namespace bicx
