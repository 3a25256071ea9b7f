#include "bicx/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "bicx/errors.hpp"
#include "bicx/frft.hpp"
#include "bicx/hermite.hpp"
#include "bicx/json_codec.hpp"
#include "bicx/spaces.hpp"
#include "bicx/transforms.hpp"
#include "bicx/verify.hpp"

namespace bicx {

using nlohmann::json;

namespace {

struct ThetaFlags {
  std::string raw;     // --theta x1,y1,x2,y2
  std::string phases;  // --theta-phases phi1,phi2
  bool interior = false;

  bool given() const { return !raw.empty() || !phases.empty(); }
};

void add_theta_flags(CLI::App* cmd, ThetaFlags& t) {
  cmd->add_option("--theta", t.raw, "theta as x1,y1,x2,y2 (or a single real)");
  cmd->add_option("--theta-phases", t.phases, "theta = e^{i phi1} e+ + e^{i phi2} e- as phi1,phi2");
}

ThetaParam parse_theta(const ThetaFlags& t) {
  if (!t.raw.empty() && !t.phases.empty()) throw ConfigError("give either --theta or --theta-phases, not both");
  if (!t.phases.empty()) {
    const Bicomplex p = parse_bicomplex(t.phases);
    if (p.x2() != 0.0 || p.y2() != 0.0) throw ConfigError("--theta-phases takes two numbers phi1,phi2");
    return ThetaParam::from_phases(p.x1(), p.y1());
  }
  if (t.raw.empty()) throw ConfigError("theta is required (--theta or --theta-phases)");
  const Bicomplex th = parse_bicomplex(t.raw);
  return t.interior ? ThetaParam::interior(th) : ThetaParam::unit_torus(th);
}

std::string csv_path(const std::string& json_path) {
  const std::string ext = ".json";
  if (json_path.size() > ext.size() && json_path.compare(json_path.size() - ext.size(), ext.size(), ext) == 0)
    return json_path.substr(0, json_path.size() - ext.size()) + ".csv";
  return json_path + ".csv";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
}

// "Z=0.3,0.1,0.2,0.0" or "x=0.5"
std::pair<std::string, std::string> split_eval(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("--eval expects NAME=VALUE, got \"" + text + "\"");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

double parse_real(const std::string& text, const char* what) {
  const Bicomplex v = parse_bicomplex(text);
  if (v.y1() != 0.0 || v.x2() != 0.0 || v.y2() != 0.0) throw ConfigError(std::string(what) + " must be real");
  return v.x1();
}

cplx parse_complex(const std::string& text, const char* what) {
  const Bicomplex v = parse_bicomplex(text);
  if (v.x2() != 0.0 || v.y2() != 0.0) throw ConfigError(std::string(what) + " must be complex (re,im)");
  return v.z1();
}

// Parses a:b:step into the inclusive grid a, a + step, ..., b.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--grid expects a:b:step, got \"" + text + "\"");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
    throw ConfigError("--grid expects a:b:step with a <= b and step > 0, got \"" + text + "\"");
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (long k = 0; k <= count; ++k) grid.push_back(parts[0] + k * parts[2]);
  return grid;
}

struct VerifyFlags {
  std::string suite = "all";
  VerifyParams params;
  std::string out;
  ThetaFlags theta;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  VerifyParams p = f.params;
  if (f.theta.given()) p.theta = parse_theta(f.theta).theta();
  const VerificationReport report = run_verification(f.suite, p);
  for (const CaseResult& c : report.cases)
    out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(40) << c.id << " error=" << std::scientific
        << std::setprecision(3) << c.error << " tol=" << c.tol << std::defaultfloat << "\n";
  if (!f.out.empty()) {
    write_file(f.out, report_json(report).dump(2) + "\n");
    write_file(csv_path(f.out), report_csv(report));
  }
  const auto failed = std::count_if(report.cases.begin(), report.cases.end(), [](const CaseResult& c) { return !c.pass; });
  out << report.cases.size() - static_cast<std::size_t>(failed) << "/" << report.cases.size() << " cases passed\n";
  return failed == 0 ? kExitOk : kExitFail;
}

struct TransformFlags {
  std::string direction = "forward";
  std::string input;
  double nu = 2.0;
  double sigma = 1.0;
  std::string eval;
  bool integral = false;
  std::size_t order = 0;
};

int cmd_transform(const TransformFlags& f, std::ostream& out) {
  const json in = read_json_file(f.input);
  if (f.direction == "forward") {
    const HermiteCoeffVector phi = hermite_vector_from_json(in);
    const MonomialCoeffVector g = sbt_forward(phi, f.nu);
    if (f.eval.empty()) {
      out << to_json(g).dump() << "\n";
      return kExitOk;
    }
    const auto [name, value] = split_eval(f.eval);
    if (name != "Z") throw ConfigError("forward --eval expects Z=x1,y1,x2,y2");
    const Bicomplex z = parse_bicomplex(value);
    const Bicomplex v = f.integral
                            ? sbt_forward_integral([&](double x) { return eval_hermite_series(phi, x); }, phi.sigma,
                                                   f.nu, z, gauss_hermite(f.order ? f.order : kDefaultOrder, phi.sigma))
                            : eval_monomial_series(g, z);
    out << json{{"Z", to_json(z)}, {"value", to_json(v)}}.dump() << "\n";
    return kExitOk;
  }
  if (f.direction == "inverse") {
    const MonomialCoeffVector g = monomial_vector_from_json(in);
    const HermiteCoeffVector phi = sbt_inverse_coeff(g, f.sigma);
    if (f.eval.empty()) {
      out << to_json(phi).dump() << "\n";
      return kExitOk;
    }
    const auto [name, value] = split_eval(f.eval);
    if (name != "x") throw ConfigError("inverse --eval expects x=<real>");
    const double x = parse_real(value, "x");
    const Bicomplex v =
        f.integral ? sbt_inverse_integral([&](const Bicomplex& z) { return eval_monomial_series(g, z); }, f.sigma, g.nu,
                                          x, gauss_hermite(f.order ? f.order : kInverseOrder, 0.5 * g.nu))
                   : eval_hermite_series(phi, x);
    out << json{{"x", x}, {"value", to_json(v)}}.dump() << "\n";
    return kExitOk;
  }
  throw ConfigError("--direction must be forward or inverse");
}

struct FrftFlags {
  ThetaFlags theta;
  std::string input;
  bool inverse = false;
  std::string eval;
  bool integral = false;
  std::size_t order = kDefaultOrder;
};

int cmd_frft(const FrftFlags& f, std::ostream& out) {
  const ThetaParam theta = parse_theta(f.theta);
  const HermiteCoeffVector psi = hermite_vector_from_json(read_json_file(f.input));
  const ThetaParam t = f.inverse ? theta.conj() : theta;
  if (f.eval.empty()) {
    out << to_json(frft_apply(psi, t)).dump() << "\n";
    return kExitOk;
  }
  const auto [name, value] = split_eval(f.eval);
  if (name != "y" && name != "x") throw ConfigError("frft --eval expects y=<real>");
  const double y = parse_real(value, "y");
  const Bicomplex v = f.integral ? frft_apply_integral([&](double x) { return eval_hermite_series(psi, x); },
                                                       psi.sigma, t, y, gauss_hermite(f.order, 0.5 * psi.sigma))
                                 : frft_apply(psi, t, y);
  out << json{{"y", y}, {"value", to_json(v)}}.dump() << "\n";
  return kExitOk;
}

struct KernelFlags {
  std::string type;
  double sigma = 1.0;
  double nu = 2.0;
  double gamma = 1.0;
  std::string z, w;
  double x = 0.0, y = 0.0;
  ThetaFlags theta;
};

int cmd_kernel(const KernelFlags& f, std::ostream& out) {
  auto need = [](const std::string& v, const char* flag) -> const std::string& {
    if (v.empty()) throw ConfigError(std::string(flag) + " is required for this kernel");
    return v;
  };
  Bicomplex value;
  if (f.type == "KBC") {
    value = kernel_K_BC(f.nu, parse_bicomplex(need(f.z, "--Z")), parse_bicomplex(need(f.w, "--W")));
  } else if (f.type == "KC") {
    value = kernel_K_C(f.gamma, parse_complex(need(f.z, "--Z"), "--Z"), parse_complex(need(f.w, "--W"), "--W"));
  } else if (f.type == "SBT") {
    value = sbt_kernel_BC(f.sigma, f.nu, f.x, parse_bicomplex(need(f.z, "--Z")));
  } else if (f.type == "FRFT") {
    value = frft_kernel(f.sigma, parse_theta(f.theta), f.x, f.y);
  } else if (f.type == "CK") {
    value = ck_frft_kernel(f.sigma, parse_theta(f.theta), f.x, parse_bicomplex(need(f.z, "--Z")));
  } else {
    throw ConfigError("--type must be one of KBC, KC, SBT, FRFT, CK");
  }
  out << json{{"type", f.type}, {"value", to_json(value)}}.dump() << "\n";
  return kExitOk;
}

struct MehlerFlags {
  std::string theta;
  std::string grid = "-2:2:0.5";
  double sigma = 1.0;
  unsigned n = 60;
  double tol = 1e-10;
};

int cmd_mehler(const MehlerFlags& f, std::ostream& out) {
  const Bicomplex theta = parse_bicomplex(f.theta);
  const std::vector<double> grid = parse_grid(f.grid);
  double worst = 0.0;
  out << "x,y,closed_x1,closed_y1,closed_x2,closed_y2,error\n";
  out << std::setprecision(17);
  for (double x : grid)
    for (double y : grid) {
      const Bicomplex c = mehler_closed(f.sigma, theta, x, y);
      const Bicomplex s = mehler_series(f.sigma, theta, x, y, f.n);
      const double e = norm(s - c) / std::max(1.0, norm(c));
      worst = std::max(worst, e);
      out << x << "," << y << "," << c.x1() << "," << c.y1() << "," << c.x2() << "," << c.y2() << "," << e << "\n";
    }
  return worst <= f.tol ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicomplex Segal-Bargmann and fractional Fourier transform toolkit"};
  app.require_subcommand(1);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run the verification suites and write reports");
  verify->add_option("--suite", vf.suite, "algebra, hermite, quadrature, spaces, transforms, frft or all");
  verify->add_option("--sigma", vf.params.sigma, "Gaussian weight sigma");
  verify->add_option("--nu", vf.params.nu, "Bargmann weight nu");
  verify->add_option("--order", vf.params.order, "1D Gauss-Hermite order");
  verify->add_option("--order-bc", vf.params.order_bc, "4D order for polynomial and kernel integrands");
  verify->add_option("--order-inverse", vf.params.order_inverse, "4D order for inverse-transform integrals");
  verify->add_option("--seed", vf.params.seed, "seed for randomized cases");
  verify->add_option("--out", vf.out, "JSON report path; the CSV mirror goes next to it");
  verify->add_option("--jobs", vf.params.jobs, "worker threads for independent cases (0 = all cores)");
  verify->add_flag("--timings", vf.params.timings, "record wall time per case");
  add_theta_flags(verify, vf.theta);

  TransformFlags tf;
  auto* transform = app.add_subcommand("transform", "Segal-Bargmann transform of a coefficient vector");
  transform->add_option("--direction", tf.direction, "forward or inverse");
  transform->add_option("--input", tf.input, "coefficient vector JSON")->required();
  transform->add_option("--nu", tf.nu, "Bargmann weight for the forward direction");
  transform->add_option("--sigma", tf.sigma, "Gaussian weight for the inverse direction");
  transform->add_option("--eval", tf.eval, "evaluate the result at Z=x1,y1,x2,y2 (forward) or x=<real> (inverse)");
  transform->add_flag("--integral", tf.integral, "evaluate through the integral form");
  transform->add_option("--order", tf.order, "quadrature order for --integral");

  FrftFlags ff;
  auto* frft = app.add_subcommand("frft", "fractional Fourier transform of a Hermite coefficient vector");
  add_theta_flags(frft, ff.theta);
  frft->add_flag("--interior", ff.theta.interior, "accept theta strictly inside the unit bidisc");
  frft->add_option("--input", ff.input, "Hermite coefficient vector JSON")->required();
  frft->add_flag("--inverse", ff.inverse, "apply the inverse (parameter theta*)");
  frft->add_option("--eval", ff.eval, "evaluate the result at y=<real>");
  frft->add_flag("--integral", ff.integral, "evaluate through the integral form");
  frft->add_option("--order", ff.order, "quadrature order for --integral");

  KernelFlags kf;
  auto* kernel = app.add_subcommand("kernel", "evaluate a kernel");
  kernel->add_option("--type", kf.type, "KBC, KC, SBT, FRFT or CK")->required();
  kernel->add_option("--sigma", kf.sigma);
  kernel->add_option("--nu", kf.nu);
  kernel->add_option("--gamma", kf.gamma, "weight of the complex kernel KC");
  kernel->add_option("--Z", kf.z, "first argument (x1,y1,x2,y2; re,im for KC)");
  kernel->add_option("--W", kf.w, "second argument");
  kernel->add_option("--x", kf.x);
  kernel->add_option("--y", kf.y);
  add_theta_flags(kernel, kf.theta);
  kernel->add_flag("--interior", kf.theta.interior, "accept theta strictly inside the unit bidisc");

  MehlerFlags mf;
  auto* mehler = app.add_subcommand("mehler", "compare the Mehler closed form with its series on a grid (CSV)");
  mehler->add_option("--theta", mf.theta, "theta as a real or x1,y1,x2,y2")->required();
  mehler->add_option("--grid", mf.grid, "a:b:step for both x and y");
  mehler->add_option("--sigma", mf.sigma);
  mehler->add_option("--N", mf.n, "series truncation");
  mehler->add_option("--tol", mf.tol, "maximum accepted relative error");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(vf, out);
    if (*transform) return cmd_transform(tf, out);
    if (*frft) return cmd_frft(ff, out);
    if (*kernel) return cmd_kernel(kf, out);
    if (*mehler) return cmd_mehler(mf, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ExcludedParameterError& e) {
    err << "ExcludedParameterError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "DomainError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DimensionMismatch& e) {
    err << "DimensionMismatch: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}

}  // namespace bicx
