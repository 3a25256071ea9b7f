#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bicx/bicomplex.hpp"

namespace bicx {

struct VerifyParams {
  double sigma = 1.0;
  double nu = 2.0;
  std::size_t order = 64;          // 1D rules; nested FrFT inner rules use 3x this
  std::size_t order_bc = 24;       // 4D rules for polynomial and kernel integrands
  std::size_t order_inverse = 40;  // 4D rule for the inverse transform integrals
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
  std::optional<Bicomplex> theta;  // unit-torus theta replacing the built-in set
  bool timings = false;            // record wall time per case (breaks byte-identical reports)
};

struct CaseResult {
  std::string id;
  std::string desc;
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::optional<double> ms;
};

struct VerificationReport {
  std::string suite;
  VerifyParams params;
  std::vector<CaseResult> cases;

  bool all_pass() const;
};

/// Suite names accepted by run_verification.
const std::vector<std::string>& suite_names();

/// Runs one suite ("algebra", "hermite", "quadrature", "spaces", "transforms",
/// "frft") or "all". Cases run in parallel when params.jobs > 1; results keep
/// registration order. A case that throws is reported as failed with error
/// DBL_MAX. Throws ConfigError for an unknown suite and the parameter errors of
/// ThetaParam / HermiteParams for invalid sigma, nu or theta.
VerificationReport run_verification(const std::string& suite, const VerifyParams& params);

nlohmann::json report_json(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

}  // namespace bicx
