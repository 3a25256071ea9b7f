#include "bicx/hermite.hpp"

#include <cmath>
#include <numbers>

#include "bicx/errors.hpp"

namespace bicx {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

}  // namespace

HermiteParams HermiteParams::make(double sigma, double nu) {
  require_positive(sigma, "sigma");
  require_positive(nu, "nu");
  return {sigma, nu};
}

double hermite_sigma(unsigned n, double sigma, double x) {
  require_positive(sigma, "sigma");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * sigma * x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = 2.0 * sigma * x * cur - 2.0 * sigma * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Bicomplex hermite_sigma_bc(unsigned n, double sigma, const Bicomplex& z) {
  require_positive(sigma, "sigma");
  Bicomplex prev = 1.0;
  if (n == 0) return prev;
  Bicomplex cur = 2.0 * sigma * z;
  for (unsigned k = 1; k < n; ++k) {
    Bicomplex next = 2.0 * sigma * (z * cur) - (2.0 * sigma * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_hermite_norm_sq(unsigned n, double sigma) {
  require_positive(sigma, "sigma");
  return n * (std::numbers::ln2 + std::log(sigma)) + std::lgamma(n + 1.0);
}

double hermite_norm_sq(unsigned n, double sigma) {
  require_positive(sigma, "sigma");
  if (n > 150) return std::exp(log_hermite_norm_sq(n, sigma));
  double r = 1.0;
  for (unsigned k = 1; k <= n; ++k) r *= 2.0 * sigma * k;
  return r;
}

// psi_{n+1} = sqrt(2 sigma/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}
std::vector<double> psi_table(unsigned n_max, double sigma, double x) {
  require_positive(sigma, "sigma");
  std::vector<double> out(n_max + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = std::sqrt(2.0 * sigma) * x;
  for (unsigned n = 1; n < n_max; ++n) {
    const double a = std::sqrt(2.0 * sigma / (n + 1.0));
    const double b = std::sqrt(n / (n + 1.0));
    out[n + 1] = a * x * out[n] - b * out[n - 1];
  }
  return out;
}

std::vector<Bicomplex> psi_table_bc(unsigned n_max, double sigma, const Bicomplex& z) {
  require_positive(sigma, "sigma");
  std::vector<Bicomplex> out(n_max + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = std::sqrt(2.0 * sigma) * z;
  for (unsigned n = 1; n < n_max; ++n) {
    const double a = std::sqrt(2.0 * sigma / (n + 1.0));
    const double b = std::sqrt(n / (n + 1.0));
    out[n + 1] = a * (z * out[n]) - b * out[n - 1];
  }
  return out;
}

double psi_n(unsigned n, double sigma, double x) { return psi_table(n, sigma, x)[n]; }

Bicomplex generating_G(double sigma, double nu, double x, const Bicomplex& z) {
  require_positive(sigma, "sigma");
  require_positive(nu, "nu");
  const Bicomplex zs = conj_star(z);
  return exp(-(nu / 4.0) * (zs * zs) + (std::sqrt(sigma * nu) * x) * zs);
}

Bicomplex generating_G_series(double sigma, double nu, double x, const Bicomplex& z, unsigned n_max) {
  require_positive(nu, "nu");
  const std::vector<double> psi = psi_table(n_max, sigma, x);
  const Bicomplex zs = conj_star(z);
  // phi_n(Z*) = (nu^n / (2^n n!))^{1/2} (Z*)^n, built incrementally.
  Bicomplex term = 1.0;
  Bicomplex sum = psi[0] * term;
  for (unsigned n = 1; n <= n_max; ++n) {
    term = std::sqrt(nu / (2.0 * n)) * (term * zs);
    sum += psi[n] * term;
  }
  return sum;
}

}  // namespace bicx
