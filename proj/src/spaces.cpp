#include "bicx/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bicx/errors.hpp"
#include "bicx/hermite.hpp"

namespace bicx {

namespace {

void require_same(double a, double b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << "mismatched " << what << ": " << a << " vs " << b;
    throw DimensionMismatch(msg.str());
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

}  // namespace

cplx kernel_K_C(double gamma, cplx z, cplx w) {
  require_positive(gamma, "gamma");
  return std::exp(gamma * z * std::conj(w));
}

Bicomplex kernel_K_BC(double nu, const Bicomplex& z, const Bicomplex& w) {
  require_positive(nu, "nu");
  return exp((0.5 * nu) * (z * conj_star(w)));
}

Bicomplex eval_hermite_series(const HermiteCoeffVector& phi, double x) {
  if (phi.coeffs.empty()) return 0.0;
  const std::vector<double> psi = psi_table(static_cast<unsigned>(phi.size() - 1), phi.sigma, x);
  Bicomplex sum;
  for (std::size_t n = 0; n < phi.size(); ++n) sum += psi[n] * phi.coeffs[n];
  return sum;
}

Bicomplex inner_L2sigma(const HermiteCoeffVector& f, const HermiteCoeffVector& g) {
  require_same(f.sigma, g.sigma, "sigma");
  Bicomplex sum;
  const std::size_t n = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < n; ++k) sum += bc_inner(f.coeffs[k], g.coeffs[k]);
  return sum;
}

Bicomplex inner_L2sigma(const RealFunction& f, const RealFunction& g, double sigma, const QuadratureRule& rule) {
  require_positive(sigma, "sigma");
  require_same(rule.gamma, sigma, "rule gamma / sigma");
  const Bicomplex s = integrate_real([&](double x) { return bc_inner(f(x), g(x)); }, rule);
  return normalization_c(GaussianSpace::Real, sigma) * s;
}

double norm_sq(const HermiteCoeffVector& phi) {
  double s = 0.0;
  for (const Bicomplex& c : phi.coeffs) s += norm_sq(c);
  return s;
}

double monomial_norm_sq(unsigned n, double nu) {
  require_positive(nu, "nu");
  if (n > 150) return std::exp(n * (std::numbers::ln2 - std::log(nu)) + std::lgamma(n + 1.0));
  double r = 1.0;
  for (unsigned k = 1; k <= n; ++k) r *= 2.0 * k / nu;
  return r;
}

Bicomplex bargmann_basis(unsigned n, double nu, const Bicomplex& z) {
  return (1.0 / std::sqrt(monomial_norm_sq(n, nu))) * pow(z, n);
}

Bicomplex inner_H2nu(const MonomialCoeffVector& f, const MonomialCoeffVector& g) {
  require_same(f.nu, g.nu, "nu");
  Bicomplex sum;
  const std::size_t n = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < n; ++k)
    sum += monomial_norm_sq(static_cast<unsigned>(k), f.nu) * bc_inner(f.coeffs[k], g.coeffs[k]);
  return sum;
}

Bicomplex inner_H2nu(const BicomplexFunction& f, const BicomplexFunction& g, double nu, const QuadratureRule& rule,
                     Parallelism par) {
  require_positive(nu, "nu");
  const Bicomplex s = integrate_bicomplex([&](const Bicomplex& z) { return bc_inner(f(z), g(z)); }, nu, rule, par);
  return normalization_c(GaussianSpace::Bicomplex, nu) * s;
}

double norm_sq(const MonomialCoeffVector& f) {
  double s = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) s += monomial_norm_sq(static_cast<unsigned>(n), f.nu) * norm_sq(f.coeffs[n]);
  return s;
}

Bicomplex eval_monomial_series(const MonomialCoeffVector& f, const Bicomplex& z) {
  if (f.coeffs.empty()) return 0.0;
  const IdempotentPair p = to_idempotent(z);
  IdempotentPair acc = to_idempotent(f.coeffs.back());
  for (std::size_t k = f.size() - 1; k-- > 0;) acc = acc * p + to_idempotent(f.coeffs[k]);
  return from_idempotent(acc);
}

std::pair<std::vector<cplx>, std::vector<cplx>> idempotent_split_F(const MonomialCoeffVector& f) {
  std::vector<cplx> plus(f.size()), minus(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const IdempotentPair p = to_idempotent(f.coeffs[n]);
    plus[n] = p.alpha;
    minus[n] = p.beta;
  }
  return {std::move(plus), std::move(minus)};
}

MonomialCoeffVector idempotent_combine_F(const std::vector<cplx>& plus, const std::vector<cplx>& minus, double nu) {
  MonomialCoeffVector f{nu, std::vector<Bicomplex>(std::max(plus.size(), minus.size()))};
  for (std::size_t n = 0; n < f.size(); ++n) {
    const cplx a = n < plus.size() ? plus[n] : cplx{};
    const cplx b = n < minus.size() ? minus[n] : cplx{};
    f.coeffs[n] = from_idempotent({a, b});
  }
  return f;
}

double complex_bargmann_norm_sq(const std::vector<cplx>& coeffs, double gamma) {
  require_positive(gamma, "gamma");
  double s = 0.0;
  double w = 1.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) w *= n / gamma;
    s += w * std::norm(coeffs[n]);
  }
  return s;
}

std::vector<Bicomplex> project_P(const std::vector<BicomplexFunction>& fs, double nu, const Bicomplex& z,
                                 const QuadratureRule& rule, Parallelism par) {
  require_positive(nu, "nu");
  const Bicomplex half_nu_z = (0.5 * nu) * z;
  std::vector<Bicomplex> out = integrate_bicomplex_batch(
      [&](const Bicomplex& w, std::span<Bicomplex> vals) {
        const Bicomplex k = exp(half_nu_z * conj_star(w));
        for (std::size_t i = 0; i < fs.size(); ++i) vals[i] = k * fs[i](w);
      },
      fs.size(), nu, rule, par);
  const double c = normalization_c(GaussianSpace::Bicomplex, nu);
  for (Bicomplex& v : out) v *= c;
  return out;
}

Bicomplex project_P(const BicomplexFunction& f, double nu, const Bicomplex& z, const QuadratureRule& rule,
                    Parallelism par) {
  return project_P(std::vector<BicomplexFunction>{f}, nu, z, rule, par)[0];
}

}  // namespace bicx
