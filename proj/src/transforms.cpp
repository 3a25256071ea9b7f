#include "bicx/transforms.hpp"

#include <cmath>
#include <sstream>

#include "bicx/errors.hpp"

namespace bicx {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

void require_gamma(const QuadratureRule& rule, double gamma, const char* where) {
  if (std::abs(rule.gamma - gamma) > 1e-14 * gamma) {
    std::ostringstream msg;
    msg << where << ": rule gamma " << rule.gamma << " must equal " << gamma;
    throw DomainError(msg.str());
  }
}

}  // namespace

cplx sbt_kernel_C(double sigma, double gamma, double x, cplx z) {
  require_positive(sigma, "sigma");
  require_positive(gamma, "gamma");
  const cplx d = x - std::sqrt(gamma / (2.0 * sigma)) * z;
  return normalization_c(GaussianSpace::Real, sigma) * std::exp(-sigma * d * d);
}

Bicomplex sbt_kernel_BC(double sigma, double nu, double x, const Bicomplex& z) {
  require_positive(sigma, "sigma");
  require_positive(nu, "nu");
  const Bicomplex d = x - std::sqrt(nu / (4.0 * sigma)) * z;
  return normalization_c(GaussianSpace::Real, sigma) * exp(-sigma * (d * d));
}

MonomialCoeffVector sbt_forward(const HermiteCoeffVector& phi, double nu) {
  require_positive(phi.sigma, "sigma");
  require_positive(nu, "nu");
  MonomialCoeffVector f{nu, phi.coeffs};
  for (std::size_t n = 0; n < f.size(); ++n)
    f.coeffs[n] *= 1.0 / std::sqrt(monomial_norm_sq(static_cast<unsigned>(n), nu));
  return f;
}

HermiteCoeffVector sbt_inverse_coeff(const MonomialCoeffVector& f, double sigma) {
  require_positive(sigma, "sigma");
  require_positive(f.nu, "nu");
  HermiteCoeffVector phi{sigma, f.coeffs};
  for (std::size_t n = 0; n < phi.size(); ++n)
    phi.coeffs[n] *= std::sqrt(monomial_norm_sq(static_cast<unsigned>(n), f.nu));
  return phi;
}

Bicomplex sbt_forward_integral(const RealFunction& phi, double sigma, double nu, const Bicomplex& z,
                               const QuadratureRule& rule) {
  require_positive(sigma, "sigma");
  require_positive(nu, "nu");
  require_gamma(rule, sigma, "sbt_forward_integral");
  // e^{-sigma (x - s Z)^2} = e^{-sigma x^2} e^{2 sigma s x Z - sigma s^2 Z^2}
  const double s = std::sqrt(nu / (4.0 * sigma));
  const Bicomplex lin = (2.0 * sigma * s) * z;
  const Bicomplex quad = (sigma * s * s) * (z * z);
  const Bicomplex v = integrate_real([&](double x) { return exp(x * lin - quad) * phi(x); }, rule);
  return normalization_c(GaussianSpace::Real, sigma) * v;
}

std::vector<std::vector<Bicomplex>> sbt_inverse_integral(const std::vector<BicomplexFunction>& fs, double sigma,
                                                         double nu, const std::vector<double>& xs,
                                                         const QuadratureRule& rule, Parallelism par) {
  require_positive(sigma, "sigma");
  require_positive(nu, "nu");
  const double c = std::sqrt(sigma * nu);
  const std::size_t nf = fs.size();
  const std::size_t nx = xs.size();
  const std::vector<Bicomplex> flat = integrate_bicomplex_batch(
      [&](const Bicomplex& z, std::span<Bicomplex> out) {
        const Bicomplex zs = conj_star(z);
        const IdempotentPair q = to_idempotent(-(nu / 4.0) * (zs * zs));
        const IdempotentPair l = to_idempotent(c * zs);
        thread_local std::vector<Bicomplex> fv;
        fv.resize(nf);
        for (std::size_t i = 0; i < nf; ++i) fv[i] = fs[i](z);
        for (std::size_t k = 0; k < nx; ++k) {
          const Bicomplex g = exp(from_idempotent(q + IdempotentPair{xs[k] * l.alpha, xs[k] * l.beta}));
          for (std::size_t i = 0; i < nf; ++i) out[i * nx + k] = g * fv[i];
        }
      },
      nf * nx, nu, rule, par);
  const double ct = normalization_c(GaussianSpace::Bicomplex, nu);
  std::vector<std::vector<Bicomplex>> result(nf, std::vector<Bicomplex>(nx));
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t k = 0; k < nx; ++k) result[i][k] = ct * flat[i * nx + k];
  return result;
}

Bicomplex sbt_inverse_integral(const BicomplexFunction& f, double sigma, double nu, double x,
                               const QuadratureRule& rule, Parallelism par) {
  return sbt_inverse_integral(std::vector<BicomplexFunction>{f}, sigma, nu, std::vector<double>{x}, rule, par)[0][0];
}

Bicomplex s_transform(const ComplexFunction& f, double nu, const Bicomplex& z, const QuadratureRule& rule) {
  require_positive(nu, "nu");
  require_gamma(rule, 0.5 * nu, "s_transform");
  const Bicomplex half_nu_z = (0.5 * nu) * z;
  const Bicomplex v = integrate_complex([&](cplx xi) { return exp(half_nu_z * std::conj(xi)) * f(xi); }, rule);
  return normalization_c(GaussianSpace::Complex, 0.5 * nu) * v;
}

}  // namespace bicx
