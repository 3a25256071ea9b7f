#include "bicx/frft.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bicx/errors.hpp"
#include "bicx/hermite.hpp"

namespace bicx {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

bool near_unit_real(cplx c) {
  return std::abs(c - 1.0) <= ThetaParam::kExcludedTol || std::abs(c + 1.0) <= ThetaParam::kExcludedTol;
}

// 1 - theta^2, rejected when it is a zero divisor.
Bicomplex one_minus_sq(const Bicomplex& theta) {
  const Bicomplex d = 1.0 - theta * theta;
  if (is_null_cone(d)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " is excluded: 1 - theta^2 is a zero divisor";
    throw ExcludedParameterError(msg.str());
  }
  return d;
}

void require_closed_disc(const Bicomplex& theta) {
  const IdempotentPair p = to_idempotent(theta);
  if (std::abs(p.alpha) > 1.0 + ThetaParam::kModulusTol || std::abs(p.beta) > 1.0 + ThetaParam::kModulusTol) {
    std::ostringstream msg;
    msg << "theta = " << theta << " has a component outside the closed unit disc";
    throw DomainError(msg.str());
  }
}

// (1 / sqrt(1 - theta^2)) exp(-sigma (x - theta w)^2 / (1 - theta^2) + shift), where w may be bicomplex.
Bicomplex gaussian_kernel(double sigma, const Bicomplex& theta, const Bicomplex& x, const Bicomplex& w,
                          const Bicomplex& shift) {
  const Bicomplex d = one_minus_sq(theta);
  const Bicomplex inv = inverse(d);
  const Bicomplex u = x - theta * w;
  return inverse(sqrt_principal(d)) * exp(-sigma * (u * u) * inv + shift);
}

HermiteCoeffVector scale_by_powers(const HermiteCoeffVector& psi, const Bicomplex& theta) {
  HermiteCoeffVector out = psi;
  const IdempotentPair t = to_idempotent(theta);
  IdempotentPair p{1.0, 1.0};
  for (Bicomplex& c : out.coeffs) {
    c = from_idempotent(to_idempotent(c) * p);
    p = p * t;
  }
  return out;
}

}  // namespace

ThetaParam ThetaParam::unit_torus(const Bicomplex& theta) {
  if (!is_finite(theta)) throw DomainError("theta must be finite");
  const IdempotentPair p = to_idempotent(theta);
  if (near_unit_real(p.alpha) || near_unit_real(p.beta)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " is excluded (a component equals +-1; theta in {+-1, +-ij})";
    throw ExcludedParameterError(msg.str());
  }
  if (std::abs(std::abs(p.alpha) - 1.0) > kModulusTol || std::abs(std::abs(p.beta) - 1.0) > kModulusTol) {
    std::ostringstream msg;
    msg << "theta = " << theta << " is not on the unit torus: |alpha| = " << std::abs(p.alpha)
        << ", |beta| = " << std::abs(p.beta);
    throw DomainError(msg.str());
  }
  return {theta, ThetaMode::unit_torus};
}

ThetaParam ThetaParam::from_phases(double phi1, double phi2) {
  return unit_torus(from_idempotent({std::polar(1.0, phi1), std::polar(1.0, phi2)}));
}

ThetaParam ThetaParam::interior(const Bicomplex& theta) {
  if (!is_finite(theta)) throw DomainError("theta must be finite");
  const IdempotentPair p = to_idempotent(theta);
  if (!(std::abs(p.alpha) < 1.0) || !(std::abs(p.beta) < 1.0)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " is not interior: |alpha| = " << std::abs(p.alpha)
        << ", |beta| = " << std::abs(p.beta);
    throw DomainError(msg.str());
  }
  return {theta, ThetaMode::interior};
}

ThetaParam ThetaParam::conj() const { return {conj_star(theta_), mode_}; }

Bicomplex frft_kernel(double sigma, const ThetaParam& theta, double x, double y) {
  require_positive(sigma, "sigma");
  return normalization_c(GaussianSpace::Real, sigma) * gaussian_kernel(sigma, theta.theta(), x, y, 0.0);
}

HermiteCoeffVector frft_apply(const HermiteCoeffVector& psi, const ThetaParam& theta) {
  return scale_by_powers(psi, theta.theta());
}

Bicomplex frft_apply(const HermiteCoeffVector& psi, const ThetaParam& theta, double y) {
  return eval_hermite_series(frft_apply(psi, theta), y);
}

Bicomplex frft_apply_integral(const RealFunction& psi, double sigma, const ThetaParam& theta, double y,
                              const QuadratureRule& rule) {
  require_positive(sigma, "sigma");
  const Bicomplex& t = theta.theta();
  one_minus_sq(t);
  const Bicomplex v = integrate_real(
      [&](double x) { return gaussian_kernel(sigma, t, x, y, rule.gamma * x * x) * psi(x); }, rule);
  return normalization_c(GaussianSpace::Real, sigma) * v;
}

HermiteCoeffVector frft_inverse(const HermiteCoeffVector& psi, const ThetaParam& theta) {
  return frft_apply(psi, theta.conj());
}

Bicomplex frft_inverse(const HermiteCoeffVector& psi, const ThetaParam& theta, double x) {
  return frft_apply(psi, theta.conj(), x);
}

Bicomplex frft_inverse_integral(const RealFunction& psi, double sigma, const ThetaParam& theta, double x,
                                const QuadratureRule& rule) {
  return frft_apply_integral(psi, sigma, theta.conj(), x, rule);
}

Bicomplex mehler_closed(double sigma, const Bicomplex& theta, double x, double y) {
  return mehler_bilinear_bc(sigma, theta, x, y);
}

Bicomplex mehler_series(double sigma, const Bicomplex& theta, double x, double y, unsigned n_max) {
  require_positive(sigma, "sigma");
  const std::vector<double> px = psi_table(n_max, sigma, x);
  const std::vector<double> py = psi_table(n_max, sigma, y);
  const IdempotentPair t = to_idempotent(theta);
  IdempotentPair p{1.0, 1.0};
  IdempotentPair sum{};
  for (unsigned n = 0; n <= n_max; ++n) {
    const double h = px[n] * py[n];
    sum = sum + IdempotentPair{h * p.alpha, h * p.beta};
    p = p * t;
  }
  return from_idempotent(sum);
}

Bicomplex mehler_bilinear_bc(double sigma, const Bicomplex& theta, const Bicomplex& z, double y) {
  require_positive(sigma, "sigma");
  require_closed_disc(theta);
  // (-theta^2 (Z^2 + y^2) + 2 theta y Z) = -(Z - theta y)^2 + (1 - theta^2) Z^2
  return gaussian_kernel(sigma, theta, z, y, sigma * (z * z));
}

Bicomplex mehler_bilinear_series(double sigma, const Bicomplex& theta, const Bicomplex& z, double y, unsigned n_max) {
  require_positive(sigma, "sigma");
  const std::vector<Bicomplex> pz = psi_table_bc(n_max, sigma, z);
  const std::vector<double> py = psi_table(n_max, sigma, y);
  Bicomplex p = 1.0;
  Bicomplex sum;
  for (unsigned n = 0; n <= n_max; ++n) {
    sum += py[n] * (p * pz[n]);
    p *= theta;
  }
  return sum;
}

Bicomplex ck_frft_kernel(double sigma, const ThetaParam& theta, double x, const Bicomplex& z) {
  require_positive(sigma, "sigma");
  return normalization_c(GaussianSpace::Real, sigma) * gaussian_kernel(sigma, theta.theta(), x, z, 0.0);
}

cplx gaussian_integral_closed(double gamma, cplx a, cplx b, cplx c, cplx d) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gaussian_integral_closed: gamma must be positive");
  // With xi = u + iv the quadratic form is -(gamma - Re(a+b)) u^2 - (gamma + Re(a+b)) v^2
  // + 2 Im(b - a) u v (real part); it is negative definite iff s^2 + t^2 < gamma^2.
  const double s = (a + b).real();
  const double t = (b - a).imag();
  if (!(s * s + t * t < gamma * gamma)) {
    std::ostringstream msg;
    msg << "gaussian_integral_closed: divergent, Re(a+b)^2 + Im(b-a)^2 = " << s * s + t * t
        << " >= gamma^2 = " << gamma * gamma;
    throw DomainError(msg.str());
  }
  const cplx det = gamma * gamma - 4.0 * a * b;
  return std::numbers::pi / std::sqrt(det) * std::exp((a * d * d + b * c * c + gamma * c * d) / det);
}

}  // namespace bicx
