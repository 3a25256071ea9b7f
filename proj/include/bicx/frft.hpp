#pragma once

#include "bicx/bicomplex.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/spaces.hpp"

namespace bicx {

enum class ThetaMode { unit_torus, interior };

/// Parameter theta = alpha e+ + beta e- of the fractional Fourier transform.
///
/// unit_torus: |alpha| = |beta| = 1 (to 1e-12) and neither component within
/// 1e-9 of +-1, which excludes theta in {+-1, +-ij}.
/// interior: max(|alpha|, |beta|) < 1; null-cone values such as 0.5 e+ are allowed.
class ThetaParam {
 public:
  static constexpr double kModulusTol = 1e-12;
  static constexpr double kExcludedTol = 1e-9;

  /// Throws ExcludedParameterError for the excluded set, DomainError off the torus.
  static ThetaParam unit_torus(const Bicomplex& theta);
  /// theta = e^{i phi1} e+ + e^{i phi2} e-.
  static ThetaParam from_phases(double phi1, double phi2);
  /// Throws DomainError unless both components lie strictly inside the unit disc.
  static ThetaParam interior(const Bicomplex& theta);

  const Bicomplex& theta() const { return theta_; }
  ThetaMode mode() const { return mode_; }

  /// theta* is a valid parameter of the same mode.
  ThetaParam conj() const;

 private:
  ThetaParam(const Bicomplex& theta, ThetaMode mode) : theta_(theta), mode_(mode) {}

  Bicomplex theta_;
  ThetaMode mode_;
};

/// c_0^sigma / sqrt(1 - theta^2) exp(-sigma (x - theta y)^2 / (1 - theta^2)).
Bicomplex frft_kernel(double sigma, const ThetaParam& theta, double x, double y);

/// Coefficient path: c_n -> theta^n c_n.
HermiteCoeffVector frft_apply(const HermiteCoeffVector& psi, const ThetaParam& theta);

/// Coefficient path evaluated at y.
Bicomplex frft_apply(const HermiteCoeffVector& psi, const ThetaParam& theta, double y);

/// int_R psi(x) frft_kernel(x, y) dx on the given rule, any gamma: e^{gamma x^2}
/// is folded into the kernel exponent. The kernel decays like e^{-sigma x^2/2}
/// on the torus, so gamma = sigma/2 suits a polynomial psi.
Bicomplex frft_apply_integral(const RealFunction& psi, double sigma, const ThetaParam& theta, double y,
                              const QuadratureRule& rule);

/// The transform with parameter theta*.
HermiteCoeffVector frft_inverse(const HermiteCoeffVector& psi, const ThetaParam& theta);
Bicomplex frft_inverse(const HermiteCoeffVector& psi, const ThetaParam& theta, double x);
Bicomplex frft_inverse_integral(const RealFunction& psi, double sigma, const ThetaParam& theta, double x,
                                const QuadratureRule& rule);

/// 1 / sqrt(1 - theta^2) exp((-sigma theta^2 (x^2 + y^2) + 2 sigma theta x y) / (1 - theta^2)).
/// Throws DomainError if a component of theta has modulus above one and
/// ExcludedParameterError if 1 - theta^2 is in the null cone.
Bicomplex mehler_closed(double sigma, const Bicomplex& theta, double x, double y);

/// sum_{n <= N} theta^n psi_n(x) psi_n(y).
Bicomplex mehler_series(double sigma, const Bicomplex& theta, double x, double y, unsigned n_max);

/// mehler_closed with a bicomplex first argument.
Bicomplex mehler_bilinear_bc(double sigma, const Bicomplex& theta, const Bicomplex& z, double y);

/// sum_{n <= N} theta^n psi_n(Z) psi_n(y).
Bicomplex mehler_bilinear_series(double sigma, const Bicomplex& theta, const Bicomplex& z, double y, unsigned n_max);

/// c_0^sigma / sqrt(1 - theta^2) exp(-sigma (x - theta Z)^2 / (1 - theta^2)).
Bicomplex ck_frft_kernel(double sigma, const ThetaParam& theta, double x, const Bicomplex& z);

/// int_C e^{-gamma |xi|^2 + a xi^2 + b conj(xi)^2 + c xi + d conj(xi)} dlambda(xi)
///   = pi / sqrt(gamma^2 - 4ab) exp((a d^2 + b c^2 + gamma c d) / (gamma^2 - 4ab)).
/// Converges iff Re(a + b)^2 + Im(b - a)^2 < gamma^2; DomainError otherwise.
cplx gaussian_integral_closed(double gamma, cplx a, cplx b, cplx c, cplx d);

}  // namespace bicx
