#pragma once

#include <functional>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/spaces.hpp"

namespace bicx {

/// Quadrature order used by sbt_inverse_integral when none is given.
inline constexpr std::size_t kInverseOrder = 80;

/// Rescaled complex Segal-Bargmann kernel c_0^sigma e^{-sigma (x - sqrt(gamma/(2 sigma)) z)^2}.
cplx sbt_kernel_C(double sigma, double gamma, double x, cplx z);

/// c_0^sigma exp(-sigma (x - sqrt(nu/(4 sigma)) Z)^2). Its idempotent components
/// are sbt_kernel_C(sigma, nu/2, x, .) at alpha and beta.
Bicomplex sbt_kernel_BC(double sigma, double nu, double x, const Bicomplex& z);

/// Coefficient form: c_n over psi_n maps to A_n = c_n (nu^n / (2^n n!))^{1/2} over Z^n.
MonomialCoeffVector sbt_forward(const HermiteCoeffVector& phi, double nu);

/// Exact inverse of sbt_forward.
HermiteCoeffVector sbt_inverse_coeff(const MonomialCoeffVector& f, double sigma);

/// int_R kernel(x; Z) phi(x) dx on a rule with gamma = sigma; the kernel
/// beyond e^{-sigma x^2} is folded into the integrand.
Bicomplex sbt_forward_integral(const RealFunction& phi, double sigma, double nu, const Bicomplex& z,
                               const QuadratureRule& rule);

/// c_T^nu int_BC e^{-nu|Z|^2 - (nu/4)(Z*)^2 + sqrt(sigma nu) x Z*} f(Z) dlambda(Z)
/// on a rule with gamma = nu/2.
Bicomplex sbt_inverse_integral(const BicomplexFunction& f, double sigma, double nu, double x,
                               const QuadratureRule& rule, Parallelism par = {});

/// sbt_inverse_integral for every (f, x) pair in one sweep of the 4D rule.
/// Result is indexed [f][x].
std::vector<std::vector<Bicomplex>> sbt_inverse_integral(const std::vector<BicomplexFunction>& fs, double sigma,
                                                         double nu, const std::vector<double>& xs,
                                                         const QuadratureRule& rule, Parallelism par = {});

/// Complex test function for s_transform; bicomplex values allow BC-linear combinations.
using ComplexFunction = std::function<Bicomplex(cplx)>;

/// S^nu F(Z) = c_1^{nu/2} int_C F(xi) e^{+(nu/2) Z conj(xi) - (nu/2)|xi|^2} dlambda(xi)
/// on a rule with gamma = nu/2. Maps xi^n to Z^n.
Bicomplex s_transform(const ComplexFunction& f, double nu, const Bicomplex& z, const QuadratureRule& rule);

}  // namespace bicx
