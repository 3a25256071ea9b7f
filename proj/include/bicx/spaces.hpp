#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/quadrature.hpp"

namespace bicx {

/// phi = sum_n coeffs[n] psi_n^sigma in L^{2,sigma}_BC(R).
struct HermiteCoeffVector {
  double sigma = 1.0;
  std::vector<Bicomplex> coeffs;

  std::size_t size() const { return coeffs.size(); }
};

/// f(Z) = sum_n coeffs[n] Z^n in the bicomplex Bargmann space F^{2,nu}.
struct MonomialCoeffVector {
  double nu = 2.0;
  std::vector<Bicomplex> coeffs;

  std::size_t size() const { return coeffs.size(); }
};

/// Functions sampled by the quadrature oracles.
using RealFunction = std::function<Bicomplex(double)>;
using BicomplexFunction = std::function<Bicomplex(const Bicomplex&)>;

/// K_C^gamma(z, w) = e^{gamma z conj(w)}.
cplx kernel_K_C(double gamma, cplx z, cplx w);

/// K_BC^nu(Z, W) = e^{(nu/2) Z W*}.
Bicomplex kernel_K_BC(double nu, const Bicomplex& z, const Bicomplex& w);

// ---------------------------------------------------------------------------
// L^{2,sigma}_BC(R)

/// Sum_n psi_n(x) c_n.
Bicomplex eval_hermite_series(const HermiteCoeffVector& phi, double x);

/// <f, g> = sum_n c_n (d_n)*. Throws DimensionMismatch when sigma differs.
Bicomplex inner_L2sigma(const HermiteCoeffVector& f, const HermiteCoeffVector& g);

/// <f, g> = c_0^sigma int f(x) g(x)* e^{-sigma x^2} dx by quadrature. The rule
/// must carry gamma = sigma.
Bicomplex inner_L2sigma(const RealFunction& f, const RealFunction& g, double sigma, const QuadratureRule& rule);

/// ||phi||^2 = (||phi+||^2 + ||phi-||^2)/2 = sum_n |c_n|^2.
double norm_sq(const HermiteCoeffVector& phi);

// ---------------------------------------------------------------------------
// F^{2,nu}(BC)

/// ||Z^n||^2 = 2^n n! / nu^n.
double monomial_norm_sq(unsigned n, double nu);

/// Orthonormal basis element phi_n(Z) = (nu^n / (2^n n!))^{1/2} Z^n.
Bicomplex bargmann_basis(unsigned n, double nu, const Bicomplex& z);

/// <f, g> = sum_n A_n (B_n)* 2^n n!/nu^n. Throws DimensionMismatch when nu differs.
Bicomplex inner_H2nu(const MonomialCoeffVector& f, const MonomialCoeffVector& g);

/// <f, g> = c_T^nu int_BC f(Z) g(Z)* e^{-nu |Z|^2} dlambda(Z). Rule gamma = nu/2.
Bicomplex inner_H2nu(const BicomplexFunction& f, const BicomplexFunction& g, double nu, const QuadratureRule& rule,
                     Parallelism par = {});

/// Growth-condition norm sum_n (2^n n!/nu^n) |A_n|^2.
double norm_sq(const MonomialCoeffVector& f);

/// Horner evaluation in idempotent coordinates.
Bicomplex eval_monomial_series(const MonomialCoeffVector& f, const Bicomplex& z);

/// f(alpha e+ + beta e-) = phi+(alpha) e+ + phi-(beta) e-: coefficient lists of phi+ and phi-.
std::pair<std::vector<cplx>, std::vector<cplx>> idempotent_split_F(const MonomialCoeffVector& f);

/// Inverse of idempotent_split_F.
MonomialCoeffVector idempotent_combine_F(const std::vector<cplx>& plus, const std::vector<cplx>& minus, double nu);

/// ||phi||^2 in the classical Bargmann space F^{2,gamma}(C): sum_n n!/gamma^n |a_n|^2.
double complex_bargmann_norm_sq(const std::vector<cplx>& coeffs, double gamma);

/// P f(Z) = c_T^nu int_BC e^{(nu/2) Z W*} f(W) e^{-nu |W|^2} dlambda(W). Rule gamma = nu/2.
Bicomplex project_P(const BicomplexFunction& f, double nu, const Bicomplex& z, const QuadratureRule& rule,
                    Parallelism par = {});

/// project_P for several functions sharing the kernel evaluation.
std::vector<Bicomplex> project_P(const std::vector<BicomplexFunction>& fs, double nu, const Bicomplex& z,
                                 const QuadratureRule& rule, Parallelism par = {});

}  // namespace bicx
