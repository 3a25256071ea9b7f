#pragma once

#include <vector>

#include "bicx/bicomplex.hpp"

namespace bicx {

/// Gaussian-weight scale sigma and Bargmann weight nu; both must be positive.
struct HermiteParams {
  double sigma = 1.0;
  double nu = 2.0;

  static HermiteParams make(double sigma, double nu);
};

/// H_n^sigma(x) = (-1)^n e^{sigma x^2} d^n/dx^n e^{-sigma x^2}, via
/// H_{n+1} = 2 sigma x H_n - 2 sigma n H_{n-1}.
double hermite_sigma(unsigned n, double sigma, double x);

/// Same recurrence with a bicomplex argument.
Bicomplex hermite_sigma_bc(unsigned n, double sigma, const Bicomplex& z);

/// ||H_n^sigma||^2 = 2^n sigma^n n! in L^{2,sigma}(R).
double hermite_norm_sq(unsigned n, double sigma);
double log_hermite_norm_sq(unsigned n, double sigma);

/// Orthonormal psi_n^sigma = H_n^sigma / ||H_n^sigma||.
double psi_n(unsigned n, double sigma, double x);

/// psi_0 .. psi_{n_max} at x, from the normalized three-term recurrence.
std::vector<double> psi_table(unsigned n_max, double sigma, double x);

/// psi_0 .. psi_{n_max} at a bicomplex point.
std::vector<Bicomplex> psi_table_bc(unsigned n_max, double sigma, const Bicomplex& z);

/// G^{sigma,nu}(x; Z) = exp(-(nu/4) (Z*)^2 + sqrt(sigma nu) x Z*).
Bicomplex generating_G(double sigma, double nu, double x, const Bicomplex& z);

/// Partial sum of sum_n psi_n(x) conj_star(phi_n(Z)) through n = n_max.
Bicomplex generating_G_series(double sigma, double nu, double x, const Bicomplex& z, unsigned n_max);

}  // namespace bicx
