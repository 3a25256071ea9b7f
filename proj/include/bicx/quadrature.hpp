#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bicx/bicomplex.hpp"

namespace bicx {

/// Gauss-Hermite nodes and weights for the weight e^{-gamma t^2} on R.
struct QuadratureRule {
  double gamma = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t order() const { return nodes.size(); }
};

/// Default order per real dimension.
inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr std::size_t kMaxOrder = 1024;

/// Order-point rule for e^{-gamma t^2}. The gamma = 1 rule comes from the
/// eigenvalues of the symmetric tridiagonal Jacobi matrix, polished by one
/// Newton step on the orthonormal recurrence; weights use the Christoffel sum.
/// Other gamma divide nodes and weights by sqrt(gamma).
///
/// Throws DomainError for order == 0, order > kMaxOrder or gamma <= 0, and
/// ConvergenceError if the eigen-solve fails.
QuadratureRule gauss_hermite(std::size_t order, double gamma);

/// Worker count for the nested complex/bicomplex rules. jobs == 0 means one
/// worker per hardware thread. Results are bit-identical for every job count:
/// workers only fill per-node partial sums, which are reduced in fixed order.
struct Parallelism {
  unsigned jobs = 1;
};

/// Pairwise (cascade) summation in index order.
Bicomplex pairwise_sum(std::span<const Bicomplex> values);

/// sum_k w_k f(t_k) ~ int_R f(x) e^{-gamma x^2} dx.
Bicomplex integrate_real(const std::function<Bicomplex(double)>& f, const QuadratureRule& rule);

/// Tensor rule over xi = u + i v with weight e^{-gamma |xi|^2} and dlambda = du dv.
Bicomplex integrate_complex(const std::function<Bicomplex(cplx)>& f, const QuadratureRule& rule);

/// int_BC f(Z) e^{-nu |Z|^2} dlambda(Z) evaluated as
/// (1/4) int int f(alpha e+ + beta e-) e^{-(nu/2)|alpha|^2 - (nu/2)|beta|^2} dlambda(alpha) dlambda(beta).
/// The rule must carry gamma = nu/2.
Bicomplex integrate_bicomplex(const std::function<Bicomplex(const Bicomplex&)>& f, double nu,
                              const QuadratureRule& rule, Parallelism par = {});

/// Several integrands sharing one sweep over the 4D product rule. f writes
/// `outputs` values for the node Z into its span argument.
using BatchIntegrand = std::function<void(const Bicomplex&, std::span<Bicomplex>)>;
std::vector<Bicomplex> integrate_bicomplex_batch(const BatchIntegrand& f, std::size_t outputs, double nu,
                                                 const QuadratureRule& rule, Parallelism par = {});

/// Spaces carrying a Gaussian probability measure c e^{-alpha |u|^2} dlambda.
enum class GaussianSpace { Real, Complex, Complex2, Bicomplex };

/// c_0 = (alpha/pi)^{1/2}, c_1 = alpha/pi, c_2 = c_BC = (alpha/pi)^2.
double normalization_c(GaussianSpace space, double alpha);

/// Runs body(i) for i in [0, n) on up to par.jobs threads.
void parallel_for(std::size_t n, Parallelism par, const std::function<void(std::size_t)>& body);

}  // namespace bicx
