#include "bicx/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "bicx/errors.hpp"

namespace bicx {

namespace {

// Orthonormal Hermite functions q_j(t) = p_j(t) e^{-t^2/2} for weight e^{-t^2},
// evaluated through j = n. Returns {q_{n-1}, q_n, sum_{j<n} q_j^2}.
struct OrthoEval {
  double q_prev;
  double q_n;
  double sum_sq;
};

OrthoEval ortho_eval(std::size_t n, double t) {
  double q0 = std::exp(-0.5 * t * t) / std::pow(std::numbers::pi, 0.25);
  double sum_sq = q0 * q0;
  double q1 = std::numbers::sqrt2 * t * q0;
  if (n == 1) return {q0, q1, sum_sq};
  for (std::size_t k = 1; k < n; ++k) {
    sum_sq += q1 * q1;
    const double q2 = std::sqrt(2.0 / (k + 1.0)) * t * q1 - std::sqrt(k / (k + 1.0)) * q0;
    q0 = q1;
    q1 = q2;
  }
  return {q0, q1, sum_sq};
}

std::vector<double> jacobi_nodes(std::size_t n) {
  if (n == 1) return {0.0};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
  for (std::size_t k = 1; k < n; ++k) sub[static_cast<Eigen::Index>(k - 1)] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "gauss_hermite: Jacobi eigen-solve failed for order " << n;
    throw ConvergenceError(msg.str());
  }
  std::vector<double> nodes(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

QuadratureRule standard_rule(std::size_t n) {
  std::vector<double> nodes = jacobi_nodes(n);
  // One Newton step on q_n; q_n' = sqrt(2n) q_{n-1} at a root.
  for (double& t : nodes) {
    const OrthoEval e = ortho_eval(n, t);
    if (e.q_prev != 0.0) t -= e.q_n / (std::sqrt(2.0 * n) * e.q_prev);
  }
  // Enforce exact symmetry about the origin.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double t = 0.5 * (nodes[n - 1 - k] - nodes[k]);
    nodes[k] = -t;
    nodes[n - 1 - k] = t;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;

  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = nodes[k];
    // w = 1 / sum_j p_j(t)^2 = e^{-t^2} / sum_j q_j(t)^2
    weights[k] = std::exp(-t * t) / ortho_eval(n, t).sum_sq;
  }
  for (std::size_t k = 0; k < n / 2; ++k) weights[n - 1 - k] = weights[k];
  return {1.0, std::move(nodes), std::move(weights)};
}

template <class T>
T cascade(const T* v, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return cascade(v, h) + cascade(v + h, n - h);
}

void check_finite(const Bicomplex& v, const char* where) {
  if (!is_finite(v)) throw NonFiniteError(std::string(where) + ": integrand is not finite at a quadrature node");
}

void check_rule_gamma(const QuadratureRule& rule, double gamma, const char* where) {
  if (std::abs(rule.gamma - gamma) > 1e-14 * gamma) {
    std::ostringstream msg;
    msg << where << ": rule weight exponent " << rule.gamma << " does not match required " << gamma;
    throw DomainError(msg.str());
  }
}

}  // namespace

QuadratureRule gauss_hermite(std::size_t order, double gamma) {
  if (order == 0 || order > kMaxOrder) {
    std::ostringstream msg;
    msg << "gauss_hermite: order must lie in [1, " << kMaxOrder << "], got " << order;
    throw DomainError(msg.str());
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gauss_hermite: gamma must be positive");
  QuadratureRule rule = standard_rule(order);
  if (gamma != 1.0) {
    const double s = std::sqrt(gamma);
    for (double& t : rule.nodes) t /= s;
    for (double& w : rule.weights) w /= s;
    rule.gamma = gamma;
  }
  return rule;
}

Bicomplex pairwise_sum(std::span<const Bicomplex> values) { return cascade(values.data(), values.size()); }

void parallel_for(std::size_t n, Parallelism par, const std::function<void(std::size_t)>& body) {
  unsigned jobs = par.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : par.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += jobs) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Bicomplex integrate_real(const std::function<Bicomplex(double)>& f, const QuadratureRule& rule) {
  std::vector<Bicomplex> terms(rule.order());
  for (std::size_t k = 0; k < rule.order(); ++k) {
    const Bicomplex v = f(rule.nodes[k]);
    check_finite(v, "integrate_real");
    terms[k] = rule.weights[k] * v;
  }
  return pairwise_sum(terms);
}

Bicomplex integrate_complex(const std::function<Bicomplex(cplx)>& f, const QuadratureRule& rule) {
  const std::size_t m = rule.order();
  std::vector<Bicomplex> terms(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Bicomplex v = f(cplx(rule.nodes[a], rule.nodes[b]));
      check_finite(v, "integrate_complex");
      terms[a * m + b] = (rule.weights[a] * rule.weights[b]) * v;
    }
  }
  return pairwise_sum(terms);
}

std::vector<Bicomplex> integrate_bicomplex_batch(const BatchIntegrand& f, std::size_t outputs, double nu,
                                                 const QuadratureRule& rule, Parallelism par) {
  check_rule_gamma(rule, 0.5 * nu, "integrate_bicomplex");
  const std::size_t m = rule.order();
  const std::size_t plane = m * m;
  // Partial sums over the beta plane, one row of `outputs` per alpha node.
  std::vector<Bicomplex> outer(plane * outputs);

  parallel_for(plane, par, [&](std::size_t ia) {
    const cplx alpha(rule.nodes[ia / m], rule.nodes[ia % m]);
    const double wa = rule.weights[ia / m] * rule.weights[ia % m];
    thread_local std::vector<Bicomplex> inner, value;
    inner.resize(plane * outputs);
    value.resize(outputs);
    for (std::size_t ib = 0; ib < plane; ++ib) {
      const cplx beta(rule.nodes[ib / m], rule.nodes[ib % m]);
      const double wb = rule.weights[ib / m] * rule.weights[ib % m];
      f(from_idempotent({alpha, beta}), value);
      for (std::size_t o = 0; o < outputs; ++o) {
        check_finite(value[o], "integrate_bicomplex");
        inner[o * plane + ib] = wb * value[o];
      }
    }
    for (std::size_t o = 0; o < outputs; ++o)
      outer[o * plane + ia] = wa * cascade(inner.data() + o * plane, plane);
  });

  std::vector<Bicomplex> result(outputs);
  for (std::size_t o = 0; o < outputs; ++o) result[o] = 0.25 * cascade(outer.data() + o * plane, plane);
  return result;
}

Bicomplex integrate_bicomplex(const std::function<Bicomplex(const Bicomplex&)>& f, double nu,
                              const QuadratureRule& rule, Parallelism par) {
  return integrate_bicomplex_batch([&f](const Bicomplex& z, std::span<Bicomplex> out) { out[0] = f(z); }, 1, nu,
                                   rule, par)[0];
}

double normalization_c(GaussianSpace space, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("normalization_c: alpha must be positive");
  const double r = alpha / std::numbers::pi;
  switch (space) {
    case GaussianSpace::Real:
      return std::sqrt(r);
    case GaussianSpace::Complex:
      return r;
    case GaussianSpace::Complex2:
    case GaussianSpace::Bicomplex:
      return r * r;
  }
  return r;
}

}  // namespace bicx
