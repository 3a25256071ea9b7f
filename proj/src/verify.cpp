#include "bicx/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "bicx/errors.hpp"
#include "bicx/frft.hpp"
#include "bicx/hermite.hpp"
#include "bicx/json_codec.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/spaces.hpp"
#include "bicx/transforms.hpp"

namespace bicx {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(const Bicomplex& got, const Bicomplex& want) { return norm(got - want) / std::max(1.0, norm(want)); }

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Bicomplex box(double s = 1.0) { return {uniform(-s, s), uniform(-s, s), uniform(-s, s), uniform(-s, s)}; }

  // Uniform direction, radius uniform in [0, r].
  Bicomplex ball(double r) {
    Bicomplex z;
    do {
      z = box();
    } while (norm(z) < 1e-3);
    return (r * uniform(0.0, 1.0) / norm(z)) * z;
  }

  std::vector<Bicomplex> coeffs(std::size_t n, double s = 1.0) {
    std::vector<Bicomplex> c(n);
    for (Bicomplex& z : c) z = box(s);
    return c;
  }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Context {
  VerifyParams p;
  std::vector<ThetaParam> thetas;
  // Pairs (theta, rho) for the semigroup check.
  std::vector<std::pair<ThetaParam, ThetaParam>> pairs;
};

struct CaseDef {
  std::string id;
  std::string desc;
  double tol;
  // Returns the measured error; may append to the description.
  std::function<double(const Context&, Rng&, std::string&)> measure;
};

HermiteCoeffVector unit_vector(unsigned n, double sigma) {
  HermiteCoeffVector v{sigma, std::vector<Bicomplex>(n + 1)};
  v.coeffs[n] = 1.0;
  return v;
}

RealFunction as_function(const HermiteCoeffVector& v) {
  return [v](double x) { return eval_hermite_series(v, x); };
}

// F_theta applied by the integral path to a function that is itself an
// integral-path transform; outer rule gamma = sigma, inner gamma = sigma/2.
struct NestedRules {
  QuadratureRule outer;
  QuadratureRule inner;
};

NestedRules nested_rules(const VerifyParams& p) {
  return {gauss_hermite(p.order, p.sigma), gauss_hermite(std::min(3 * p.order, kMaxOrder), 0.5 * p.sigma)};
}

RealFunction integral_transform(const RealFunction& f, double sigma, const ThetaParam& theta,
                                const QuadratureRule& rule) {
  return [=](double x) { return frft_apply_integral(f, sigma, theta, x, rule); };
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// ---------------------------------------------------------------------------

void algebra_cases(std::vector<CaseDef>& out) {
  out.push_back({"algebra.idempotent_identities", "e+^2=e+, e-^2=e-, e++e-=1, e+-e-=ij, e+e-=0", 0.0,
                 [](const Context&, Rng&, std::string&) {
                   const Bicomplex ep = Bicomplex::e_plus(), em = Bicomplex::e_minus();
                   double e = norm(ep * ep - ep);
                   e = std::max(e, norm(em * em - em));
                   e = std::max(e, norm(ep + em - 1.0));
                   e = std::max(e, norm(ep - em - Bicomplex::ij()));
                   e = std::max(e, norm(ep * em));
                   return e;
                 }});
  out.push_back({"algebra.idempotent_roundtrip_ulp",
                 "from_idempotent(to_idempotent(Z)) on 1e4 random Z, in ulps of the largest field", 4.0,
                 [](const Context&, Rng& rng, std::string&) {
                   double worst = 0.0;
                   for (int k = 0; k < 10000; ++k) {
                     const double scale = std::pow(10.0, rng.uniform(-3.0, 3.0));
                     const Bicomplex z = rng.box(scale);
                     const Bicomplex r = from_idempotent(to_idempotent(z));
                     const double big = std::max({std::abs(z.x1()), std::abs(z.y1()), std::abs(z.x2()),
                                                  std::abs(z.y2())});
                     const double ulp = std::nextafter(big, INFINITY) - big;
                     const double d = std::max({std::abs(r.x1() - z.x1()), std::abs(r.y1() - z.y1()),
                                                std::abs(r.x2() - z.x2()), std::abs(r.y2() - z.y2())});
                     worst = std::max(worst, d / ulp);
                   }
                   return worst;
                 }});
  out.push_back({"algebra.product_matches_definition", "idempotent product vs (z1 w1 - z2 w2) + j(z1 w2 + z2 w1)",
                 1e-14, [](const Context&, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const Bicomplex z = rng.box(), w = rng.box();
                     const Bicomplex direct(z.z1() * w.z1() - z.z2() * w.z2(), z.z1() * w.z2() + z.z2() * w.z1());
                     e = std::max(e, rel_err(z * w, direct));
                   }
                   return e;
                 }});
  out.push_back({"algebra.conjugations", "dagger, tilde, star are involutions with the stated component maps", 0.0,
                 [](const Context&, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const Bicomplex z = rng.box();
                     const IdempotentPair p = to_idempotent(z);
                     e = std::max(e, norm(conj_dagger(conj_dagger(z)) - z));
                     e = std::max(e, norm(conj_tilde(conj_tilde(z)) - z));
                     e = std::max(e, norm(conj_star(conj_star(z)) - z));
                     const IdempotentPair d = to_idempotent(conj_dagger(z));
                     const IdempotentPair t = to_idempotent(conj_tilde(z));
                     const IdempotentPair s = to_idempotent(conj_star(z));
                     e = std::max({e, std::abs(d.alpha - p.beta), std::abs(d.beta - p.alpha)});
                     e = std::max({e, std::abs(t.alpha - std::conj(p.beta)), std::abs(t.beta - std::conj(p.alpha))});
                     e = std::max({e, std::abs(s.alpha - std::conj(p.alpha)), std::abs(s.beta - std::conj(p.beta))});
                   }
                   return e;
                 }});
  out.push_back({"algebra.norm_idempotent", "|Z|^2 = (|alpha|^2 + |beta|^2)/2 = scalar part of <Z, Z>", 1e-14,
                 [](const Context&, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const Bicomplex z = rng.box();
                     const IdempotentPair p = to_idempotent(z);
                     const double n2 = norm(z) * norm(z);
                     e = std::max(e, std::abs(n2 - 0.5 * (std::norm(p.alpha) + std::norm(p.beta))) / n2);
                     e = std::max(e, std::abs(n2 - bc_inner(z, z).x1()) / n2);
                   }
                   return e;
                 }});
  out.push_back({"algebra.inverse", "Z inverse(Z) = 1 off the null cone", 1e-13,
                 [](const Context&, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const Bicomplex z = rng.box();
                     if (is_null_cone(z, 1e-2)) continue;
                     e = std::max(e, norm(z * inverse(z) - 1.0));
                   }
                   return e;
                 }});
  out.push_back({"algebra.sqrt_exp", "sqrt_principal(Z)^2 = Z; exp(Z + W) = exp(Z) exp(W)", 1e-13,
                 [](const Context&, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const Bicomplex z = rng.box(), w = rng.box();
                     const Bicomplex r = sqrt_principal(z);
                     e = std::max(e, norm(r * r - z) / norm(z));
                     e = std::max(e, rel_err(exp(z + w), exp(z) * exp(w)));
                   }
                   return e;
                 }});
}

void hermite_cases(std::vector<CaseDef>& out) {
  out.push_back({"hermite.normalized_recurrence", "psi_n = H_n / ||H_n|| for n <= 30, random x in [-3, 3]", 1e-12,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 50; ++k) {
                     const double x = rng.uniform(-3.0, 3.0) / std::sqrt(c.p.sigma);
                     const std::vector<double> psi = psi_table(30, c.p.sigma, x);
                     for (unsigned n = 0; n <= 30; ++n) {
                       const double h = hermite_sigma(n, c.p.sigma, x) / std::sqrt(hermite_norm_sq(n, c.p.sigma));
                       e = std::max(e, rel_err(psi[n], h));
                     }
                   }
                   return e;
                 }});
  out.push_back({"hermite.bicomplex_recurrence", "psi_table_bc(Z) = H_n(Z)/||H_n|| and restricts to real x", 1e-12,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 50; ++k) {
                     const Bicomplex z = rng.ball(1.5);
                     const std::vector<Bicomplex> psi = psi_table_bc(20, c.p.sigma, z);
                     const double x = z.x1();
                     const std::vector<Bicomplex> psi_x = psi_table_bc(20, c.p.sigma, x);
                     for (unsigned n = 0; n <= 20; ++n) {
                       const double nrm = std::sqrt(hermite_norm_sq(n, c.p.sigma));
                       e = std::max(e, rel_err(psi[n], hermite_sigma_bc(n, c.p.sigma, z) / nrm));
                       e = std::max(e, rel_err(psi_x[n], psi_n(n, c.p.sigma, x)));
                     }
                   }
                   return e;
                 }});
  out.push_back({"hermite.generating_function", "sum_{n<=60} psi_n(x) phi_n(Z*) = G(x; Z), |Z| <= 1, |x| <= 1.5",
                 1e-12, [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 50; ++k) {
                     const Bicomplex z = rng.ball(1.0);
                     const double x = rng.uniform(-1.5, 1.5);
                     e = std::max(e, rel_err(generating_G_series(c.p.sigma, c.p.nu, x, z, 60),
                                             generating_G(c.p.sigma, c.p.nu, x, z)));
                   }
                   return e;
                 }});
  out.push_back({"hermite.orthonormality", "|<psi_m, psi_n> - delta_mn| for m, n <= 12 by Gauss-Hermite", 1e-10,
                 [](const Context& c, Rng&, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, c.p.sigma);
                   double e = 0.0;
                   for (unsigned m = 0; m <= 12; ++m)
                     for (unsigned n = 0; n <= 12; ++n) {
                       const Bicomplex v = inner_L2sigma([&](double x) { return Bicomplex(psi_n(m, c.p.sigma, x)); },
                                                         [&](double x) { return Bicomplex(psi_n(n, c.p.sigma, x)); },
                                                         c.p.sigma, rule);
                       e = std::max(e, norm(v - (m == n ? 1.0 : 0.0)));
                     }
                   return e;
                 }});
}

void quadrature_cases(std::vector<CaseDef>& out) {
  out.push_back({"quadrature.moments", "sum w t^{2k} = Gamma(k+1/2)/gamma^{k+1/2} through the exactness degree",
                 1e-11, [](const Context& c, Rng&, std::string&) {
                   double e = 0.0;
                   for (std::size_t order : {std::size_t{1}, std::size_t{8}, std::size_t{33}, c.p.order}) {
                     const double gamma = c.p.sigma;
                     const QuadratureRule rule = gauss_hermite(order, gamma);
                     for (std::size_t k = 0; 2 * k <= 2 * order - 1; ++k) {
                       double s = 0.0;
                       for (std::size_t i = 0; i < order; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 2.0 * k);
                       const double exact = std::exp(std::lgamma(k + 0.5) - (k + 0.5) * std::log(gamma));
                       e = std::max(e, std::abs(s - exact) / exact);
                     }
                   }
                   return e;
                 }});
  out.push_back({"quadrature.complex_moments", "int_C |xi|^{2k} e^{-gamma |xi|^2} = pi k!/gamma^{k+1}", 1e-12,
                 [](const Context& c, Rng&, std::string&) {
                   const double gamma = 0.5 * c.p.nu;
                   const QuadratureRule rule = gauss_hermite(16, gamma);
                   double e = 0.0;
                   for (int k = 0; k <= 8; ++k) {
                     const Bicomplex v = integrate_complex([k](cplx z) { return Bicomplex(std::pow(std::norm(z), k)); },
                                                           rule);
                     const double exact = kPi * std::tgamma(k + 1.0) / std::pow(gamma, k + 1.0);
                     e = std::max(e, norm(v - exact) / exact);
                   }
                   return e;
                 }});
  out.push_back({"quadrature.bc_gram", "<Z^n, Z^m> = (2^n n!/nu^n) delta over BC for n, m <= 6, relative", 1e-8,
                 [](const Context& c, Rng&, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_bc, 0.5 * c.p.nu);
                   const std::vector<Bicomplex> g = integrate_bicomplex_batch(
                       [](const Bicomplex& z, std::span<Bicomplex> vals) {
                         Bicomplex pw[7];
                         pw[0] = 1.0;
                         for (int n = 1; n <= 6; ++n) pw[n] = pw[n - 1] * z;
                         for (int n = 0; n <= 6; ++n)
                           for (int m = 0; m <= 6; ++m) vals[n * 7 + m] = bc_inner(pw[n], pw[m]);
                       },
                       49, c.p.nu, rule);
                   const double ct = normalization_c(GaussianSpace::Bicomplex, c.p.nu);
                   double e = 0.0;
                   for (unsigned n = 0; n <= 6; ++n)
                     for (unsigned m = 0; m <= 6; ++m) {
                       const double scale = monomial_norm_sq(std::max(n, m), c.p.nu);
                       const double want = n == m ? monomial_norm_sq(n, c.p.nu) : 0.0;
                       e = std::max(e, norm(ct * g[n * 7 + m] - want) / scale);
                     }
                   return e;
                 }});
  out.push_back({"quadrature.jobs_determinism", "4D integral bit-identical with 1 and 3 worker threads", 0.0,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(12, 0.5 * c.p.nu);
                   const Bicomplex w = rng.ball(1.0);
                   auto f = [&](const Bicomplex& z) { return exp(z * conj_star(w)) * pow(z, 3); };
                   const Bicomplex a = integrate_bicomplex(f, c.p.nu, rule, {1});
                   const Bicomplex b = integrate_bicomplex(f, c.p.nu, rule, {3});
                   return a == b ? 0.0 : norm(a - b) + DBL_MIN;
                 }});
}

void spaces_cases(std::vector<CaseDef>& out) {
  out.push_back({"spaces.reproducing", "project_P(Z^n) = Z^n for n <= 6 at 5 random |Z| <= 1.5", 1e-8,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_bc, 0.5 * c.p.nu);
                   std::vector<BicomplexFunction> fs;
                   for (unsigned n = 0; n <= 6; ++n) fs.push_back([n](const Bicomplex& w) { return pow(w, n); });
                   double e = 0.0;
                   for (int k = 0; k < 5; ++k) {
                     const Bicomplex z = rng.ball(1.5);
                     const std::vector<Bicomplex> r = project_P(fs, c.p.nu, z, rule);
                     for (unsigned n = 0; n <= 6; ++n) e = std::max(e, rel_err(r[n], pow(z, n)));
                   }
                   return e;
                 }});
  out.push_back({"spaces.antiholomorphic", "project_P(W*) = 0", 1e-12, [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_bc, 0.5 * c.p.nu);
                   double e = 0.0;
                   for (int k = 0; k < 3; ++k) {
                     const Bicomplex z = rng.ball(1.5);
                     e = std::max(e, norm(project_P([](const Bicomplex& w) { return conj_star(w); }, c.p.nu, z, rule)));
                   }
                   return e;
                 }});
  out.push_back({"spaces.kernel_expansion", "sum_{n<=40} phi_n(Z) phi_n(W)* = e^{(nu/2) Z W*}, |Z|, |W| <= 1.5", 1e-10,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 50; ++k) {
                     const Bicomplex z = rng.ball(1.5), w = rng.ball(1.5);
                     Bicomplex s;
                     for (unsigned n = 0; n <= 40; ++n)
                       s += bc_inner(bargmann_basis(n, c.p.nu, z), bargmann_basis(n, c.p.nu, w));
                     e = std::max(e, rel_err(s, kernel_K_BC(c.p.nu, z, w)));
                   }
                   return e;
                 }});
  out.push_back({"spaces.kernel_symmetry", "K(Z, W) = K(W, Z)*", 1e-13, [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 200; ++k) {
                     const Bicomplex z = rng.ball(1.5), w = rng.ball(1.5);
                     e = std::max(e, rel_err(kernel_K_BC(c.p.nu, z, w), conj_star(kernel_K_BC(c.p.nu, w, z))));
                   }
                   return e;
                 }});
  out.push_back({"spaces.parseval", "coefficient inner product = integral inner product, random degree <= 6", 1e-8,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_bc, 0.5 * c.p.nu);
                   double e = 0.0;
                   for (int k = 0; k < 3; ++k) {
                     const MonomialCoeffVector f{c.p.nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 7)))};
                     const MonomialCoeffVector g{c.p.nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 7)))};
                     const Bicomplex integral =
                         inner_H2nu([&](const Bicomplex& z) { return eval_monomial_series(f, z); },
                                    [&](const Bicomplex& z) { return eval_monomial_series(g, z); }, c.p.nu, rule);
                     e = std::max(e, rel_err(integral, inner_H2nu(f, g)));
                   }
                   return e;
                 }});
  out.push_back({"spaces.idempotent_norm", "||f||^2 = (||phi+||^2 + ||phi-||^2)/2 with complex weight nu/2", 1e-13,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 100; ++k) {
                     const MonomialCoeffVector f{c.p.nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 13)))};
                     const auto [plus, minus] = idempotent_split_F(f);
                     const double split = 0.5 * (complex_bargmann_norm_sq(plus, 0.5 * c.p.nu) +
                                                 complex_bargmann_norm_sq(minus, 0.5 * c.p.nu));
                     e = std::max(e, std::abs(split - norm_sq(f)) / norm_sq(f));
                     const MonomialCoeffVector back = idempotent_combine_F(plus, minus, c.p.nu);
                     for (std::size_t n = 0; n < f.size(); ++n) e = std::max(e, norm(back.coeffs[n] - f.coeffs[n]));
                   }
                   return e;
                 }});
  out.push_back({"spaces.pointwise_bound", "|f(Z)| <= sqrt(2) |e^{(nu/4) Z Z*}| ||f||; error = excess ratio", 0.0,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 500; ++k) {
                     const MonomialCoeffVector f{c.p.nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 7)))};
                     const Bicomplex z = rng.ball(3.0);
                     const double bound = std::sqrt(2.0) * norm(exp((c.p.nu / 4.0) * (z * conj_star(z)))) *
                                          std::sqrt(norm_sq(f));
                     e = std::max(e, norm(eval_monomial_series(f, z)) / bound - 1.0);
                   }
                   return std::max(e, 0.0);
                 }});
}

void transforms_cases(std::vector<CaseDef>& out) {
  out.push_back({"transforms.isometry", "<B phi, B psi> = <phi, psi> on random degree <= 10 vectors", 1e-10,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 100; ++k) {
                     const HermiteCoeffVector f{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 11)))};
                     const HermiteCoeffVector g{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 11)))};
                     e = std::max(e, rel_err(inner_H2nu(sbt_forward(f, c.p.nu), sbt_forward(g, c.p.nu)),
                                             inner_L2sigma(f, g)));
                     e = std::max(e, rel_err(norm_sq(sbt_forward(f, c.p.nu)), norm_sq(f)));
                   }
                   return e;
                 }});
  out.push_back({"transforms.integral_vs_coefficient",
                 "sbt_forward_integral = eval(sbt_forward) at 10 random (Z, phi), degree <= 10, |Z| <= 2", 1e-8,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, c.p.sigma);
                   double e = 0.0;
                   for (int k = 0; k < 10; ++k) {
                     const HermiteCoeffVector f{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 11)))};
                     const Bicomplex z = rng.ball(2.0);
                     e = std::max(e, rel_err(sbt_forward_integral(as_function(f), c.p.sigma, c.p.nu, z, rule),
                                             eval_monomial_series(sbt_forward(f, c.p.nu), z)));
                   }
                   return e;
                 }});
  out.push_back({"transforms.hermite_action", "sbt_forward_integral(psi_n) = phi_n(Z) for n <= 10, |Z| <= 2", 1e-8,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, c.p.sigma);
                   double e = 0.0;
                   for (int k = 0; k < 5; ++k) {
                     const Bicomplex z = rng.ball(2.0);
                     for (unsigned n = 0; n <= 10; ++n) {
                       const Bicomplex v = sbt_forward_integral(
                           [&](double x) { return Bicomplex(psi_n(n, c.p.sigma, x)); }, c.p.sigma, c.p.nu, z, rule);
                       e = std::max(e, rel_err(v, bargmann_basis(n, c.p.nu, z)));
                     }
                   }
                   return e;
                 }});
  out.push_back({"transforms.kernel_identities",
                 "kernel idempotent split matches complex kernels; kernel = c0 e^{-sigma x^2} G(x; Z*)", 1e-13,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 200; ++k) {
                     const Bicomplex z = rng.ball(2.0);
                     const double x = rng.uniform(-2.0, 2.0);
                     const Bicomplex kz = sbt_kernel_BC(c.p.sigma, c.p.nu, x, z);
                     const IdempotentPair p = to_idempotent(z);
                     const Bicomplex split = from_idempotent({sbt_kernel_C(c.p.sigma, 0.5 * c.p.nu, x, p.alpha),
                                                              sbt_kernel_C(c.p.sigma, 0.5 * c.p.nu, x, p.beta)});
                     e = std::max(e, rel_err(kz, split));
                     const Bicomplex gen = normalization_c(GaussianSpace::Real, c.p.sigma) *
                                           std::exp(-c.p.sigma * x * x) *
                                           generating_G(c.p.sigma, c.p.nu, x, conj_star(z));
                     e = std::max(e, rel_err(kz, gen));
                   }
                   return e;
                 }});
  out.push_back({"transforms.roundtrip_coefficient", "sbt_inverse_coeff(sbt_forward(phi)) = phi", 1e-13,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (int k = 0; k < 100; ++k) {
                     const HermiteCoeffVector f{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 21)))};
                     const HermiteCoeffVector r = sbt_inverse_coeff(sbt_forward(f, c.p.nu), c.p.sigma);
                     for (std::size_t n = 0; n < f.size(); ++n) e = std::max(e, rel_err(r.coeffs[n], f.coeffs[n]));
                   }
                   return e;
                 }});
  out.push_back({"transforms.inverse_integral",
                 "integral inverse of B(psi_n) = psi_n(x) for n <= 6, x in {0, +-0.7, +-1.5}", 1e-7,
                 [](const Context& c, Rng&, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_inverse, 0.5 * c.p.nu);
                   const std::vector<double> xs{0.0, 0.7, -0.7, 1.5, -1.5};
                   std::vector<BicomplexFunction> fs;
                   for (unsigned n = 0; n <= 6; ++n) {
                     const MonomialCoeffVector f = sbt_forward(unit_vector(n, c.p.sigma), c.p.nu);
                     fs.push_back([f](const Bicomplex& z) { return eval_monomial_series(f, z); });
                   }
                   const auto r = sbt_inverse_integral(fs, c.p.sigma, c.p.nu, xs, rule);
                   double e = 0.0;
                   for (unsigned n = 0; n <= 6; ++n)
                     for (std::size_t k = 0; k < xs.size(); ++k)
                       e = std::max(e, rel_err(r[n][k], psi_n(n, c.p.sigma, xs[k])));
                   return e;
                 }});
  out.push_back({"transforms.s_transform", "S(xi^n) = Z^n for n <= 5 at 5 points (kernel e^{+(nu/2) Z conj(xi)})",
                 1e-8, [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, 0.5 * c.p.nu);
                   double e = 0.0;
                   for (int k = 0; k < 5; ++k) {
                     const Bicomplex z = rng.ball(1.5);
                     for (unsigned n = 0; n <= 5; ++n) {
                       const Bicomplex v = s_transform([n](cplx xi) { return Bicomplex(ipow(xi, n)); }, c.p.nu, z, rule);
                       e = std::max(e, rel_err(v, pow(z, n)));
                     }
                   }
                   return e;
                 }});
  out.push_back({"transforms.s_norm_transport", "||S(xi^n)||^2 over BC = ||xi^n||^2 in the complex space, n <= 5",
                 1e-8, [](const Context& c, Rng&, std::string&) {
                   // Z^n conj(Z^n) is a polynomial of degree 10 per real coordinate: 6 nodes are exact.
                   const QuadratureRule outer = gauss_hermite(6, 0.5 * c.p.nu);
                   const QuadratureRule inner = gauss_hermite(c.p.order, 0.5 * c.p.nu);
                   double e = 0.0;
                   for (unsigned n = 0; n <= 5; ++n) {
                     const BicomplexFunction s = [&, n](const Bicomplex& z) {
                       return s_transform([n](cplx xi) { return Bicomplex(ipow(xi, n)); }, c.p.nu, z, inner);
                     };
                     const double got = inner_H2nu(s, s, c.p.nu, outer).x1();
                     std::vector<cplx> en(n + 1);
                     en[n] = 1.0;
                     const double want = complex_bargmann_norm_sq(en, 0.5 * c.p.nu);
                     e = std::max(e, std::abs(got - want) / want);
                   }
                   return e;
                 }});
  out.push_back({"transforms.s_surjectivity", "S applied to f restricted to C + j0 reproduces f, degree <= 5", 1e-7,
                 [](const Context& c, Rng& rng, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, 0.5 * c.p.nu);
                   double e = 0.0;
                   for (int k = 0; k < 5; ++k) {
                     const MonomialCoeffVector f{c.p.nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 6)))};
                     const Bicomplex z = rng.ball(1.5);
                     const Bicomplex v = s_transform([&](cplx xi) { return eval_monomial_series(f, xi); }, c.p.nu, z, rule);
                     e = std::max(e, rel_err(v, eval_monomial_series(f, z)));
                   }
                   return e;
                 }});
}

void frft_cases(std::vector<CaseDef>& out) {
  const std::vector<double> ys{0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5};

  out.push_back({"frft.kernel_decay", "Re(sigma/(1 - theta^2)) = sigma/2 per component on the torus", 1e-14,
                 [](const Context& c, Rng&, std::string&) {
                   double e = 0.0;
                   for (const ThetaParam& t : c.thetas) {
                     const IdempotentPair d = to_idempotent(inverse(1.0 - t.theta() * t.theta()));
                     e = std::max({e, std::abs(d.alpha.real() - 0.5), std::abs(d.beta.real() - 0.5)});
                   }
                   return e;
                 }});
  out.push_back({"frft.kernel_mehler", "frft_kernel = c0 e^{-sigma x^2} mehler_closed(theta) on the torus", 1e-13,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   const double c0 = normalization_c(GaussianSpace::Real, c.p.sigma);
                   for (const ThetaParam& t : c.thetas)
                     for (int k = 0; k < 50; ++k) {
                       const double x = rng.uniform(-2.0, 2.0), y = rng.uniform(-2.0, 2.0);
                       const Bicomplex m = c0 * std::exp(-c.p.sigma * x * x) * mehler_closed(c.p.sigma, t.theta(), x, y);
                       e = std::max(e, rel_err(frft_kernel(c.p.sigma, t, x, y), m));
                     }
                   return e;
                 }});
  out.push_back({"frft.ck_restriction", "ck_frft_kernel(x, y + j0) = frft_kernel(x, y); ck = c0 e^{-sigma x^2} bilinear",
                 1e-13, [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   const double c0 = normalization_c(GaussianSpace::Real, c.p.sigma);
                   for (const ThetaParam& t : c.thetas)
                     for (int k = 0; k < 50; ++k) {
                       const double x = rng.uniform(-2.0, 2.0), y = rng.uniform(-2.0, 2.0);
                       e = std::max(e, rel_err(ck_frft_kernel(c.p.sigma, t, x, y), frft_kernel(c.p.sigma, t, x, y)));
                       const Bicomplex z = rng.ball(1.0);
                       const Bicomplex b = c0 * std::exp(-c.p.sigma * x * x) * mehler_bilinear_bc(c.p.sigma, t.theta(), z, x);
                       e = std::max(e, rel_err(ck_frft_kernel(c.p.sigma, t, x, z), b));
                     }
                   return e;
                 }});
  out.push_back({"frft.eigenfunctions", "integral path F_theta psi_n = theta^n psi_n, n <= 8, 7 points, each theta", 1e-8,
                 [ys](const Context& c, Rng&, std::string&) {
                   const QuadratureRule rule = gauss_hermite(c.p.order, 0.5 * c.p.sigma);
                   double e = 0.0;
                   for (const ThetaParam& t : c.thetas)
                     for (unsigned n = 0; n <= 8; ++n)
                       for (double y : ys) {
                         const Bicomplex v = frft_apply_integral([&](double x) { return Bicomplex(psi_n(n, c.p.sigma, x)); },
                                                                 c.p.sigma, t, y, rule);
                         e = std::max(e, rel_err(v, pow(t.theta(), n) * psi_n(n, c.p.sigma, y)));
                       }
                   return e;
                 }});
  out.push_back({"frft.plancherel", "<F psi, F psi> = <psi, psi> via the integral path, random degree <= 8", 1e-9,
                 [](const Context& c, Rng& rng, std::string&) {
                   const NestedRules r = nested_rules(c.p);
                   double e = 0.0;
                   for (const ThetaParam& t : c.thetas) {
                     const HermiteCoeffVector psi{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 9)))};
                     const RealFunction f = integral_transform(as_function(psi), c.p.sigma, t, r.inner);
                     e = std::max(e, rel_err(inner_L2sigma(f, f, c.p.sigma, r.outer), inner_L2sigma(psi, psi)));
                   }
                   return e;
                 }});
  out.push_back({"frft.inversion", "F_{theta*}(F_theta psi) = psi via the integral path, psi_3 and random degree <= 8",
                 1e-8, [](const Context& c, Rng& rng, std::string&) {
                   const NestedRules r = nested_rules(c.p);
                   double e = 0.0;
                   for (const ThetaParam& t : c.thetas) {
                     for (const HermiteCoeffVector& psi :
                          {unit_vector(3, c.p.sigma),
                           HermiteCoeffVector{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 9)))}}) {
                       const RealFunction f = integral_transform(as_function(psi), c.p.sigma, t, r.inner);
                       for (double x : {0.0, 0.7, -0.7, 1.5, -1.5})
                         e = std::max(e, rel_err(frft_inverse_integral(f, c.p.sigma, t, x, r.outer),
                                                 eval_hermite_series(psi, x)));
                     }
                   }
                   return e;
                 }});
  out.push_back({"frft.semigroup", "F_theta(F_rho psi_n) = (theta rho)^n psi_n via the integral path, n <= 4", 1e-7,
                 [](const Context& c, Rng&, std::string&) {
                   const NestedRules r = nested_rules(c.p);
                   double e = 0.0;
                   for (const auto& [t, rho] : c.pairs)
                     for (unsigned n = 0; n <= 4; ++n) {
                       const RealFunction f = integral_transform(
                           [&](double x) { return Bicomplex(psi_n(n, c.p.sigma, x)); }, c.p.sigma, rho, r.inner);
                       const Bicomplex tr = t.theta() * rho.theta();
                       for (double y : {0.0, 0.7, -0.7, 1.5, -1.5})
                         e = std::max(e, rel_err(frft_apply_integral(f, c.p.sigma, t, y, r.outer),
                                                 pow(tr, n) * psi_n(n, c.p.sigma, y)));
                     }
                   return e;
                 }});
  out.push_back({"frft.uniqueness", "coefficient path is injective: F_theta* F_theta psi = psi exactly", 1e-14,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = 0.0;
                   for (const ThetaParam& t : c.thetas)
                     for (int k = 0; k < 50; ++k) {
                       const HermiteCoeffVector psi{c.p.sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 13)))};
                       const HermiteCoeffVector back = frft_inverse(frft_apply(psi, t), t);
                       for (std::size_t n = 0; n < psi.size(); ++n) e = std::max(e, rel_err(back.coeffs[n], psi.coeffs[n]));
                     }
                   return e;
                 }});
  out.push_back({"frft.factorization", "F_theta psi = B^{-1}(Gamma_theta B psi) via 4D integrals, degree <= 6", 1e-7,
                 [](const Context& c, Rng& rng, std::string& desc) {
                   const QuadratureRule rule = gauss_hermite(c.p.order_inverse, 0.5 * c.p.nu);
                   const QuadratureRule line = gauss_hermite(c.p.order, 0.5 * c.p.sigma);
                   const std::vector<double> xs{0.0, 0.7, -0.7, 1.5, -1.5};
                   std::vector<HermiteCoeffVector> psis;
                   std::vector<const ThetaParam*> owner;
                   std::vector<BicomplexFunction> fs;
                   for (const ThetaParam& t : c.thetas)
                     for (int k = 0; k < 2; ++k) {
                       psis.push_back({c.p.sigma, rng.coeffs(7)});
                       owner.push_back(&t);
                       const MonomialCoeffVector f = sbt_forward(psis.back(), c.p.nu);
                       const Bicomplex th = t.theta();
                       fs.push_back([f, th](const Bicomplex& z) { return eval_monomial_series(f, th * z); });
                     }
                   const auto r = sbt_inverse_integral(fs, c.p.sigma, c.p.nu, xs, rule);
                   double e = 0.0, e_star = 0.0;
                   for (std::size_t i = 0; i < fs.size(); ++i)
                     for (std::size_t k = 0; k < xs.size(); ++k) {
                       const RealFunction f = as_function(psis[i]);
                       e = std::max(e, rel_err(r[i][k], frft_apply_integral(f, c.p.sigma, *owner[i], xs[k], line)));
                       e_star = std::max(e_star, rel_err(r[i][k], frft_inverse_integral(f, c.p.sigma, *owner[i], xs[k], line)));
                     }
                   desc += "; kernel with theta: " + fmt(e) + ", with theta*: " + fmt(e_star);
                   return e;
                 }});
  out.push_back({"frft.mehler_series", "mehler_series(N=60) = mehler_closed at 6 interior theta", 1e-10,
                 [](const Context& c, Rng&, std::string&) {
                   struct Pt {
                     cplx a, b;
                     double x, y;
                   };
                   const std::vector<Pt> pts{
                       {0.5, 0.5, 0.3, -0.4},
                       {std::polar(0.7, kPi / 5), 0.6, 0.3, -0.4},
                       {std::polar(0.6, -1.1), std::polar(0.3, 2.5), 0.5, 0.2},
                       {cplx(0.0, 0.45), -0.55, -0.6, 0.8},
                       {0.5, 0.0, 0.4, 0.1},
                       {std::polar(0.6, 0.4), std::polar(0.6, -2.0), 1.0, -0.5},
                   };
                   double e = 0.0;
                   for (const Pt& p : pts) {
                     const Bicomplex th = from_idempotent({p.a, p.b});
                     e = std::max(e, rel_err(mehler_series(c.p.sigma, th, p.x, p.y, 60),
                                             mehler_closed(c.p.sigma, th, p.x, p.y)));
                   }
                   return e;
                 }});
  out.push_back({"frft.mehler_bilinear", "bilinear series(N=60) = closed form with bicomplex Z", 1e-9,
                 [](const Context& c, Rng& rng, std::string&) {
                   double e = rel_err(mehler_bilinear_series(c.p.sigma, 0.5, Bicomplex(0.2, 0.0, 0.1, 0.0), 0.3, 60),
                                      mehler_bilinear_bc(c.p.sigma, 0.5, Bicomplex(0.2, 0.0, 0.1, 0.0), 0.3));
                   const Bicomplex th = from_idempotent({std::polar(0.5, 0.3), std::polar(0.4, -1.2)});
                   for (int k = 0; k < 20; ++k) {
                     const Bicomplex z = rng.ball(0.6);
                     const double y = rng.uniform(-0.6, 0.6);
                     e = std::max(e, rel_err(mehler_bilinear_series(c.p.sigma, th, z, y, 60),
                                             mehler_bilinear_bc(c.p.sigma, th, z, y)));
                   }
                   return e;
                 }});
  out.push_back({"frft.gaussian_integral", "closed-form complex Gaussian integral vs 2D Gauss-Hermite, 10 random cases",
                 1e-10, [](const Context& c, Rng& rng, std::string&) {
                   const double gamma_max = 1.5;
                   double e = 0.0;
                   for (int k = 0; k < 10; ++k) {
                     const double gamma = rng.uniform(0.8, gamma_max);
                     const cplx a = std::polar(rng.uniform(0.0, 0.2 * gamma), rng.uniform(-kPi, kPi));
                     const cplx b = std::polar(rng.uniform(0.0, 0.2 * gamma), rng.uniform(-kPi, kPi));
                     const cplx cc(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
                     const cplx d(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
                     const QuadratureRule rule = gauss_hermite(c.p.order, gamma);
                     const Bicomplex q = integrate_complex(
                         [&](cplx z) {
                           const cplx zb = std::conj(z);
                           return Bicomplex(std::exp(a * z * z + b * zb * zb + cc * z + d * zb));
                         },
                         rule);
                     const cplx want = gaussian_integral_closed(gamma, a, b, cc, d);
                     e = std::max(e, std::abs(q.z1() - want) / std::max(1.0, std::abs(want)) + std::abs(q.z2()));
                   }
                   return e;
                 }});
  out.push_back({"frft.theta_i", "theta = i: integral path eigenvalues i^n for n <= 8 (Fourier ladder)", 1e-9,
                 [ys](const Context& c, Rng&, std::string&) {
                   const ThetaParam t = ThetaParam::unit_torus(Bicomplex::i());
                   const QuadratureRule rule = gauss_hermite(c.p.order, 0.5 * c.p.sigma);
                   double e = 0.0;
                   for (unsigned n = 0; n <= 8; ++n)
                     for (double y : ys) {
                       const Bicomplex v = frft_apply_integral([&](double x) { return Bicomplex(psi_n(n, c.p.sigma, x)); },
                                                               c.p.sigma, t, y, rule);
                       e = std::max(e, rel_err(v, Bicomplex(ipow(cplx(0.0, 1.0), n)) * psi_n(n, c.p.sigma, y)));
                     }
                   return e;
                 }});
}

using SuiteBuilder = void (*)(std::vector<CaseDef>&);

const std::vector<std::pair<std::string, SuiteBuilder>>& registry() {
  static const std::vector<std::pair<std::string, SuiteBuilder>> r{
      {"algebra", algebra_cases},   {"hermite", hermite_cases},       {"quadrature", quadrature_cases},
      {"spaces", spaces_cases},     {"transforms", transforms_cases}, {"frft", frft_cases},
  };
  return r;
}

Context make_context(const VerifyParams& p) {
  HermiteParams::make(p.sigma, p.nu);
  for (std::size_t o : {p.order, p.order_bc, p.order_inverse})
    if (o == 0 || o > kMaxOrder) throw ConfigError("quadrature order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  Context c{p, {}, {}};
  if (p.theta) {
    const ThetaParam t = ThetaParam::unit_torus(*p.theta);
    c.thetas = {t};
    c.pairs = {{t, t}};
  } else {
    c.thetas = {ThetaParam::from_phases(kPi / 3, kPi / 2), ThetaParam::from_phases(2 * kPi / 3, -kPi / 2),
                ThetaParam::from_phases(-kPi / 3, 2.0), ThetaParam::from_phases(1.2, -2.2)};
    c.pairs = {{c.thetas[0], c.thetas[3]}, {c.thetas[1], c.thetas[2]}};
  }
  return c;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

VerificationReport run_verification(const std::string& suite, const VerifyParams& params) {
  std::vector<CaseDef> defs;
  for (const auto& [name, build] : registry())
    if (suite == "all" || suite == name) build(defs);
  if (defs.empty()) throw ConfigError("unknown suite \"" + suite + "\"");
  const Context ctx = make_context(params);

  std::vector<CaseResult> results(defs.size());
  parallel_for(defs.size(), {params.jobs}, [&](std::size_t i) {
    const CaseDef& d = defs[i];
    CaseResult& r = results[i];
    r.id = d.id;
    r.desc = d.desc;
    r.tol = d.tol;
    Rng rng(params.seed ^ fnv1a(d.id));
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.error = d.measure(ctx, rng, r.desc);
      if (!std::isfinite(r.error)) {
        r.desc += "; non-finite error";
        r.error = DBL_MAX;
      }
    } catch (const std::exception& e) {
      r.desc += std::string("; exception: ") + e.what();
      r.error = DBL_MAX;
    }
    r.pass = r.error <= r.tol;
    if (params.timings)
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  return {suite, params, std::move(results)};
}

nlohmann::json report_json(const VerificationReport& report) {
  using nlohmann::json;
  const VerifyParams& p = report.params;
  json params{{"sigma", p.sigma},   {"nu", p.nu},
              {"order", p.order},   {"order_bc", p.order_bc},
              {"order_inverse", p.order_inverse},
              {"seed", p.seed},     {"jobs", p.jobs},
              {"theta", p.theta ? to_json(*p.theta) : json(nullptr)}};
  json cases = json::array();
  for (const CaseResult& c : report.cases)
    cases.push_back({{"id", c.id},
                     {"desc", c.desc},
                     {"error", c.error},
                     {"tol", c.tol},
                     {"pass", c.pass},
                     {"ms", c.ms ? json(*c.ms) : json(nullptr)}});
  // Conventions fixed where the source formulas disagree: the S transform kernel
  // sign and the FrFT kernel parameter (theta rather than theta*).
  const json conventions{{"s_transform_kernel", "exp(+(nu/2) Z conj(xi))"},
                         {"frft_kernel", "exp(-sigma (x - theta y)^2 / (1 - theta^2))"}};
  return json{{"suite", report.suite},
              {"params", params},
              {"conventions", conventions},
              {"all_pass", report.all_pass()},
              {"cases", cases}};
}

std::string report_csv(const VerificationReport& report) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  std::string out = "id,desc,error,tol,pass,ms\n";
  for (const CaseResult& c : report.cases) {
    out += quote(c.id) + "," + quote(c.desc) + "," + num(c.error) + "," + num(c.tol) + "," +
           (c.pass ? "true" : "false") + "," + (c.ms ? num(*c.ms) : "") + "\n";
  }
  return out;
}

}  // namespace bicx
