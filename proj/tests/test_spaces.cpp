#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bicx/errors.hpp"
#include "bicx/hermite.hpp"
#include "bicx/quadrature.hpp"
#include "bicx/spaces.hpp"
#include "oracles.hpp"

using namespace bicx;

namespace {

constexpr double kPi = std::numbers::pi;
const Bicomplex ep = Bicomplex::e_plus();
const Bicomplex em = Bicomplex::e_minus();

HermiteCoeffVector unit_h(unsigned n, double sigma, Bicomplex c = 1.0) {
  HermiteCoeffVector v{sigma, std::vector<Bicomplex>(n + 1)};
  v.coeffs[n] = c;
  return v;
}

MonomialCoeffVector unit_m(unsigned n, double nu) {
  MonomialCoeffVector v{nu, std::vector<Bicomplex>(n + 1)};
  v.coeffs[n] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("kernel_K_C examples") {
  CHECK(kernel_K_C(1.7, 0.0, cplx(0.3, 2.0)) == cplx(1.0));
  CHECK(std::abs(kernel_K_C(1.0, 1.0, 1.0) - std::numbers::e) <= 1e-15);
  // Reproducing check for xi^2 by the trapezoid oracle.
  const double gamma = 1.2;
  const cplx z(0.4, -0.3);
  const cplx v = gamma / kPi * oracle::trapezoid2<cplx>(
                                   [&](cplx xi) { return kernel_K_C(gamma, z, xi) * xi * xi * std::exp(-gamma * std::norm(xi)); },
                                   9.0, 300);
  CHECK(std::abs(v - z * z) <= 1e-12);
}

TEST_CASE("kernel_K_BC examples") {
  CHECK(kernel_K_BC(2.0, 0.0, Bicomplex(0.1, 0.2, 0.3, 0.4)) == Bicomplex(1.0));
  CHECK(oracle::rel(kernel_K_BC(1.5, 0.6, -0.8), std::exp(0.75 * 0.6 * -0.8)) <= 1e-15);
  oracle::Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const Bicomplex z = rng.ball(1.5), w = rng.ball(1.5);
    const IdempotentPair a = to_idempotent(z), b = to_idempotent(w);
    const Bicomplex split = oracle::from_components(kernel_K_C(1.0, a.alpha, b.alpha), kernel_K_C(1.0, a.beta, b.beta));
    CHECK(oracle::rel(kernel_K_BC(2.0, z, w), split) <= 1e-14);
    CHECK(oracle::rel(kernel_K_BC(2.0, z, w), conj_star(kernel_K_BC(2.0, w, z))) <= 1e-13);
  }
}

TEST_CASE("inner_L2sigma in coefficient form") {
  for (unsigned n = 0; n < 5; ++n) CHECK(inner_L2sigma(unit_h(n, 1.0), unit_h(n, 1.0)) == Bicomplex(1.0));
  CHECK(inner_L2sigma(unit_h(1, 1.0), unit_h(3, 1.0)) == Bicomplex());
  CHECK(inner_L2sigma(unit_h(0, 1.0, ep), unit_h(0, 1.0, em)) == Bicomplex());
  CHECK_THROWS_AS(inner_L2sigma(unit_h(0, 1.0), unit_h(0, 2.0)), DimensionMismatch);
  // Conjugate-linear in the second slot.
  const Bicomplex t(0.2, 0.5, -0.3, 0.1);
  HermiteCoeffVector g = unit_h(2, 1.0, 1.0);
  HermiteCoeffVector tg = unit_h(2, 1.0, t);
  CHECK(oracle::rel(inner_L2sigma(g, tg), conj_star(t)) <= 1e-15);
}

TEST_CASE("grid inner product equals coefficient form for degree <= 12") {
  oracle::Rng rng(32);
  for (double sigma : {0.7, 1.0, 2.0}) {
    const QuadratureRule rule = gauss_hermite(64, sigma);
    for (int k = 0; k < 5; ++k) {
      const HermiteCoeffVector f{sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 13)))};
      const HermiteCoeffVector g{sigma, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 13)))};
      const Bicomplex grid = inner_L2sigma([&](double x) { return eval_hermite_series(f, x); },
                                           [&](double x) { return eval_hermite_series(g, x); }, sigma, rule);
      CHECK(oracle::rel(grid, inner_L2sigma(f, g)) <= 1e-9);
      const Bicomplex self = inner_L2sigma([&](double x) { return eval_hermite_series(f, x); },
                                           [&](double x) { return eval_hermite_series(f, x); }, sigma, rule);
      CHECK(std::abs(self.x1() - norm_sq(f)) <= 1e-9 * norm_sq(f));
    }
    CHECK_THROWS_AS(inner_L2sigma([](double) { return Bicomplex(1.0); }, [](double) { return Bicomplex(1.0); }, 2 * sigma,
                                  rule),
                    DimensionMismatch);
  }
}

TEST_CASE("norm_sq of a Hermite vector is the scalar part of <phi, phi>") {
  oracle::Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    const HermiteCoeffVector f{1.0, rng.coeffs(6)};
    double s = 0.0;
    for (const Bicomplex& c : f.coeffs) s += norm_sq(c);
    CHECK(norm_sq(f) == doctest::Approx(s).epsilon(1e-14));
    CHECK(inner_L2sigma(f, f).x1() == doctest::Approx(s).epsilon(1e-14));
  }
  // e+ psi_0 has |<phi, phi>| = 1/sqrt(2) but norm^2 = 1/2.
  CHECK(norm_sq(unit_h(0, 1.0, ep)) == doctest::Approx(0.5));
}

TEST_CASE("monomial_norm_sq and bargmann_basis") {
  CHECK(monomial_norm_sq(0, 3.0) == 1.0);
  CHECK(monomial_norm_sq(2, 2.0) == 2.0);
  CHECK(monomial_norm_sq(3, 1.0) == 48.0);
  CHECK(std::isfinite(monomial_norm_sq(160, 2.0)));
  CHECK(monomial_norm_sq(160, 2.0) == doctest::Approx(std::exp(std::lgamma(161.0))).epsilon(1e-11));
  const Bicomplex z(0.3, 0.1, -0.2, 0.4);
  CHECK(oracle::rel(bargmann_basis(1, 2.0, z), z) <= 1e-15);
  CHECK(oracle::rel(bargmann_basis(2, 1.0, z), z * z / std::sqrt(8.0)) <= 1e-15);
  // ||Z^3||^2 at nu = 1 by the 4D rule.
  const QuadratureRule rule = gauss_hermite(8, 0.5);
  const double v = inner_H2nu([](const Bicomplex& w) { return pow(w, 3); }, [](const Bicomplex& w) { return pow(w, 3); },
                              1.0, rule)
                       .x1();
  CHECK(v == doctest::Approx(48.0).epsilon(1e-12));
}

TEST_CASE("inner_H2nu coefficient form") {
  CHECK(inner_H2nu(unit_m(0, 2.0), unit_m(0, 2.0)) == Bicomplex(1.0));
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= 6; ++m) {
      const Bicomplex v = inner_H2nu(unit_m(n, 1.5), unit_m(m, 1.5));
      CHECK(oracle::rel(v, n == m ? monomial_norm_sq(n, 1.5) : 0.0) <= 1e-15);
    }
  for (unsigned n = 0; n <= 8; ++n) {
    MonomialCoeffVector phi{2.0, std::vector<Bicomplex>(n + 1)};
    phi.coeffs[n] = 1.0 / std::sqrt(monomial_norm_sq(n, 2.0));
    CHECK(oracle::rel(inner_H2nu(phi, phi), 1.0) <= 1e-14);
  }
  CHECK_THROWS_AS(inner_H2nu(unit_m(0, 2.0), unit_m(0, 1.0)), DimensionMismatch);
}

TEST_CASE("inner_H2nu integral form matches coefficients for degree <= 8") {
  oracle::Rng rng(34);
  const double nu = 2.0;
  const QuadratureRule rule = gauss_hermite(12, nu / 2);
  for (int k = 0; k < 3; ++k) {
    const MonomialCoeffVector f{nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 9)))};
    const MonomialCoeffVector g{nu, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 9)))};
    const Bicomplex v = inner_H2nu([&](const Bicomplex& z) { return eval_monomial_series(f, z); },
                                   [&](const Bicomplex& z) { return eval_monomial_series(g, z); }, nu, rule);
    CHECK(oracle::rel(v, inner_H2nu(f, g)) <= 1e-8);
    const Bicomplex self = inner_H2nu([&](const Bicomplex& z) { return eval_monomial_series(f, z); },
                                      [&](const Bicomplex& z) { return eval_monomial_series(f, z); }, nu, rule);
    CHECK(std::abs(self.x1() - norm_sq(f)) <= 1e-8 * norm_sq(f));
  }
}

TEST_CASE("project_P examples") {
  const double nu = 2.0;
  const QuadratureRule rule = gauss_hermite(24, nu / 2);
  const Bicomplex z(0.3, 0.0, 0.1, 0.0);
  CHECK(oracle::rel(project_P([](const Bicomplex&) { return Bicomplex(1.0); }, nu, z, rule), 1.0) <= 1e-12);
  CHECK(oracle::rel(project_P([](const Bicomplex& w) { return w * w; }, nu, z, rule), z * z) <= 1e-12);
  CHECK(norm(project_P([](const Bicomplex& w) { return conj_star(w); }, nu, z, rule)) <= 1e-12);
  CHECK_THROWS_AS(project_P([](const Bicomplex&) { return Bicomplex(NAN); }, nu, z, rule), NonFiniteError);
}

TEST_CASE("reproducing property for Z^n, n <= 6, at random |Z| <= 1.5") {
  const double nu = 2.0;
  const QuadratureRule rule = gauss_hermite(24, nu / 2);
  std::vector<BicomplexFunction> fs;
  for (unsigned n = 0; n <= 6; ++n) fs.push_back([n](const Bicomplex& w) { return pow(w, n); });
  oracle::Rng rng(35);
  for (int k = 0; k < 5; ++k) {
    const Bicomplex z = rng.ball(1.5);
    const std::vector<Bicomplex> r = project_P(fs, nu, z, rule);
    for (unsigned n = 0; n <= 6; ++n) CHECK(oracle::rel(r[n], pow(z, n)) <= 1e-8);
  }
}

TEST_CASE("kernel expansion with 40 terms") {
  oracle::Rng rng(36);
  for (double nu : {1.0, 2.0}) {
    for (int k = 0; k < 30; ++k) {
      const Bicomplex z = rng.ball(1.5), w = rng.ball(1.5);
      Bicomplex s;
      for (unsigned n = 0; n <= 40; ++n) s += bargmann_basis(n, nu, z) * conj_star(bargmann_basis(n, nu, w));
      CHECK(oracle::rel(s, kernel_K_BC(nu, z, w)) <= 1e-10);
    }
  }
}

TEST_CASE("eval_monomial_series") {
  oracle::Rng rng(37);
  const Bicomplex z = rng.box();
  CHECK(eval_monomial_series({2.0, {1.0}}, z) == Bicomplex(1.0));
  CHECK(oracle::rel(eval_monomial_series({2.0, {0.0, 1.0}}, Bicomplex::j()), Bicomplex::j()) <= 1e-16);
  for (int k = 0; k < 100; ++k) {
    const MonomialCoeffVector f{2.0, rng.coeffs(9)};
    const Bicomplex w = rng.box(1.5);
    Bicomplex direct;
    Bicomplex p = 1.0;
    for (const Bicomplex& c : f.coeffs) {
      direct += oracle::mul_direct(c, p);
      p = oracle::mul_direct(p, w);
    }
    CHECK(oracle::rel(eval_monomial_series(f, w), direct) <= 1e-13);
    // Componentwise Horner on phi+ and phi-.
    const auto [plus, minus] = idempotent_split_F(f);
    const IdempotentPair a = to_idempotent(w);
    cplx hp = 0.0, hm = 0.0;
    for (std::size_t n = plus.size(); n-- > 0;) {
      hp = hp * a.alpha + plus[n];
      hm = hm * a.beta + minus[n];
    }
    CHECK(oracle::rel(eval_monomial_series(f, w), oracle::from_components(hp, hm)) <= 1e-13);
  }
}

TEST_CASE("idempotent_split_F") {
  const auto [p1, m1] = idempotent_split_F({2.0, {1.5, -0.5, 2.0}});
  CHECK(p1 == m1);
  const auto [p2, m2] = idempotent_split_F({2.0, {ep}});
  REQUIRE(p2.size() == 1);
  CHECK(p2[0] == cplx(1.0));
  CHECK(m2[0] == cplx(0.0));
  oracle::Rng rng(38);
  for (int k = 0; k < 50; ++k) {
    const MonomialCoeffVector f{1.0, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 12)))};
    const auto [plus, minus] = idempotent_split_F(f);
    const double split = 0.5 * (complex_bargmann_norm_sq(plus, 0.5) + complex_bargmann_norm_sq(minus, 0.5));
    CHECK(std::abs(split - norm_sq(f)) <= 1e-13 * norm_sq(f));
    const MonomialCoeffVector back = idempotent_combine_F(plus, minus, 1.0);
    for (std::size_t n = 0; n < f.size(); ++n) CHECK(norm(back.coeffs[n] - f.coeffs[n]) <= 1e-15);
  }
}

TEST_CASE("pointwise bound |f(Z)| <= sqrt(2) |e^{(nu/4) Z Z*}| ||f||") {
  oracle::Rng rng(39);
  for (int k = 0; k < 500; ++k) {
    const MonomialCoeffVector f{2.0, rng.coeffs(static_cast<std::size_t>(rng.integer(1, 7)))};
    const Bicomplex z = rng.ball(3.0);
    const double bound = std::sqrt(2.0) * norm(exp(0.5 * (z * conj_star(z)))) * std::sqrt(norm_sq(f));
    CHECK(norm(eval_monomial_series(f, z)) <= bound);
  }
}
