#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "bicx/bicomplex.hpp"
#include "bicx/errors.hpp"
#include "bicx/json_codec.hpp"
#include "oracles.hpp"

using namespace bicx;

namespace {

const Bicomplex ep = Bicomplex::e_plus();
const Bicomplex em = Bicomplex::e_minus();

bool close(const Bicomplex& a, const Bicomplex& b, double tol = 1e-15) { return norm(a - b) <= tol; }

}  // namespace

TEST_CASE("to_idempotent examples") {
  CHECK(to_idempotent(1.0) == IdempotentPair{1.0, 1.0});
  CHECK(to_idempotent(Bicomplex::j()) == IdempotentPair{cplx(0, -1), cplx(0, 1)});
  CHECK(to_idempotent(Bicomplex(0.5, 0.0, 0.0, 0.5)) == IdempotentPair{1.0, 0.0});
}

TEST_CASE("from_idempotent examples") {
  CHECK(from_idempotent({1.0, 1.0}) == Bicomplex(1.0));
  CHECK(from_idempotent({1.0, 0.0}) == ep);
  CHECK(from_idempotent({1.0, -1.0}) == Bicomplex::ij());
}

TEST_CASE("idempotent identities are exact") {
  CHECK(ep * ep == ep);
  CHECK(em * em == em);
  CHECK(ep + em == Bicomplex(1.0));
  CHECK(ep - em == Bicomplex::ij());
  CHECK(ep * em == Bicomplex());
}

TEST_CASE("multiplication examples") {
  CHECK(Bicomplex::ij() * Bicomplex::ij() == Bicomplex(1.0));
  const Bicomplex z(0.3, -1.2, 2.5, 0.7);
  CHECK(close(z * Bicomplex(1.0), z, 1e-15));
  CHECK(Bicomplex::j() * Bicomplex::j() == Bicomplex(-1.0));
  CHECK(Bicomplex::i() * Bicomplex::j() == Bicomplex::ij());
}

TEST_CASE("product agrees with the (z1, z2) definition and is componentwise") {
  oracle::Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const Bicomplex z = rng.box(3.0), w = rng.box(3.0);
    CHECK(oracle::rel(z * w, oracle::mul_direct(z, w)) <= 1e-14);
    const IdempotentPair p = to_idempotent(z * w);
    const IdempotentPair a = to_idempotent(z), b = to_idempotent(w);
    CHECK(std::abs(p.alpha - a.alpha * b.alpha) <= 1e-14 * std::max(1.0, std::abs(a.alpha * b.alpha)));
    CHECK(std::abs(p.beta - a.beta * b.beta) <= 1e-14 * std::max(1.0, std::abs(a.beta * b.beta)));
  }
}

TEST_CASE("conjugation examples") {
  CHECK(conj_star(Bicomplex::j()) == -Bicomplex::j());
  CHECK(conj_dagger(1.0) == Bicomplex(1.0));
  CHECK(conj_tilde(Bicomplex::i()) == -Bicomplex::i());
  CHECK(conj_dagger(ep) == em);
  CHECK(conj_star(ep) == ep);
}

TEST_CASE("conjugations are involutions and star is multiplicative") {
  oracle::Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const Bicomplex z = rng.box(), w = rng.box();
    CHECK(conj_dagger(conj_dagger(z)) == z);
    CHECK(conj_tilde(conj_tilde(z)) == z);
    CHECK(conj_star(conj_star(z)) == z);
    CHECK(close(conj_star(z * w), conj_star(z) * conj_star(w), 1e-15));
    const IdempotentPair p = to_idempotent(z);
    const IdempotentPair t = to_idempotent(conj_tilde(z));
    CHECK(std::abs(t.alpha - std::conj(p.beta)) <= 1e-15);
    CHECK(std::abs(t.beta - std::conj(p.alpha)) <= 1e-15);
  }
}

TEST_CASE("Euclidean norm") {
  CHECK(norm(1.0) == 1.0);
  CHECK(norm(ep) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(norm(Bicomplex::ij()) == 1.0);
  oracle::Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const Bicomplex z = rng.box();
    const IdempotentPair p = to_idempotent(z);
    const double n2 = norm(z) * norm(z);
    CHECK(std::abs(n2 - 0.5 * (std::norm(p.alpha) + std::norm(p.beta))) <= 1e-14 * n2);
    CHECK(std::abs(norm_sq(z) - n2) <= 1e-14 * n2);
  }
}

TEST_CASE("modulus of <Z, Z> differs from |Z|^2 unless |alpha| = |beta|") {
  // |<e+, e+>| = |e+| = 1/sqrt(2) while |e+|^2 = 1/2; the scalar part is |Z|^2.
  CHECK(norm(bc_inner(ep, ep)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(bc_inner(ep, ep).x1() == doctest::Approx(0.5));
  const Bicomplex z(0.3, 0.4, 0.0, 0.0);
  CHECK(norm(bc_inner(z, z)) == doctest::Approx(norm_sq(z)).epsilon(1e-15));
}

TEST_CASE("generalized Schwarz inequality |<Z, W>| <= sqrt(2) |Z| |W|") {
  oracle::Rng rng(14);
  for (int k = 0; k < 2000; ++k) {
    const Bicomplex z = rng.box(), w = rng.box();
    CHECK(norm(bc_inner(z, w)) <= std::sqrt(2.0) * norm(z) * norm(w) * (1 + 1e-15));
  }
}

TEST_CASE("exp examples") {
  CHECK(exp(0.0) == Bicomplex(1.0));
  CHECK(close(exp(Bicomplex(0.0, std::numbers::pi, 0.0, 0.0)), -1.0, 1e-15));
  CHECK(close(exp(std::numbers::ln2 * ep), Bicomplex(1.5, 0.0, 0.0, 0.5), 1e-15));
  oracle::Rng rng(15);
  for (int k = 0; k < 200; ++k) {
    const Bicomplex z = rng.box(), w = rng.box();
    CHECK(oracle::rel(exp(z + w), exp(z) * exp(w)) <= 1e-14);
  }
}

TEST_CASE("pow equals repeated multiplication for n <= 16") {
  oracle::Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const Bicomplex z = rng.box(1.2);
    Bicomplex acc = 1.0;
    for (unsigned n = 0; n <= 16; ++n) {
      CHECK(norm(pow(z, n) - acc) <= 1e-12 * std::max(1.0, norm(acc)));
      acc = oracle::mul_direct(acc, z);
    }
  }
}

TEST_CASE("sqrt_principal") {
  CHECK(close(sqrt_principal(1.0 - Bicomplex::i() * Bicomplex::i()), std::sqrt(2.0)));
  CHECK(close(sqrt_principal(4.0 * ep + 9.0 * em), 2.0 * ep + 3.0 * em));
  CHECK(sqrt_principal(1.0) == Bicomplex(1.0));
  CHECK_THROWS_AS(sqrt_principal(-1.0), BranchCutError);
  CHECK_THROWS_AS(sqrt_principal(ep - 2.0 * em), BranchCutError);
  oracle::Rng rng(17);
  for (int k = 0; k < 500; ++k) {
    const Bicomplex z = rng.box();
    const Bicomplex r = sqrt_principal(z);
    CHECK(norm(r * r - z) <= 1e-13 * norm(z));
    const IdempotentPair p = to_idempotent(r);
    CHECK(p.alpha.real() >= 0.0);
    CHECK(p.beta.real() >= 0.0);
  }
}

TEST_CASE("inverse and division") {
  CHECK(inverse(2.0) == Bicomplex(0.5));
  CHECK(close(inverse(Bicomplex::ij()), Bicomplex::ij()));
  CHECK_THROWS_AS(inverse(ep), NullConeError);
  CHECK_THROWS_AS(Bicomplex(1.0) / em, NullConeError);
  oracle::Rng rng(18);
  for (int k = 0; k < 500; ++k) {
    const Bicomplex z = rng.box();
    if (is_null_cone(z, 1e-2)) continue;
    CHECK(norm(z * inverse(z) - 1.0) <= 1e-13);
    const Bicomplex w = rng.box();
    CHECK(oracle::rel((w / z) * z, w) <= 1e-13);
  }
}

TEST_CASE("null cone") {
  CHECK(is_null_cone(em));
  CHECK_FALSE(is_null_cone(1.0 + Bicomplex::j()));
  CHECK(is_null_cone(0.0));
  CHECK(is_null_cone(ep + 1e-13 * em));
  CHECK_FALSE(is_null_cone(ep + 1e-13 * em, 1e-14));
}

TEST_CASE("bc_inner examples") {
  CHECK(bc_inner(Bicomplex::j(), Bicomplex::j()) == Bicomplex(1.0));
  CHECK(bc_inner(1.0, 1.0) == Bicomplex(1.0));
  CHECK(bc_inner(ep, em) == Bicomplex());
}

TEST_CASE("idempotent round trip within 4 ulp of the largest field") {
  oracle::Rng rng(19);
  for (int k = 0; k < 10000; ++k) {
    const Bicomplex z = rng.box(std::pow(10.0, rng.uniform(-5.0, 5.0)));
    const Bicomplex r = from_idempotent(to_idempotent(z));
    const double big = std::max({std::abs(z.x1()), std::abs(z.y1()), std::abs(z.x2()), std::abs(z.y2())});
    const double ulp = std::nextafter(big, INFINITY) - big;
    CHECK(std::abs(r.x1() - z.x1()) <= 4 * ulp);
    CHECK(std::abs(r.y1() - z.y1()) <= 4 * ulp);
    CHECK(std::abs(r.x2() - z.x2()) <= 4 * ulp);
    CHECK(std::abs(r.y2() - z.y2()) <= 4 * ulp);
  }
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Bicomplex(1, 2, 3, 4);
  CHECK(os.str() == "[1, 2, 3, 4]");
}

TEST_CASE("JSON scalar encodings") {
  const Bicomplex z(0.1, -2.0, 3.5, 0.0);
  CHECK(to_json(z).dump() == "[0.1,-2.0,3.5,0.0]");
  CHECK(bicomplex_from_json(to_json(z)) == z);
  const IdempotentPair p{cplx(1, 2), cplx(-3, 0.5)};
  CHECK(idempotent_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"({"alpha":[1.0,2.0],"beta":[-3.0,0.5]})");
  CHECK_THROWS_AS(bicomplex_from_json(nlohmann::json::array({1, 2, 3})), ConfigError);
  CHECK_THROWS_AS(bicomplex_from_json(nlohmann::json::parse(R"([1, "a", 0, 0])")), ConfigError);
  CHECK_THROWS_AS(idempotent_from_json(nlohmann::json::parse(R"({"alpha": [1, 0]})")), ConfigError);
  CHECK(parse_bicomplex("1,2,3,4") == Bicomplex(1, 2, 3, 4));
  CHECK(parse_bicomplex("0.5") == Bicomplex(0.5));
  CHECK(parse_bicomplex("0.5,-1") == Bicomplex(0.5, -1.0, 0.0, 0.0));
  CHECK_THROWS_AS(parse_bicomplex("1,2,3"), ConfigError);
  CHECK_THROWS_AS(parse_bicomplex("1,x,3,4"), ConfigError);
}
