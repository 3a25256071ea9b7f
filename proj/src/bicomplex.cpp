#include "bicx/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bicx/errors.hpp"

namespace bicx {

Bicomplex conj_dagger(const Bicomplex& z) { return {z.x1(), z.y1(), -z.x2(), -z.y2()}; }

Bicomplex conj_tilde(const Bicomplex& z) { return {z.x1(), -z.y1(), z.x2(), -z.y2()}; }

Bicomplex conj_star(const Bicomplex& z) { return {z.x1(), -z.y1(), -z.x2(), z.y2()}; }

double norm_sq(const Bicomplex& z) {
  return z.x1() * z.x1() + z.y1() * z.y1() + z.x2() * z.x2() + z.y2() * z.y2();
}

double norm(const Bicomplex& z) {
  const double m = std::max({std::abs(z.x1()), std::abs(z.y1()), std::abs(z.x2()), std::abs(z.y2())});
  if (m == 0.0 || !std::isfinite(m)) return m;
  const Bicomplex s = z * (1.0 / m);
  return m * std::sqrt(norm_sq(s));
}

Bicomplex exp(const Bicomplex& z) {
  const IdempotentPair p = to_idempotent(z);
  return from_idempotent({std::exp(p.alpha), std::exp(p.beta)});
}

cplx ipow(cplx z, unsigned n) {
  cplx result = 1.0;
  while (n != 0) {
    if (n & 1U) result *= z;
    n >>= 1U;
    if (n != 0) z *= z;
  }
  return result;
}

Bicomplex pow(const Bicomplex& z, unsigned n) {
  const IdempotentPair p = to_idempotent(z);
  return from_idempotent({ipow(p.alpha, n), ipow(p.beta, n)});
}

namespace {

bool on_branch_cut(cplx c) { return c.imag() == 0.0 && c.real() < 0.0; }

}  // namespace

Bicomplex sqrt_principal(const Bicomplex& z) {
  const IdempotentPair p = to_idempotent(z);
  if (on_branch_cut(p.alpha) || on_branch_cut(p.beta)) {
    std::ostringstream msg;
    msg << "sqrt_principal: idempotent component on the negative real axis for Z = " << z;
    throw BranchCutError(msg.str());
  }
  return from_idempotent({std::sqrt(p.alpha), std::sqrt(p.beta)});
}

bool is_null_cone(const Bicomplex& z, double tol) {
  const IdempotentPair p = to_idempotent(z);
  return std::min(std::abs(p.alpha), std::abs(p.beta)) <= tol;
}

Bicomplex inverse(const Bicomplex& z, double tol) {
  if (is_null_cone(z, tol)) {
    std::ostringstream msg;
    msg << "inverse: " << z << " is a zero divisor";
    throw NullConeError(msg.str());
  }
  const IdempotentPair p = to_idempotent(z);
  return from_idempotent({1.0 / p.alpha, 1.0 / p.beta});
}

Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) { return a * inverse(b); }

Bicomplex bc_inner(const Bicomplex& z, const Bicomplex& w) { return z * conj_star(w); }

bool is_finite(const Bicomplex& z) {
  return std::isfinite(z.x1()) && std::isfinite(z.y1()) && std::isfinite(z.x2()) &&
         std::isfinite(z.y2());
}

std::ostream& operator<<(std::ostream& os, const Bicomplex& z) {
  return os << '[' << z.x1() << ", " << z.y1() << ", " << z.x2() << ", " << z.y2() << ']';
}

}  // namespace bicx
