#pragma once

#include <complex>
#include <iosfwd>

namespace bicx {

using cplx = std::complex<double>;

/// Default absolute tolerance on min(|alpha|, |beta|) for zero-divisor tests.
inline constexpr double kNullConeTol = 1e-12;

/// Components of Z = alpha e+ + beta e- with e+- = (1 +- ij)/2.
///
/// Multiplication is componentwise, which is what makes this the working
/// representation for every product, power and transcendental function.
struct IdempotentPair {
  cplx alpha;
  cplx beta;

  friend IdempotentPair operator+(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
  }
  friend IdempotentPair operator-(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.alpha - b.alpha, a.beta - b.beta};
  }
  friend IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.alpha * b.alpha, a.beta * b.beta};
  }
  friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// Bicomplex (tetra) number Z = z1 + j z2 with z1 = x1 + i y1, z2 = x2 + i y2.
///
/// Storage is the four real fields of the (z1, z2) form. Real and complex
/// scalars convert implicitly; a complex scalar lands in C + j{0}.
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  constexpr Bicomplex(double x1, double y1, double x2, double y2)
      : x1_(x1), y1_(y1), x2_(x2), y2_(y2) {}
  constexpr Bicomplex(double re) : x1_(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Bicomplex(cplx z)                   // NOLINT(google-explicit-constructor)
      : x1_(z.real()), y1_(z.imag()) {}
  constexpr Bicomplex(cplx z1, cplx z2)
      : x1_(z1.real()), y1_(z1.imag()), x2_(z2.real()), y2_(z2.imag()) {}

  static constexpr Bicomplex i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Bicomplex j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Bicomplex ij() { return {0.0, 0.0, 0.0, 1.0}; }
  static constexpr Bicomplex e_plus() { return {0.5, 0.0, 0.0, 0.5}; }
  static constexpr Bicomplex e_minus() { return {0.5, 0.0, 0.0, -0.5}; }

  constexpr double x1() const { return x1_; }
  constexpr double y1() const { return y1_; }
  constexpr double x2() const { return x2_; }
  constexpr double y2() const { return y2_; }
  constexpr cplx z1() const { return {x1_, y1_}; }
  constexpr cplx z2() const { return {x2_, y2_}; }

  Bicomplex& operator+=(const Bicomplex& w) {
    x1_ += w.x1_;
    y1_ += w.y1_;
    x2_ += w.x2_;
    y2_ += w.y2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& w) {
    x1_ -= w.x1_;
    y1_ -= w.y1_;
    x2_ -= w.x2_;
    y2_ -= w.y2_;
    return *this;
  }
  Bicomplex& operator*=(double s) {
    x1_ *= s;
    y1_ *= s;
    x2_ *= s;
    y2_ *= s;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& w);

  friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  double x1_ = 0.0;
  double y1_ = 0.0;
  double x2_ = 0.0;
  double y2_ = 0.0;
};

// alpha = z1 - i z2, beta = z1 + i z2.
constexpr IdempotentPair to_idempotent(const Bicomplex& z) {
  return {cplx(z.x1() + z.y2(), z.y1() - z.x2()), cplx(z.x1() - z.y2(), z.y1() + z.x2())};
}

// z1 = (alpha + beta)/2, z2 = i (alpha - beta)/2.
constexpr Bicomplex from_idempotent(const IdempotentPair& p) {
  const double ar = p.alpha.real(), ai = p.alpha.imag();
  const double br = p.beta.real(), bi = p.beta.imag();
  return {0.5 * (ar + br), 0.5 * (ai + bi), 0.5 * (bi - ai), 0.5 * (ar - br)};
}

inline Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
inline Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
inline Bicomplex operator-(const Bicomplex& a) { return {-a.x1(), -a.y1(), -a.x2(), -a.y2()}; }
inline Bicomplex operator*(Bicomplex a, double s) { return a *= s; }
inline Bicomplex operator*(double s, Bicomplex a) { return a *= s; }
inline Bicomplex operator/(Bicomplex a, double s) { return a *= 1.0 / s; }

inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
  return from_idempotent(to_idempotent(a) * to_idempotent(b));
}
inline Bicomplex& Bicomplex::operator*=(const Bicomplex& w) { return *this = *this * w; }

/// Z^dagger = z1 - j z2: swaps the idempotent components.
Bicomplex conj_dagger(const Bicomplex& z);
/// Z~ = conj(z1) + j conj(z2): (alpha, beta) -> (conj beta, conj alpha).
Bicomplex conj_tilde(const Bicomplex& z);
/// Z* = conj(z1) - j conj(z2): conjugates each idempotent component.
Bicomplex conj_star(const Bicomplex& z);

/// Euclidean norm in R^4.
double norm(const Bicomplex& z);
/// |z1|^2 + |z2|^2 = (|alpha|^2 + |beta|^2)/2.
double norm_sq(const Bicomplex& z);

Bicomplex exp(const Bicomplex& z);
Bicomplex pow(const Bicomplex& z, unsigned n);

/// Componentwise principal square root. Throws BranchCutError when a
/// component sits on the negative real axis.
Bicomplex sqrt_principal(const Bicomplex& z);

/// Throws NullConeError when min(|alpha|, |beta|) <= tol.
Bicomplex inverse(const Bicomplex& z, double tol = kNullConeTol);
Bicomplex operator/(const Bicomplex& a, const Bicomplex& b);

bool is_null_cone(const Bicomplex& z, double tol = kNullConeTol);

/// <Z, W> = Z W* = alpha conj(alpha') e+ + beta conj(beta') e-.
Bicomplex bc_inner(const Bicomplex& z, const Bicomplex& w);

bool is_finite(const Bicomplex& z);

/// Integer power of a complex number by repeated squaring.
cplx ipow(cplx z, unsigned n);

std::ostream& operator<<(std::ostream& os, const Bicomplex& z);

}  // namespace bicx
