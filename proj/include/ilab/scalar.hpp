#ifndef ILAB_SCALAR_HPP
#define ILAB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ilab {

/// Arbitrary-precision rational number.
using Rational = mpq_class;

/// Rational from numerator/denominator, canonicalized.
Rational ratio(long num, long den = 1);

int sign(const Rational& r);
double toDouble(const Rational& r);
std::string to_string(const Rational& r);

/// An element of the real quadratic extension field Q(sqrt2, sqrt3),
/// stored as a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational components.
/// The span {1, sqrt2, sqrt3, sqrt6} is closed under multiplication
/// (sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2),
/// and every nonzero element is invertible, so all field operations are
/// exact. Covers every coefficient occurring in the basis tables
/// (1/4, 1/(4*sqrt3), 1/sqrt6, sqrt3/sqrt2, ...).
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(int v) : a_(v) {}          // NOLINT: implicit by design
  ExactReal(long v) : a_(v) {}         // NOLINT
  ExactReal(const Rational& v) : a_(v) {}  // NOLINT
  ExactReal(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static ExactReal sqrt2() { return {0, 1, 0, 0}; }
  static ExactReal sqrt3() { return {0, 0, 1, 0}; }
  static ExactReal sqrt6() { return {0, 0, 0, 1}; }

  const Rational& rationalPart() const { return a_; }
  const Rational& sqrt2Part() const { return b_; }
  const Rational& sqrt3Part() const { return c_; }
  const Rational& sqrt6Part() const { return d_; }

  bool isZero() const;
  bool isRational() const;
  /// Exact rational value; throws std::domain_error if a radical part is nonzero.
  Rational asRational() const;

  double toDouble() const;
  std::string toString() const;

  ExactReal operator-() const { return {-a_, -b_, -c_, -d_}; }
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const ExactReal& o);
  ExactReal& operator/=(const ExactReal& o);

  /// Multiplicative inverse; throws std::domain_error on zero.
  ExactReal inverse() const;

  friend ExactReal operator+(ExactReal l, const ExactReal& r) { return l += r; }
  friend ExactReal operator-(ExactReal l, const ExactReal& r) { return l -= r; }
  friend ExactReal operator*(ExactReal l, const ExactReal& r) { return l *= r; }
  friend ExactReal operator/(ExactReal l, const ExactReal& r) { return l /= r; }
  friend bool operator==(const ExactReal& l, const ExactReal& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const ExactReal& l, const ExactReal& r) { return !(l == r); }

 private:
  // Galois conjugates: sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3 respectively.
  ExactReal conj2() const { return {a_, -b_, c_, -d_}; }
  ExactReal conj3() const { return {a_, b_, -c_, -d_}; }

  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const ExactReal& v);

// Uniform coefficient helpers so exterior-algebra templates work over both
// the exact field and plain doubles.
inline bool isZero(const ExactReal& v) { return v.isZero(); }
inline bool isZero(double v) { return v == 0.0; }
inline double toDouble(const ExactReal& v) { return v.toDouble(); }
inline double toDouble(double v) { return v; }

}  // namespace ilab

#endif  // ILAB_SCALAR_HPP
