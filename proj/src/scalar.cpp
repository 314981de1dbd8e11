#include "ilab/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ilab {

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }

double toDouble(const Rational& r) { return r.get_d(); }

std::string to_string(const Rational& r) { return r.get_str(); }

bool ExactReal::isZero() const {
  return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
}

bool ExactReal::isRational() const {
  return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
}

Rational ExactReal::asRational() const {
  if (!isRational()) throw std::domain_error("ExactReal: not rational: " + toString());
  return a_;
}

double ExactReal::toDouble() const {
  static const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  return a_.get_d() + b_.get_d() * s2 + c_.get_d() * s3 + d_.get_d() * s6;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  a_ += o.a_; b_ += o.b_; c_ += o.c_; d_ += o.d_;
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
  a_ -= o.a_; b_ -= o.b_; c_ -= o.c_; d_ -= o.d_;
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
  // (a1 + b1 r2 + c1 r3 + d1 r6)(a2 + b2 r2 + c2 r3 + d2 r6) with
  // r2*r3 = r6, r2*r6 = 2 r3, r3*r6 = 3 r2.
  Rational a = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
  Rational b = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
  Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(a); b_ = std::move(b); c_ = std::move(c); d_ = std::move(d);
  return *this;
}

ExactReal ExactReal::inverse() const {
  if (isZero()) throw std::domain_error("ExactReal: division by zero");
  // First clear sqrt3: z * conj3(z) lies in Q(sqrt2), then clear sqrt2.
  ExactReal w = *this * conj3();
  ExactReal num = conj3() * w.conj2();  // z^{-1} * N with N rational below
  ExactReal nfull = w * w.conj2();
  Rational n = nfull.asRational();
  Rational inv = 1 / n;
  return {num.a_ * inv, num.b_ * inv, num.c_ * inv, num.d_ * inv};
}

ExactReal& ExactReal::operator/=(const ExactReal& o) { return *this *= o.inverse(); }

std::string ExactReal::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coef, const char* radical) {
    if (sgn(coef) == 0) return;
    Rational c = coef;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    if (radical[0] == '\0') {
      os << c.get_str();
    } else if (c == 1) {
      os << radical;
    } else if (c == -1) {
      os << "-" << radical;
    } else {
      os << c.get_str() << "*" << radical;
    }
  };
  emit(a_, "");
  emit(b_, "sqrt2");
  emit(c_, "sqrt3");
  emit(d_, "sqrt6");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactReal& v) { return os << v.toString(); }

}  // namespace ilab
