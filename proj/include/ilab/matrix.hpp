#ifndef ILAB_MATRIX_HPP
#define ILAB_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "ilab/scalar.hpp"

namespace ilab {

/// Small dense square matrix over S (row-major). Sized for n <= 8 ambient
/// dimensions but works for any n.
template <class S>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, S(0)) {
    if (n <= 0) throw std::invalid_argument("SquareMatrix: nonpositive size");
  }

  int size() const { return n_; }
  const S& operator()(int r, int c) const { return e_[idx(r, c)]; }
  S& operator()(int r, int c) { return e_[idx(r, c)]; }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Elementary matrix E_{kl} (1-based), 1 in entry (k,l).
  static SquareMatrix elementary(int n, int k, int l) {
    SquareMatrix m(n);
    m(k - 1, l - 1) = S(1);
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  bool isSkew() const {
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c <= r; ++c)
        if (!isZero((*this)(r, c) + (*this)(c, r))) return false;
    return true;
  }

  bool isZeroMatrix() const {
    for (const S& v : e_)
      if (!isZero(v)) return false;
    return true;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  SquareMatrix& operator*=(const S& s) {
    for (S& v : e_) v *= s;
    return *this;
  }
  SquareMatrix operator-() const {
    SquareMatrix m(n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
  }

  friend SquareMatrix operator+(SquareMatrix l, const SquareMatrix& r) { return l += r; }
  friend SquareMatrix operator-(SquareMatrix l, const SquareMatrix& r) { return l -= r; }
  friend SquareMatrix operator*(const S& s, SquareMatrix m) { return m *= s; }
  friend SquareMatrix operator*(SquareMatrix m, const S& s) { return m *= s; }

  friend SquareMatrix operator*(const SquareMatrix& l, const SquareMatrix& r) {
    l.check(r);
    SquareMatrix out(l.n_);
    for (int i = 0; i < l.n_; ++i)
      for (int k = 0; k < l.n_; ++k) {
        const S& lik = l(i, k);
        if (isZero(lik)) continue;
        for (int j = 0; j < l.n_; ++j) {
          const S& rkj = r(k, j);
          if (!isZero(rkj)) out(i, j) += lik * rkj;
        }
      }
    return out;
  }

  friend bool operator==(const SquareMatrix& l, const SquareMatrix& r) {
    return l.n_ == r.n_ && l.e_ == r.e_;
  }
  friend bool operator!=(const SquareMatrix& l, const SquareMatrix& r) { return !(l == r); }

  /// Frobenius inner product tr(A^T B).
  friend S frobenius(const SquareMatrix& a, const SquareMatrix& b) {
    a.check(b);
    S out(0);
    for (size_t i = 0; i < a.e_.size(); ++i) out += a.e_[i] * b.e_[i];
    return out;
  }

  friend S trace(const SquareMatrix& a) {
    S out(0);
    for (int i = 0; i < a.n_; ++i) out += a(i, i);
    return out;
  }

 private:
  size_t idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_)
      throw std::out_of_range("SquareMatrix: index out of range");
    return static_cast<size_t>(r) * n_ + c;
  }
  void check(const SquareMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
  }

  int n_;
  std::vector<S> e_;
};

template <class S>
SquareMatrix<S> commutator(const SquareMatrix<S>& a, const SquareMatrix<S>& b) {
  return a * b - b * a;
}

template <class S>
SquareMatrix<double> toNumeric(const SquareMatrix<S>& a) {
  SquareMatrix<double> out(a.size());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) out(r, c) = toDouble(a(r, c));
  return out;
}

using MatQ = SquareMatrix<ExactReal>;
using MatD = SquareMatrix<double>;

}  // namespace ilab

#endif  // ILAB_MATRIX_HPP
