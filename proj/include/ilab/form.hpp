#ifndef ILAB_FORM_HPP
#define ILAB_FORM_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilab/scalar.hpp"

namespace ilab {

/// A strictly increasing multi-index i1 < ... < ik on {1..n}, packed as a
/// bitmask (bit i-1 set iff coordinate i is present).
using IndexMask = std::uint32_t;

constexpr int maskGrade(IndexMask m) { return std::popcount(m); }

inline IndexMask maskFromIndices(std::initializer_list<int> idx) {
  IndexMask m = 0;
  for (int i : idx) {
    if (i < 1 || i > 31) throw std::out_of_range("form index out of range");
    IndexMask bit = IndexMask{1} << (i - 1);
    if (m & bit) throw std::invalid_argument("repeated form index");
    m |= bit;
  }
  return m;
}

inline std::vector<int> maskIndices(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m >> i & 1u) out.push_back(i + 1);
  return out;
}

/// Sign of concatenating two disjoint increasing multi-indices (number of
/// transpositions needed to merge-sort them); 0 if they intersect.
inline int mergeSign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int sign = 1;
  while (b) {
    IndexMask low = b & (~b + 1u);
    // bits of a strictly above this bit of b each contribute a transposition
    if (std::popcount(a & ~(low | (low - 1u))) % 2 != 0) sign = -sign;
    b &= b - 1u;
  }
  return sign;
}

/// An alternating k-form on R^n with coefficients in S (exact field or
/// double). Canonical representation: zero coefficients are never stored.
template <class S>
class Form {
 public:
  Form(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim < 2 || dim > 8) throw std::invalid_argument("Form: dim must be in 2..8");
    if (grade < 0) throw std::invalid_argument("Form: negative grade");
  }

  static Form zero(int dim, int grade) { return Form(dim, grade); }

  /// Basis k-form dx^{i1...ik} (1-based indices, any order, sign absorbed).
  static Form dx(int dim, std::initializer_list<int> idx) {
    // sort with sign via repeated merge of singletons
    Form f(dim, static_cast<int>(idx.size()));
    IndexMask m = 0;
    int sign = 1;
    for (int i : idx) {
      IndexMask bit = maskFromIndices({i});
      int s = mergeSign(m, bit);
      if (s == 0) throw std::invalid_argument("dx: repeated index");
      sign *= s;
      m |= bit;
    }
    if (maskIndices(m).size() && maskIndices(m).back() > dim)
      throw std::out_of_range("dx: index exceeds dimension");
    f.coeffs_[m] = S(sign);
    return f;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool isZero() const { return coeffs_.empty(); }
  const std::map<IndexMask, S>& coeffs() const { return coeffs_; }

  S coeff(IndexMask m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  void set(IndexMask m, const S& v) {
    if (maskGrade(m) != grade_) throw std::invalid_argument("Form::set: wrong grade");
    if (ilab::isZero(v))
      coeffs_.erase(m);
    else
      coeffs_[m] = v;
  }

  void add(IndexMask m, const S& v) {
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
      if (!ilab::isZero(v)) coeffs_.emplace(m, v);
    } else {
      it->second += v;
      if (ilab::isZero(it->second)) coeffs_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    requireSameShape(o);
    for (const auto& [m, v] : o.coeffs_) add(m, v);
    return *this;
  }
  Form& operator-=(const Form& o) {
    requireSameShape(o);
    for (const auto& [m, v] : o.coeffs_) add(m, -v);
    return *this;
  }
  Form& operator*=(const S& s) {
    if (ilab::isZero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [m, v] : coeffs_) v *= s;
    return *this;
  }
  Form operator-() const {
    Form f(dim_, grade_);
    for (const auto& [m, v] : coeffs_) f.coeffs_.emplace(m, -v);
    return f;
  }

  friend Form operator+(Form l, const Form& r) { return l += r; }
  friend Form operator-(Form l, const Form& r) { return l -= r; }
  friend Form operator*(const S& s, Form f) { return f *= s; }
  friend Form operator*(Form f, const S& s) { return f *= s; }
  friend bool operator==(const Form& l, const Form& r) {
    return l.dim_ == r.dim_ && l.grade_ == r.grade_ && l.coeffs_ == r.coeffs_;
  }
  friend bool operator!=(const Form& l, const Form& r) { return !(l == r); }

 private:
  void requireSameShape(const Form& o) const {
    if (dim_ != o.dim_ || grade_ != o.grade_)
      throw std::invalid_argument("Form: dimension/grade mismatch");
  }

  int dim_;
  int grade_;
  std::map<IndexMask, S> coeffs_;
};

/// A tangent vector on R^n with components in S.
template <class S>
struct Vector {
  explicit Vector(int dim) : components(dim, S(0)) {}
  Vector(std::initializer_list<S> comps) : components(comps) {}
  int dim() const { return static_cast<int>(components.size()); }
  std::vector<S> components;
};

/// Exterior product. Grades add; the result is the zero form when the
/// combined grade exceeds n.
template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  Form<S> out(a.dim(), a.grade() + b.grade());
  if (out.grade() > a.dim()) return out;
  for (const auto& [ma, va] : a.coeffs()) {
    for (const auto& [mb, vb] : b.coeffs()) {
      int s = mergeSign(ma, mb);
      if (s == 0) continue;
      out.add(ma | mb, s > 0 ? va * vb : -(va * vb));
    }
  }
  return out;
}

/// Hodge star for the Euclidean metric and orientation dx^{1...n}.
template <class S>
Form<S> hodge(const Form<S>& a) {
  const IndexMask full = (IndexMask{1} << a.dim()) - 1u;
  Form<S> out(a.dim(), a.dim() - a.grade());
  for (const auto& [m, v] : a.coeffs()) {
    IndexMask comp = full & ~m;
    int s = mergeSign(m, comp);
    out.add(comp, s > 0 ? v : -v);
  }
  return out;
}

/// Interior product v -| a (antiderivation of degree -1). Grade-0 input
/// yields the zero form.
template <class S>
Form<S> interior(const Vector<S>& v, const Form<S>& a) {
  if (v.dim() != a.dim()) throw std::invalid_argument("interior: dimension mismatch");
  Form<S> out(a.dim(), a.grade() == 0 ? 0 : a.grade() - 1);
  if (a.grade() == 0) return out;
  for (const auto& [m, coef] : a.coeffs()) {
    int pos = 0;
    for (int i = 0; i < a.dim(); ++i) {
      IndexMask bit = IndexMask{1} << i;
      if (!(m & bit)) continue;
      const S& vc = v.components[i];
      if (!isZero(vc)) {
        S term = vc * coef;
        out.add(m & ~bit, pos % 2 == 0 ? term : -term);
      }
      ++pos;
    }
  }
  return out;
}

/// Interior product with the coordinate vector field of axis i (1-based).
template <class S>
Form<S> interiorAxis(int axis, const Form<S>& a) {
  Vector<S> v(a.dim());
  v.components[axis - 1] = S(1);
  return interior(v, a);
}

/// Inner product on Lambda^k: the basis dx^I is orthonormal, so this is the
/// coefficientwise dot product. Satisfies a ^ *b = <a,b> vol.
template <class S>
S inner(const Form<S>& a, const Form<S>& b) {
  if (a.dim() != b.dim() || a.grade() != b.grade())
    throw std::invalid_argument("inner: dimension/grade mismatch");
  S out(0);
  for (const auto& [m, v] : a.coeffs()) {
    auto it = b.coeffs().find(m);
    if (it != b.coeffs().end()) out += v * it->second;
  }
  return out;
}

/// 1-form metric dual of a vector (musical flat).
template <class S>
Form<S> flat(const Vector<S>& v) {
  Form<S> out(v.dim(), 1);
  for (int i = 0; i < v.dim(); ++i)
    if (!isZero(v.components[i])) out.add(IndexMask{1} << i, v.components[i]);
  return out;
}

/// Reinterpret a form on R^m as a form on R^n (n >= m), same coefficients.
template <class S>
Form<S> embed(const Form<S>& a, int dim) {
  if (dim < a.dim()) throw std::invalid_argument("embed: cannot shrink dimension");
  Form<S> out(dim, a.grade());
  for (const auto& [m, v] : a.coeffs()) out.add(m, v);
  return out;
}

template <class S>
Form<double> toNumeric(const Form<S>& a) {
  Form<double> out(a.dim(), a.grade());
  for (const auto& [m, v] : a.coeffs()) out.add(m, toDouble(v));
  return out;
}

/// Renders in the dx^{ij...k} notation, e.g. "-1/4*dx^{23} + 1/4*dx^{45}".
template <class S>
std::string to_string(const Form<S>& a) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : a.coeffs()) {
    std::ostringstream cs;
    cs << v;
    std::string c = cs.str();
    bool negated = false;
    if (!first && c.size() && c[0] == '-' && c.find(" - ") == std::string::npos &&
        c.find(" + ") == std::string::npos) {
      negated = true;
      c = c.substr(1);
    }
    if (!first) os << (negated ? " - " : " + ");
    first = false;
    bool composite = c.find(' ') != std::string::npos;
    if (c == "1" && !composite) {
      // bare dx term
    } else if (composite) {
      os << "(" << c << ")*";
    } else {
      os << c << "*";
    }
    os << "dx^{";
    for (int i : maskIndices(m)) os << i;
    os << "}";
  }
  return os.str();
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Form<S>& a) {
  return os << to_string(a);
}

using FormQ = Form<ExactReal>;
using FormD = Form<double>;
using VectorQ = Vector<ExactReal>;
using VectorD = Vector<double>;

}  // namespace ilab

#endif  // ILAB_FORM_HPP
