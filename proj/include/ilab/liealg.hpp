#ifndef ILAB_LIEALG_HPP
#define ILAB_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ilab/form.hpp"
#include "ilab/matrix.hpp"

namespace ilab {

/// Skew-symmetric endomorphism of R^n with exact entries; A^T = -A is
/// enforced at construction.
class SkewEndo {
 public:
  explicit SkewEndo(MatQ m);
  static SkewEndo zero(int n) { return SkewEndo(MatQ(n)); }

  int dim() const { return mat_.size(); }
  const MatQ& matrix() const { return mat_; }
  const ExactReal& operator()(int r, int c) const { return mat_(r, c); }

  friend SkewEndo operator+(const SkewEndo& a, const SkewEndo& b) {
    return SkewEndo(a.mat_ + b.mat_);
  }
  friend SkewEndo operator-(const SkewEndo& a, const SkewEndo& b) {
    return SkewEndo(a.mat_ - b.mat_);
  }
  friend SkewEndo operator*(const ExactReal& s, const SkewEndo& a) {
    return SkewEndo(s * a.mat_);
  }
  friend bool operator==(const SkewEndo& a, const SkewEndo& b) { return a.mat_ == b.mat_; }

 private:
  MatQ mat_;
};

/// Commutator AB - BA (again skew).
SkewEndo bracket(const SkewEndo& a, const SkewEndo& b);

/// The so(n) <-> Lambda^2 identification iso(A)(X,Y) = <AX, Y>, i.e.
/// iso(A) = sum_{i<j} A_{ji} dx^{ij}. Linear bijection.
FormQ iso(const SkewEndo& a);
SkewEndo isoInv(const FormQ& w);

/// Coordinates of a skew matrix over the basis {isoInv(dx^{ij})}_{i<j},
/// ordered by mask; the inverse of spanFromCoordinates.
std::vector<ExactReal> so_nCoordinates(const SkewEndo& a);

struct ProjectionResult {
  FormQ inPart;
  FormQ outPart;
};

/// A Lie subalgebra of so(n) presented by an ordered basis, its paired
/// grade-2 forms, the per-element scale with forms[j] = scale[j] *
/// iso(basis[j]), and the structure constants of the matrix basis.
/// Construction verifies skewness, the form/scale pairing, and exact
/// bracket closure, and precomputes the exact Gram inverse of the forms.
class LieSubalgebra {
 public:
  LieSubalgebra(int ambientDim, std::vector<SkewEndo> basis, std::vector<FormQ> forms,
                std::vector<Rational> scale);

  /// Basis paired with forms[j] = iso(basis[j]) (scale 1 throughout).
  static LieSubalgebra fromMatrices(int ambientDim, std::vector<SkewEndo> basis);

  int ambientDim() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<SkewEndo>& basis() const { return basis_; }
  const std::vector<FormQ>& forms() const { return forms_; }
  const std::vector<Rational>& scale() const { return scale_; }

  /// c_{ij}^k with [basis_i, basis_j] = sum_k c_{ij}^k basis_k.
  const ExactReal& structureConstant(int i, int j, int k) const;

  /// The basis element actually entering the radial connection ansatz:
  /// isoInv(forms[j]) = scale[j] * basis[j].
  SkewEndo ansatzBasis(int j) const;

  /// Gram matrix <forms_i, forms_j> under the Lambda^2 inner product.
  const MatQ& formGram() const { return gram_; }

  /// Exact orthogonal decomposition of a 2-form as inPart + outPart with
  /// inPart in span(forms) and outPart perpendicular to it.
  ProjectionResult project(const FormQ& w) const;

  /// Coordinates of w over forms[]; nullopt if w is not exactly in the span.
  std::optional<std::vector<ExactReal>> spanCoordinates(const FormQ& w) const;

  bool containsForm(const FormQ& w) const { return project(w).outPart.isZero(); }

 private:
  int n_;
  std::vector<SkewEndo> basis_;
  std::vector<FormQ> forms_;
  std::vector<Rational> scale_;
  std::vector<ExactReal> structure_;  // dim^3, [ (i*dim+j)*dim+k ]
  MatQ gram_;
  MatQ gramInv_;
};

/// Derivation action of A in so(n) on a form:
/// (L_A w)(X1,...,Xk) = -sum_i w(X1,...,A Xi,...,Xk), computed as
/// L_A w = -sum_{m,l} A_{ml} dx^l ^ (e_m -| w).
FormQ lieDerivative(const SkewEndo& a, const FormQ& w);

/// Exact annihilator of a family of forms inside so(n): the subalgebra of
/// all A with L_A w = 0 for every defining form. The returned basis is the
/// deterministic reduced-echelon nullspace basis, cleared to coprime
/// integer coordinates, with forms[j] = iso(basis[j]).
LieSubalgebra stabilizerAlgebra(const std::vector<FormQ>& definingForms);

/// One basis element per row: index, matrix entries, 2-form, scale.
std::string formatTable(const LieSubalgebra& g);

// --- generic exact dense linear algebra used by the solvers -------------

/// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rowReduce(std::vector<std::vector<ExactReal>>& m);

/// Nullspace basis (deterministic free-variable parametrization) of the
/// matrix with the given number of columns.
std::vector<std::vector<ExactReal>> nullspace(std::vector<std::vector<ExactReal>> m,
                                              int cols);

/// Solve M x = rhs exactly; nullopt if inconsistent. M given column-major
/// as a list of columns; the solution is unique iff columns independent
/// (asserted).
std::optional<std::vector<ExactReal>> solveExact(
    const std::vector<std::vector<ExactReal>>& columns,
    const std::vector<ExactReal>& rhs);

}  // namespace ilab

#endif  // ILAB_LIEALG_HPP
