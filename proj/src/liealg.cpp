#include "ilab/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ilab {

SkewEndo::SkewEndo(MatQ m) : mat_(std::move(m)) {
  if (!mat_.isSkew()) throw std::invalid_argument("SkewEndo: matrix is not skew-symmetric");
}

SkewEndo bracket(const SkewEndo& a, const SkewEndo& b) {
  return SkewEndo(commutator(a.matrix(), b.matrix()));
}

FormQ iso(const SkewEndo& a) {
  const int n = a.dim();
  FormQ w(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const ExactReal& c = a(j, i);
      if (!c.isZero()) w.set((IndexMask{1} << i) | (IndexMask{1} << j), c);
    }
  return w;
}

SkewEndo isoInv(const FormQ& w) {
  if (w.grade() != 2) throw std::invalid_argument("isoInv: grade-2 form required");
  MatQ m(w.dim());
  for (const auto& [mask, c] : w.coeffs()) {
    auto idx = maskIndices(mask);
    m(idx[1] - 1, idx[0] - 1) = c;
    m(idx[0] - 1, idx[1] - 1) = -c;
  }
  return SkewEndo(std::move(m));
}

std::vector<ExactReal> so_nCoordinates(const SkewEndo& a) {
  const int n = a.dim();
  std::vector<ExactReal> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  // mask order == (i<j) lexicographic by (j,i) on bit positions; keep the
  // same convention everywhere: iterate masks in increasing order.
  for (IndexMask m = 0; m < (IndexMask{1} << n); ++m) {
    if (maskGrade(m) != 2) continue;
    auto idx = maskIndices(m);
    out.push_back(a(idx[1] - 1, idx[0] - 1));
  }
  return out;
}

std::vector<int> rowReduce(std::vector<std::vector<ExactReal>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!m[r][col].isZero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    ExactReal inv = m[row][col].inverse();
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].isZero()) continue;
      ExactReal f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<ExactReal>> nullspace(std::vector<std::vector<ExactReal>> m,
                                              int cols) {
  std::vector<int> pivots = rowReduce(m);
  std::vector<bool> isPivot(cols, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<std::vector<ExactReal>> basis;
  for (int free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    std::vector<ExactReal> v(cols, ExactReal(0));
    v[free] = ExactReal(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<ExactReal>> solveExact(
    const std::vector<std::vector<ExactReal>>& columns,
    const std::vector<ExactReal>& rhs) {
  const int k = static_cast<int>(columns.size());
  const int rows = static_cast<int>(rhs.size());
  std::vector<std::vector<ExactReal>> aug(rows, std::vector<ExactReal>(k + 1, ExactReal(0)));
  for (int c = 0; c < k; ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw std::invalid_argument("solveExact: column size mismatch");
    for (int r = 0; r < rows; ++r) aug[r][c] = columns[c][r];
  }
  for (int r = 0; r < rows; ++r) aug[r][k] = rhs[r];
  std::vector<int> pivots = rowReduce(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (static_cast<int>(pivots.size()) != k)
    throw std::invalid_argument("solveExact: dependent columns");
  std::vector<ExactReal> x(k, ExactReal(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][k];
  return x;
}

namespace {

std::vector<ExactReal> formCoordinates(const FormQ& w) {
  // coefficients over all grade-2 masks in increasing mask order
  const int n = w.dim();
  std::vector<ExactReal> out;
  for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
    if (maskGrade(m) == 2) out.push_back(w.coeff(m));
  return out;
}

}  // namespace

LieSubalgebra::LieSubalgebra(int ambientDim, std::vector<SkewEndo> basis,
                             std::vector<FormQ> forms, std::vector<Rational> scale)
    : n_(ambientDim),
      basis_(std::move(basis)),
      forms_(std::move(forms)),
      scale_(std::move(scale)),
      gram_(std::max<int>(1, static_cast<int>(forms_.size()))),
      gramInv_(std::max<int>(1, static_cast<int>(forms_.size()))) {
  const int d = dimension();
  if (static_cast<int>(forms_.size()) != d || static_cast<int>(scale_.size()) != d)
    throw std::invalid_argument("LieSubalgebra: basis/forms/scale length mismatch");
  for (int j = 0; j < d; ++j) {
    if (basis_[j].dim() != n_ || forms_[j].dim() != n_ || forms_[j].grade() != 2)
      throw std::invalid_argument("LieSubalgebra: element dimension mismatch");
    if (forms_[j] != ExactReal(scale_[j]) * iso(basis_[j]))
      throw std::invalid_argument("LieSubalgebra: forms[j] != scale[j]*iso(basis[j])");
  }

  // structure constants, via one exact solve per bracket against the basis
  std::vector<std::vector<ExactReal>> columns;
  columns.reserve(d);
  for (int j = 0; j < d; ++j) columns.push_back(so_nCoordinates(basis_[j]));
  structure_.assign(static_cast<size_t>(d) * d * d, ExactReal(0));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto sol = solveExact(columns, so_nCoordinates(bracket(basis_[i], basis_[j])));
      if (!sol)
        throw std::invalid_argument("LieSubalgebra: bracket [e_" + std::to_string(i + 1) +
                                    ",e_" + std::to_string(j + 1) + "] not in span");
      for (int k = 0; k < d; ++k) {
        structure_[(static_cast<size_t>(i) * d + j) * d + k] = (*sol)[k];
        structure_[(static_cast<size_t>(j) * d + i) * d + k] = -(*sol)[k];
      }
    }

  // Gram matrix and its exact inverse (forms are a basis, so invertible)
  MatQ g(d > 0 ? d : 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = inner(forms_[i], forms_[j]);
  gram_ = g;
  if (d > 0) {
    std::vector<std::vector<ExactReal>> aug(d, std::vector<ExactReal>(2 * d, ExactReal(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) aug[i][j] = g(i, j);
      aug[i][d + i] = ExactReal(1);
    }
    auto pivots = rowReduce(aug);
    if (static_cast<int>(pivots.size()) != d || pivots.back() != d - 1)
      throw std::invalid_argument("LieSubalgebra: degenerate form Gram matrix");
    MatQ inv(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) inv(i, j) = aug[i][d + j];
    gramInv_ = inv;
  }
}

LieSubalgebra LieSubalgebra::fromMatrices(int ambientDim, std::vector<SkewEndo> basis) {
  std::vector<FormQ> forms;
  std::vector<Rational> scale;
  forms.reserve(basis.size());
  for (const SkewEndo& b : basis) {
    forms.push_back(iso(b));
    scale.emplace_back(1);
  }
  return {ambientDim, std::move(basis), std::move(forms), std::move(scale)};
}

const ExactReal& LieSubalgebra::structureConstant(int i, int j, int k) const {
  const int d = dimension();
  if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
    throw std::out_of_range("structureConstant: index out of range");
  return structure_[(static_cast<size_t>(i) * d + j) * d + k];
}

SkewEndo LieSubalgebra::ansatzBasis(int j) const {
  return ExactReal(scale_.at(j)) * basis_.at(j);
}

ProjectionResult LieSubalgebra::project(const FormQ& w) const {
  if (w.dim() != n_ || w.grade() != 2)
    throw std::invalid_argument("project: grade-2 form on the ambient space required");
  const int d = dimension();
  FormQ inPart(n_, 2);
  for (int i = 0; i < d; ++i) {
    ExactReal c(0);
    for (int j = 0; j < d; ++j) c += gramInv_(i, j) * inner(w, forms_[j]);
    if (!c.isZero()) inPart += c * forms_[i];
  }
  return {inPart, w - inPart};
}

std::optional<std::vector<ExactReal>> LieSubalgebra::spanCoordinates(const FormQ& w) const {
  std::vector<std::vector<ExactReal>> columns;
  columns.reserve(forms_.size());
  for (const FormQ& f : forms_) columns.push_back(formCoordinates(f));
  return solveExact(columns, formCoordinates(w));
}

FormQ lieDerivative(const SkewEndo& a, const FormQ& w) {
  const int n = w.dim();
  FormQ out(n, w.grade());
  if (w.grade() == 0) return out;
  for (int m = 1; m <= n; ++m) {
    FormQ contracted = interiorAxis(m, w);
    if (contracted.isZero()) continue;
    for (int l = 1; l <= n; ++l) {
      const ExactReal& c = a(m - 1, l - 1);
      if (c.isZero()) continue;
      out -= c * wedge(FormQ::dx(n, {l}), contracted);
    }
  }
  return out;
}

LieSubalgebra stabilizerAlgebra(const std::vector<FormQ>& definingForms) {
  if (definingForms.empty())
    throw std::invalid_argument("stabilizerAlgebra: no defining forms");
  const int n = definingForms.front().dim();
  for (const FormQ& f : definingForms)
    if (f.dim() != n)
      throw std::invalid_argument("stabilizerAlgebra: inconsistent dimensions");

  // columns indexed by the so(n) basis isoInv(dx^{ij}), rows by coefficients
  // of L_A applied to each defining form
  std::vector<IndexMask> pairMasks;
  for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
    if (maskGrade(m) == 2) pairMasks.push_back(m);
  const int cols = static_cast<int>(pairMasks.size());

  std::vector<std::vector<ExactReal>> rowsOf(cols);
  size_t rows = 0;
  for (int c = 0; c < cols; ++c) {
    FormQ dxc(n, 2);
    dxc.set(pairMasks[c], ExactReal(1));
    SkewEndo gen = isoInv(dxc);
    std::vector<ExactReal> stacked;
    for (const FormQ& f : definingForms) {
      FormQ lf = lieDerivative(gen, f);
      // stack coefficients over every mask of the right grade
      for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
        if (maskGrade(m) == f.grade()) stacked.push_back(lf.coeff(m));
    }
    rows = stacked.size();
    rowsOf[c] = std::move(stacked);
  }

  std::vector<std::vector<ExactReal>> mat(rows, std::vector<ExactReal>(cols, ExactReal(0)));
  for (int c = 0; c < cols; ++c)
    for (size_t r = 0; r < rows; ++r) mat[r][c] = rowsOf[c][r];

  std::vector<std::vector<ExactReal>> null = nullspace(std::move(mat), cols);

  std::vector<SkewEndo> basis;
  basis.reserve(null.size());
  for (std::vector<ExactReal>& v : null) {
    // clear denominators to primitive integer coordinates, leading entry > 0
    mpz_class lcm = 1, gcd = 0;
    for (const ExactReal& e : v) {
      Rational r = e.asRational();  // nullspace of a rational matrix is rational
      if (sgn(r) == 0) continue;
      mpz_class den = r.get_den(), num = abs(r.get_num());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    }
    Rational factor(lcm, gcd == 0 ? mpz_class(1) : gcd);
    factor.canonicalize();
    int lead = 0;
    for (const ExactReal& e : v) {
      if (!e.isZero()) {
        lead = sgn(e.asRational());
        break;
      }
    }
    if (lead < 0) factor = -factor;
    FormQ w(n, 2);
    for (int c = 0; c < cols; ++c) {
      if (v[c].isZero()) continue;
      w.set(pairMasks[c], ExactReal(v[c].asRational() * factor));
    }
    basis.push_back(isoInv(w));
  }
  return LieSubalgebra::fromMatrices(n, std::move(basis));
}

std::string formatTable(const LieSubalgebra& g) {
  std::ostringstream os;
  const int n = g.ambientDim();
  for (int j = 0; j < g.dimension(); ++j) {
    os << j + 1 << "\t";
    bool first = true;
    const SkewEndo& e = g.basis()[j];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (e(r, c).isZero()) continue;
        if (!first) os << " ";
        first = false;
        os << "[" << r + 1 << "," << c + 1 << "]=" << e(r, c).toString();
      }
    if (first) os << "0";
    os << "\t" << to_string(g.forms()[j]) << "\t" << to_string(g.scale()[j]) << "\n";
  }
  return os.str();
}

}  // namespace ilab
