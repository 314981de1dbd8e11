#include "ilab/quat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ilab/liealg.hpp"
#include "ilab/tables.hpp"

namespace ilab {
namespace {

std::vector<double> solveDense(std::vector<double> a, std::vector<double> b) {
  const int k = static_cast<int>(b.size());
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(a[col * k + c], a[piv * k + c]);
      std::swap(b[col], b[piv]);
    }
    double d = a[col * k + col];
    if (d == 0) throw std::runtime_error("GaugeAlgebra: dependent basis");
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = a[r * k + col] / d;
      if (f == 0) continue;
      for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < k; ++i) b[i] /= a[i * k + i];
  return b;
}

}  // namespace

GaugeAlgebra GaugeAlgebra::fromMatrices(std::vector<MatD> basis) {
  GaugeAlgebra g;
  g.basis_ = std::move(basis);
  const int d = g.dim();
  if (d == 0) throw std::invalid_argument("GaugeAlgebra: empty basis");
  g.gram_.assign(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.gram_[i * d + j] = frobenius(g.basis_[i], g.basis_[j]);
  g.structure_.assign(static_cast<size_t>(d) * d * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatD br = commutator(g.basis_[i], g.basis_[j]);
      std::vector<double> rhs(d);
      for (int m = 0; m < d; ++m) rhs[m] = frobenius(br, g.basis_[m]);
      std::vector<double> coords = solveDense(g.gram_, rhs);
      // confirm closure
      MatD back(br.size());
      for (int m = 0; m < d; ++m) back += coords[m] * g.basis_[m];
      MatD defect = back - br;
      if (std::sqrt(frobenius(defect, defect)) > 1e-9)
        throw std::invalid_argument("GaugeAlgebra: basis is not bracket-closed");
      for (int m = 0; m < d; ++m) {
        g.structure_[(static_cast<size_t>(i) * d + j) * d + m] = coords[m];
        g.structure_[(static_cast<size_t>(j) * d + i) * d + m] = -coords[m];
      }
    }
  return g;
}

const GaugeAlgebra& GaugeAlgebra::su2() {
  static const GaugeAlgebra g = [] {
    const LieSubalgebra& table = tables::su2Table();
    std::vector<MatD> basis;
    for (int j = 0; j < 3; ++j) basis.push_back(toNumeric(table.ansatzBasis(j).matrix()));
    return fromMatrices(std::move(basis));
  }();
  return g;
}

double GaugeAlgebra::structureConstant(int i, int j, int k) const {
  const int d = dim();
  return structure_[(static_cast<size_t>(i) * d + j) * d + k];
}

AlgebraCoeffs GaugeAlgebra::bracket(const AlgebraCoeffs& a, const AlgebraCoeffs& b) const {
  const int d = dim();
  AlgebraCoeffs out(d, 0.0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0 || i == j) continue;
      double f = a[i] * b[j];
      for (int m = 0; m < d; ++m) {
        double c = structure_[(static_cast<size_t>(i) * d + j) * d + m];
        if (c != 0) out[m] += f * c;
      }
    }
  }
  return out;
}

double GaugeAlgebra::inner(const AlgebraCoeffs& a, const AlgebraCoeffs& b) const {
  const int d = dim();
  double s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s += a[i] * b[j] * gram_[i * d + j];
  return s;
}

double GaugeAlgebra::norm(const AlgebraCoeffs& a) const {
  return std::sqrt(std::max(0.0, inner(a, a)));
}

MatD GaugeAlgebra::realize(const AlgebraCoeffs& a) const {
  MatD out(basis_[0].size());
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0) out += a[i] * basis_[i];
  return out;
}

NahmSolution NahmSolution::pole(const GaugeAlgebra& algebra) {
  if (algebra.dim() < 3)
    throw std::invalid_argument("pole: need at least three basis elements");
  // verify [k1,k2] = -2k3 cyclically on the first three elements
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    AlgebraCoeffs a(algebra.dim(), 0.0), b(algebra.dim(), 0.0), want(algebra.dim(), 0.0);
    a[i] = 1;
    b[j] = 1;
    want[k] = -2;
    AlgebraCoeffs br = algebra.bracket(a, b);
    for (int m = 0; m < algebra.dim(); ++m)
      if (std::abs(br[m] - want[m]) > 1e-12)
        throw std::invalid_argument("pole: basis does not satisfy [k_i,k_j] = -2 k_k");
  }
  NahmSolution sol(Kind::Pole, algebra);
  sol.sMin_ = 0.0;
  sol.sMax_ = std::numeric_limits<double>::infinity();
  const int d = algebra.dim();
  sol.tFn_ = [d](double s) {
    Triple t{AlgebraCoeffs(d, 0.0), AlgebraCoeffs(d, 0.0), AlgebraCoeffs(d, 0.0)};
    for (int i = 0; i < 3; ++i) t[i][i] = 1.0 / (2 * s);
    return t;
  };
  sol.tpFn_ = [d](double s) {
    Triple t{AlgebraCoeffs(d, 0.0), AlgebraCoeffs(d, 0.0), AlgebraCoeffs(d, 0.0)};
    for (int i = 0; i < 3; ++i) t[i][i] = -1.0 / (2 * s * s);
    return t;
  };
  return sol;
}

NahmSolution NahmSolution::custom(const GaugeAlgebra& algebra, std::function<Triple(double)> T,
                                  std::function<Triple(double)> Tprime, double sMin,
                                  double sMax) {
  NahmSolution sol(Kind::Custom, algebra);
  sol.sMin_ = sMin;
  sol.sMax_ = sMax;
  sol.tFn_ = std::move(T);
  sol.tpFn_ = std::move(Tprime);
  return sol;
}

NahmSolution::Triple NahmSolution::T(double s) const {
  if (!contains(s)) throw std::out_of_range("NahmSolution: s outside the interval");
  if (kind_ != Kind::Integrated) return tFn_(s);
  // cubic Hermite interpolation between bracketing samples
  auto it = std::lower_bound(samples_.begin(), samples_.end(), s,
                             [](const Sample& a, double v) { return a.s < v; });
  if (it == samples_.begin()) ++it;
  if (it == samples_.end()) --it;
  const Sample &hi = *it, &lo = *(it - 1);
  double h = hi.s - lo.s, t = (s - lo.s) / h;
  double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  Triple out;
  const int d = algebra_.dim();
  for (int i = 0; i < 3; ++i) {
    out[i].assign(d, 0.0);
    for (int m = 0; m < d; ++m)
      out[i][m] = h00 * lo.T[i][m] + h * h10 * lo.dT[i][m] + h01 * hi.T[i][m] +
                  h * h11 * hi.dT[i][m];
  }
  return out;
}

NahmSolution::Triple NahmSolution::Tprime(double s) const {
  if (!contains(s)) throw std::out_of_range("NahmSolution: s outside the interval");
  if (kind_ != Kind::Integrated) return tpFn_(s);
  // the solution satisfies T' = [T,T] pointwise to integrator accuracy
  Triple t = T(s);
  Triple out;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = algebra_.bracket(t[j], t[k]);
  }
  return out;
}

namespace {

NahmSolution::Triple nahmRHS(const GaugeAlgebra& g, const NahmSolution::Triple& t) {
  NahmSolution::Triple out;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = g.bracket(t[j], t[k]);
  }
  return out;
}

NahmSolution::Triple axpy(const NahmSolution::Triple& a, double f,
                          const NahmSolution::Triple& d) {
  NahmSolution::Triple out = a;
  for (int i = 0; i < 3; ++i)
    for (size_t m = 0; m < out[i].size(); ++m) out[i][m] += f * d[i][m];
  return out;
}

}  // namespace

NahmSolution integrateNahm(const GaugeAlgebra& algebra, const NahmSolution::Triple& T0,
                           double s0, double s1, const NahmStepControl& ctrl) {
  if (!(s1 > s0)) throw std::invalid_argument("integrateNahm: need s1 > s0");
  NahmSolution sol(NahmSolution::Kind::Integrated, algebra);
  sol.sMin_ = s0;
  double s = s0;
  NahmSolution::Triple t = T0;
  auto record = [&](double at, const NahmSolution::Triple& val) {
    sol.samples_.push_back({at, val, nahmRHS(algebra, val)});
  };
  record(s, t);
  const double h = ctrl.step;
  while (s < s1) {
    double hh = std::min(h, s1 - s);
    NahmSolution::Triple k1 = nahmRHS(algebra, t);
    NahmSolution::Triple k2 = nahmRHS(algebra, axpy(t, hh / 2, k1));
    NahmSolution::Triple k3 = nahmRHS(algebra, axpy(t, hh / 2, k2));
    NahmSolution::Triple k4 = nahmRHS(algebra, axpy(t, hh, k3));
    for (int i = 0; i < 3; ++i)
      for (size_t m = 0; m < t[i].size(); ++m)
        t[i][m] += hh / 6 * (k1[i][m] + 2 * k2[i][m] + 2 * k3[i][m] + k4[i][m]);
    s += hh;
    record(s, t);
    double mag = 0;
    for (int i = 0; i < 3; ++i) mag = std::max(mag, algebra.norm(t[i]));
    if (mag > ctrl.overflowGuard || !std::isfinite(mag)) {
      sol.blewUp_ = true;
      break;
    }
  }
  sol.sMax_ = s;
  return sol;
}

double nahmResidual(const NahmSolution& sol, double s) {
  NahmSolution::Triple t = sol.T(s), tp = sol.Tprime(s);
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    AlgebraCoeffs br = sol.algebra().bracket(t[j], t[k]);
    AlgebraCoeffs diff = tp[i];
    for (size_t m = 0; m < diff.size(); ++m) diff[m] -= br[m];
    worst = std::max(worst, sol.algebra().norm(diff));
  }
  return worst;
}

std::string nahmCsv(const NahmSolution& sol, const std::vector<double>& ss) {
  const int d = sol.algebra().dim();
  std::string out = "s";
  for (int i = 1; i <= 3; ++i)
    for (int m = 1; m <= d; ++m) out += ",T" + std::to_string(i) + ".k" + std::to_string(m);
  out += "\n";
  char buf[64];
  for (double s : ss) {
    NahmSolution::Triple t = sol.T(s);
    std::snprintf(buf, sizeof buf, "%.17g", s);
    out += buf;
    for (int i = 0; i < 3; ++i)
      for (int m = 0; m < d; ++m) {
        std::snprintf(buf, sizeof buf, ",%.17g", t[i][m]);
        out += buf;
      }
    out += "\n";
  }
  return out;
}

NahmSolution nahmFromCsv(const GaugeAlgebra& algebra, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("nahmFromCsv: empty input");
  const int d = algebra.dim();
  NahmSolution sol(NahmSolution::Kind::Integrated, algebra);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(ls, tok, ',')) vals.push_back(std::stod(tok));
    if (static_cast<int>(vals.size()) != 1 + 3 * d)
      throw std::invalid_argument("nahmFromCsv: wrong column count");
    NahmSolution::Sample sample;
    sample.s = vals[0];
    for (int i = 0; i < 3; ++i) {
      sample.T[i].assign(vals.begin() + 1 + i * d, vals.begin() + 1 + (i + 1) * d);
    }
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      sample.dT[i] = algebra.bracket(sample.T[j], sample.T[k]);
    }
    sol.samples_.push_back(sample);
  }
  if (sol.samples_.size() < 2) throw std::invalid_argument("nahmFromCsv: need two samples");
  std::sort(sol.samples_.begin(), sol.samples_.end(),
            [](const NahmSolution::Sample& a, const NahmSolution::Sample& b) {
              return a.s < b.s;
            });
  sol.sMin_ = sol.samples_.front().s;
  sol.sMax_ = sol.samples_.back().s;
  return sol;
}

QuatStructure::QuatStructure(int nq) : nq_(nq), sigma4_(4 * std::max(nq, 1), 4) {
  if (nq < 1 || nq > 2) throw std::invalid_argument("QuatStructure: nq must be 1 or 2");
  const int n = 4 * nq;
  J_.assign(3, MatD(n));
  for (int b = 0; b < nq; ++b) {
    const int o = 4 * b;
    // J^1(df) = -f2 dx1 + f1 dx2 - f4 dx3 + f3 dx4 (per block), etc.
    J_[0](o + 0, o + 1) = -1;
    J_[0](o + 1, o + 0) = 1;
    J_[0](o + 2, o + 3) = -1;
    J_[0](o + 3, o + 2) = 1;
    J_[1](o + 0, o + 2) = -1;
    J_[1](o + 1, o + 3) = 1;
    J_[1](o + 2, o + 0) = 1;
    J_[1](o + 3, o + 1) = -1;
    J_[2](o + 0, o + 3) = -1;
    J_[2](o + 1, o + 2) = -1;
    J_[2](o + 2, o + 1) = 1;
    J_[2](o + 3, o + 0) = 1;
  }
  for (int i = 1; i <= 3; ++i) sigmas_.push_back(toNumeric(tables::sigmaI(i, nq)));
  sigma4_ = toNumeric(tables::fundamental4Form(nq));
}

const MatD& QuatStructure::J(int i) const {
  if (i < 1 || i > 3) throw std::out_of_range("QuatStructure::J: i in 1..3");
  return J_[i - 1];
}

const FormD& QuatStructure::sigma(int i) const {
  if (i < 1 || i > 3) throw std::out_of_range("QuatStructure::sigma: i in 1..3");
  return sigmas_[i - 1];
}

std::vector<double> QuatStructure::jAction(int i, const std::vector<double>& oneForm) const {
  const MatD& m = J(i);
  const int n = dim();
  if (static_cast<int>(oneForm.size()) != n)
    throw std::invalid_argument("jAction: wrong dimension");
  std::vector<double> out(n, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m(r, c) != 0) out[r] += m(r, c) * oneForm[c];
  return out;
}

ScalarField::ScalarField(int dim, double constant, std::vector<double> linear,
                         std::vector<double> hessian,
                         std::vector<std::pair<double, int>> inverseBlocks)
    : dim_(dim),
      c_(constant),
      b_(std::move(linear)),
      h0_(std::move(hessian)),
      inv_(std::move(inverseBlocks)) {
  if (static_cast<int>(b_.size()) != dim || static_cast<int>(h0_.size()) != dim * dim)
    throw std::invalid_argument("ScalarField: size mismatch");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      if (h0_[r * dim + c] != h0_[c * dim + r])
        throw std::invalid_argument("ScalarField: Hessian must be symmetric");
  for (auto& [A, o] : inv_)
    if (o < 0 || o + 4 > dim) throw std::invalid_argument("ScalarField: bad block offset");
}

double ScalarField::value(const std::vector<double>& x) const {
  double v = c_;
  for (int i = 0; i < dim_; ++i) {
    v += b_[i] * x[i];
    for (int j = 0; j < dim_; ++j) v += 0.5 * h0_[i * dim_ + j] * x[i] * x[j];
  }
  for (const auto& [A, o] : inv_) {
    double r2 = 0;
    for (int i = 0; i < 4; ++i) r2 += x[o + i] * x[o + i];
    v += A / r2;
  }
  return v;
}

std::vector<double> ScalarField::gradient(const std::vector<double>& x) const {
  std::vector<double> g = b_;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) g[i] += h0_[i * dim_ + j] * x[j];
  for (const auto& [A, o] : inv_) {
    double r2 = 0;
    for (int i = 0; i < 4; ++i) r2 += x[o + i] * x[o + i];
    double f = -2 * A / (r2 * r2);
    for (int i = 0; i < 4; ++i) g[o + i] += f * x[o + i];
  }
  return g;
}

std::vector<double> ScalarField::hessian(const std::vector<double>& x) const {
  std::vector<double> h = h0_;
  for (const auto& [A, o] : inv_) {
    double r2 = 0;
    for (int i = 0; i < 4; ++i) r2 += x[o + i] * x[o + i];
    double f1 = -2 * A / (r2 * r2), f2 = 8 * A / (r2 * r2 * r2);
    for (int i = 0; i < 4; ++i) {
      h[(o + i) * dim_ + (o + i)] += f1;
      for (int j = 0; j < 4; ++j) h[(o + i) * dim_ + (o + j)] += f2 * x[o + i] * x[o + j];
    }
  }
  return h;
}

bool ScalarField::singularAt(const std::vector<double>& x) const {
  for (const auto& [A, o] : inv_) {
    double r2 = 0;
    for (int i = 0; i < 4; ++i) r2 += x[o + i] * x[o + i];
    if (r2 < 1e-12) return true;
  }
  return false;
}

namespace {

double take(std::map<std::string, double>& m, const std::string& key, double dflt = 0.0) {
  auto it = m.find(key);
  if (it == m.end()) return dflt;
  double v = it->second;
  m.erase(it);
  return v;
}

void setPair(std::vector<double>& h, int dim, int i, int j, double c) {
  h[(i - 1) * dim + (j - 1)] += c;
  h[(j - 1) * dim + (i - 1)] += c;
}

void requireConstraint(std::map<std::string, double>& m, const std::string& key,
                       double required, const std::string& constraint) {
  auto it = m.find(key);
  if (it != m.end()) {
    if (std::abs(it->second - required) > 1e-12)
      throw std::invalid_argument("exampleFieldFactory: " + constraint);
    m.erase(it);
  }
}

// The 4d harmonic family on one block: A |x|^{-2} + A1 x1^2 + A2 x2^2 +
// A3 x3^2 - (A1+A2+A3) x4^2 + sum Bij xi xj + sum Bi xi + C.
void buildAsd4Block(std::map<std::string, double>& c, const std::string& prefix, int dim,
                    int offset, double& constant, std::vector<double>& linear,
                    std::vector<double>& hess, std::vector<std::pair<double, int>>& inv) {
  auto key = [&](const std::string& k) { return prefix + k; };
  double A = take(c, key("A"));
  if (A != 0) inv.emplace_back(A, offset);
  double A1 = take(c, key("A1")), A2 = take(c, key("A2")), A3 = take(c, key("A3"));
  requireConstraint(c, key("A4"), -(A1 + A2 + A3),
                    key("A4") + " (x4^2 coefficient) must equal -(A1+A2+A3)");
  double diag[4] = {A1, A2, A3, -(A1 + A2 + A3)};
  for (int i = 0; i < 4; ++i) hess[(offset + i) * dim + (offset + i)] += 2 * diag[i];
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      double bij = take(c, key("B" + std::to_string(i) + std::to_string(j)));
      if (bij != 0) setPair(hess, dim, offset + i, offset + j, bij);
    }
  for (int i = 1; i <= 4; ++i) linear[offset + i - 1] += take(c, key("B" + std::to_string(i)));
  constant += take(c, key("C"));
}

}  // namespace

ScalarField exampleFieldFactory(const FieldSpec& spec) {
  std::map<std::string, double> c = spec.coeffs;
  switch (spec.family) {
    case FieldSpec::Family::SD4: {
      // A (x.x) + sum B_j x_j + C
      double A = take(c, "A"), C = take(c, "C");
      std::vector<double> b(4, 0.0), h(16, 0.0);
      for (int i = 1; i <= 4; ++i) b[i - 1] = take(c, "B" + std::to_string(i));
      for (int i = 0; i < 4; ++i) h[i * 4 + i] = 2 * A;
      if (!c.empty())
        throw std::invalid_argument("exampleFieldFactory: unknown coefficient " +
                                    c.begin()->first);
      return {4, C, std::move(b), std::move(h)};
    }
    case FieldSpec::Family::ASD4: {
      double constant = 0;
      std::vector<double> b(4, 0.0), h(16, 0.0);
      std::vector<std::pair<double, int>> inv;
      buildAsd4Block(c, "", 4, 0, constant, b, h, inv);
      if (!c.empty())
        throw std::invalid_argument("exampleFieldFactory: unknown coefficient " +
                                    c.begin()->first);
      return {4, constant, std::move(b), std::move(h), std::move(inv)};
    }
    case FieldSpec::Family::H2: {
      double constant = take(c, "C0");
      std::vector<double> b(8, 0.0), h(64, 0.0);
      std::vector<std::pair<double, int>> inv;
      buildAsd4Block(c, "f1.", 8, 0, constant, b, h, inv);
      buildAsd4Block(c, "f2.", 8, 4, constant, b, h, inv);
      double C1 = take(c, "C1"), C2 = take(c, "C2"), C3 = take(c, "C3");
      double D1 = take(c, "D1"), D2 = take(c, "D2"), D3 = take(c, "D3");
      double E1 = take(c, "E1"), E2 = take(c, "E2"), E3 = take(c, "E3");
      double F1 = take(c, "F1"), F2 = take(c, "F2"), F3 = take(c, "F3");
      requireConstraint(c, "C4", -(C1 + C2 + C3),
                        "C4 (x4 x8 coefficient) must equal -(C1+C2+C3)");
      requireConstraint(c, "D4", -(D1 - D2 - D3),
                        "D4 (x4 x7 coefficient) must equal -(D1-D2-D3)");
      requireConstraint(c, "E4", E1 + E2 - E3,
                        "E4 (x4 x6 coefficient) must equal +(E1+E2-E3)");
      requireConstraint(c, "F4", F1 - F2 + F3,
                        "F4 (x4 x5 coefficient) must equal +(F1-F2+F3)");
      setPair(h, 8, 1, 5, C1);
      setPair(h, 8, 2, 6, C2);
      setPair(h, 8, 3, 7, C3);
      setPair(h, 8, 4, 8, -(C1 + C2 + C3));
      setPair(h, 8, 1, 6, D1);
      setPair(h, 8, 2, 5, D2);
      setPair(h, 8, 3, 8, D3);
      setPair(h, 8, 4, 7, -(D1 - D2 - D3));
      setPair(h, 8, 1, 7, E1);
      setPair(h, 8, 2, 8, E2);
      setPair(h, 8, 3, 5, E3);
      setPair(h, 8, 4, 6, E1 + E2 - E3);
      setPair(h, 8, 1, 8, F1);
      setPair(h, 8, 2, 7, F2);
      setPair(h, 8, 3, 6, F3);
      setPair(h, 8, 4, 5, F1 - F2 + F3);
      if (!c.empty())
        throw std::invalid_argument("exampleFieldFactory: unknown coefficient " +
                                    c.begin()->first);
      return {8, constant, std::move(b), std::move(h), std::move(inv)};
    }
  }
  throw std::invalid_argument("exampleFieldFactory: unknown family");
}

FieldSpec parseFieldSpec(const std::string& text) {
  FieldSpec spec;
  std::istringstream in(text);
  std::string tok;
  if (!std::getline(in, tok, ',')) throw std::invalid_argument("empty field spec");
  if (tok == "sd")
    spec.family = FieldSpec::Family::SD4;
  else if (tok == "asd")
    spec.family = FieldSpec::Family::ASD4;
  else if (tok == "h2")
    spec.family = FieldSpec::Family::H2;
  else
    throw std::invalid_argument("unknown field family: " + tok);
  while (std::getline(in, tok, ',')) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("field spec entries must be key=value: " + tok);
    spec.coeffs[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
  }
  return spec;
}

QuatGaugeField::QuatGaugeField(NahmSolution sol, ScalarField f, int sign, int nq)
    : sol_(std::move(sol)), f_(std::move(f)), sign_(sign), structure_(nq) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("QuatGaugeField: sign is +-1");
  if (f_.dim() != structure_.dim())
    throw std::invalid_argument("QuatGaugeField: field dimension mismatch");
}

std::vector<AlgebraCoeffs> QuatGaugeField::connectionAt(const std::vector<double>& x) const {
  if (f_.singularAt(x)) throw std::domain_error("QuatGaugeField: f singular at x");
  double s = f_.value(x);
  if (!sol_.contains(s))
    throw std::domain_error("QuatGaugeField: f(x) outside the Nahm interval");
  NahmSolution::Triple t = sol_.T(s);
  std::vector<double> g = f_.gradient(x);
  const int n = dim(), d = sol_.algebra().dim();
  std::vector<AlgebraCoeffs> A(n, AlgebraCoeffs(d, 0.0));
  for (int i = 0; i < 3; ++i) {
    std::vector<double> jdf = structure_.jAction(i + 1, g);
    for (int mu = 0; mu < n; ++mu) {
      if (jdf[mu] == 0) continue;
      for (int m = 0; m < d; ++m) A[mu][m] += sign_ * jdf[mu] * t[i][m];
    }
  }
  return A;
}

FormD dJdf(const QuatStructure& q, int i, const std::vector<double>& hessian) {
  // d(J^i(df)) = -antisym(J^i H + H J^i) over dx^{rho mu}
  const int n = q.dim();
  const MatD& J = q.J(i);
  FormD out(n, 2);
  for (int r = 0; r < n; ++r)
    for (int m = r + 1; m < n; ++m) {
      double v = 0;
      for (int k = 0; k < n; ++k)
        v += J(r, k) * hessian[k * n + m] + hessian[r * n + k] * J(k, m);
      if (v != 0) out.add((IndexMask{1} << r) | (IndexMask{1} << m), -v);
    }
  return out;
}

QuatCurvature QuatGaugeField::curvatureAt(const std::vector<double>& x) const {
  if (f_.singularAt(x)) throw std::domain_error("QuatGaugeField: f singular at x");
  double s = f_.value(x);
  if (!sol_.contains(s))
    throw std::domain_error("QuatGaugeField: f(x) outside the Nahm interval");
  const GaugeAlgebra& alg = sol_.algebra();
  const int n = dim(), d = alg.dim();
  NahmSolution::Triple t = sol_.T(s), tp = sol_.Tprime(s);
  std::vector<double> g = f_.gradient(x);
  std::vector<double> H = f_.hessian(x);

  FormD df(n, 1);
  for (int mu = 0; mu < n; ++mu)
    if (g[mu] != 0) df.add(IndexMask{1} << mu, g[mu]);
  std::array<FormD, 3> jdf = {FormD(n, 1), FormD(n, 1), FormD(n, 1)};
  for (int i = 0; i < 3; ++i) {
    std::vector<double> w = structure_.jAction(i + 1, g);
    for (int mu = 0; mu < n; ++mu)
      if (w[mu] != 0) jdf[i].add(IndexMask{1} << mu, w[mu]);
  }

  QuatCurvature F;
  auto accumulate = [&](const FormD& form, const AlgebraCoeffs& val, double scale) {
    for (const auto& [mask, c] : form.coeffs()) {
      AlgebraCoeffs& slot = F.try_emplace(mask, AlgebraCoeffs(d, 0.0)).first->second;
      for (int m = 0; m < d; ++m) slot[m] += scale * c * val[m];
    }
  };
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    accumulate(wedge(df, jdf[i]), tp[i], sign_);
    accumulate(dJdf(structure_, i + 1, H), t[i], sign_);
    accumulate(wedge(jdf[j], jdf[k]), alg.bracket(t[j], t[k]), 1.0);
  }
  return F;
}

QuatCurvature QuatGaugeField::curvatureFD(const std::vector<double>& x, double h) const {
  if (!(h > 0)) throw std::invalid_argument("curvatureFD: h must be positive");
  const int n = dim(), d = sol_.algebra().dim();
  std::vector<std::vector<AlgebraCoeffs>> plus, minus;
  for (int mu = 0; mu < n; ++mu) {
    std::vector<double> xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    plus.push_back(connectionAt(xp));
    minus.push_back(connectionAt(xm));
  }
  std::vector<AlgebraCoeffs> A = connectionAt(x);
  QuatCurvature F;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      AlgebraCoeffs val(d, 0.0);
      for (int m = 0; m < d; ++m)
        val[m] = (plus[mu][nu][m] - minus[mu][nu][m]) / (2 * h) -
                 (plus[nu][mu][m] - minus[nu][mu][m]) / (2 * h);
      AlgebraCoeffs br = sol_.algebra().bracket(A[mu], A[nu]);
      for (int m = 0; m < d; ++m) val[m] += br[m];
      F.emplace((IndexMask{1} << mu) | (IndexMask{1} << nu), std::move(val));
    }
  return F;
}

double sdSystemResidual(const ScalarField& f, const std::vector<double>& x) {
  if (f.dim() != 4) throw std::invalid_argument("sdSystemResidual: R^4 only");
  std::vector<double> H = f.hessian(x);
  double worst = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      worst = std::max(worst, std::abs(H[p * 4 + p] - H[q * 4 + q]));
      worst = std::max(worst, std::abs(H[p * 4 + q]));
    }
  return worst;
}

double asdHnResidual(const ScalarField& f, int nq, const std::vector<double>& x) {
  QuatStructure q(nq);
  if (f.dim() != q.dim()) throw std::invalid_argument("asdHnResidual: dimension mismatch");
  std::vector<double> H = f.hessian(x);
  double c1 = -1.0;
  for (int i = 2; i <= 2 * nq - 1; ++i) c1 *= i;
  c1 /= std::pow(2.0, nq - 1);
  double worst = 0;
  for (int i = 1; i <= 3; ++i) {
    FormD dj = dJdf(q, i, H);
    FormD lhs = dj;
    for (int p = 1; p < nq; ++p) lhs = wedge(lhs, q.fundamental());
    FormD rhs = c1 * hodge(dj);
    FormD diff = lhs - rhs;
    double den = std::max(1.0, std::sqrt(inner(dj, dj)));
    worst = std::max(worst, std::sqrt(inner(diff, diff)) / den);
  }
  return worst;
}

double curvatureNorm(const QuatCurvature& F, const GaugeAlgebra& algebra) {
  double s = 0;
  for (const auto& [mask, val] : F) s += algebra.inner(val, val);
  return std::sqrt(std::max(0.0, s));
}

namespace {

// per-algebra-coefficient scalar 2-forms of the curvature
std::vector<FormD> componentsOf(const QuatCurvature& F, int n, int d) {
  std::vector<FormD> comp(d, FormD(n, 2));
  for (const auto& [mask, val] : F)
    for (int m = 0; m < d; ++m)
      if (val[m] != 0) comp[m].add(mask, val[m]);
  return comp;
}

}  // namespace

double sdAsdCurvatureResidual(const QuatCurvature& F, const GaugeAlgebra& algebra, int want) {
  if (want != 1 && want != -1) throw std::invalid_argument("want must be +-1");
  const int d = algebra.dim();
  std::vector<FormD> comp = componentsOf(F, 4, d);
  std::vector<FormD> defect;
  defect.reserve(d);
  for (int i = 0; i < d; ++i)
    defect.push_back(hodge(comp[i]) - static_cast<double>(want) * comp[i]);
  double num = 0, den = 0;
  AlgebraCoeffs ei(d, 0.0), ej(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ei.assign(d, 0.0);
      ej.assign(d, 0.0);
      ei[i] = 1;
      ej[j] = 1;
      double g = algebra.inner(ei, ej);
      if (g == 0) continue;
      num += g * inner(defect[i], defect[j]);
      den += g * inner(comp[i], comp[j]);
    }
  if (den <= 0) return 0.0;
  return std::sqrt(std::max(0.0, num) / den);
}

double quatWedgeResidual(const QuatCurvature& F, const GaugeAlgebra& algebra,
                         const QuatStructure& q, double c) {
  const int d = algebra.dim();
  std::vector<FormD> comp = componentsOf(F, q.dim(), d);
  std::vector<FormD> defect;
  defect.reserve(d);
  for (int i = 0; i < d; ++i) {
    FormD lhs = comp[i];
    for (int p = 1; p < q.nq(); ++p) lhs = wedge(lhs, q.fundamental());
    defect.push_back(lhs - c * hodge(comp[i]));
  }
  double num = 0, den = 0;
  AlgebraCoeffs ei(d, 0.0), ej(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ei.assign(d, 0.0);
      ej.assign(d, 0.0);
      ei[i] = 1;
      ej[j] = 1;
      double g = algebra.inner(ei, ej);
      if (g == 0) continue;
      num += g * inner(defect[i], defect[j]);
      den += g * inner(comp[i], comp[j]);
    }
  if (den <= 0) return 0.0;
  return std::sqrt(std::max(0.0, num) / den);
}

}  // namespace ilab
