#include "ilab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "ilab/rng.hpp"

namespace ilab {
namespace {

double norm(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

FormD flatD(const std::vector<double>& x) {
  FormD f(static_cast<int>(x.size()), 1);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) f.add(IndexMask{1} << i, x[i]);
  return f;
}

VectorD vecD(const std::vector<double>& x) {
  VectorD v(static_cast<int>(x.size()));
  v.components = x;
  return v;
}

std::vector<double> solveDense(std::vector<double> a, std::vector<double> b) {
  // Gaussian elimination with partial pivoting; a is k x k row-major
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
    if (d == 0) throw std::runtime_error("singular Gram matrix");
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

std::vector<double> invertDense(const std::vector<double>& g, int k) {
  std::vector<double> inv(static_cast<size_t>(k) * k);
  for (int j = 0; j < k; ++j) {
    std::vector<double> e(k, 0.0);
    e[j] = 1.0;
    std::vector<double> col = solveDense(g, e);
    for (int i = 0; i < k; ++i) inv[i * k + j] = col[i];
  }
  return inv;
}

}  // namespace

RadialProfile RadialProfile::closedForm(double cn, double C) {
  if (!(C > 0)) throw std::invalid_argument("RadialProfile: C must be positive");
  RadialProfile p(
      Kind::ClosedForm, [cn, C](double r) { return cn * r / (r * r + C); },
      [cn, C](double r) {
        double d = r * r + C;
        return cn * (C - r * r) / (d * d);
      });
  p.cn_ = cn;
  p.C_ = C;
  return p;
}

RadialProfile RadialProfile::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("tabulated: need at least 2 samples");
  std::sort(samples.begin(), samples.end());
  auto shared = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
  auto segment = [shared](double r) {
    const auto& s = *shared;
    size_t hi =
        std::lower_bound(s.begin(), s.end(), std::make_pair(r, -1e300)) - s.begin();
    return std::clamp<size_t>(hi, 1, s.size() - 1);
  };
  return RadialProfile(
      Kind::Tabulated,
      [shared, segment](double r) {
        const auto& s = *shared;
        size_t hi = segment(r);
        double t = (r - s[hi - 1].first) / (s[hi].first - s[hi - 1].first);
        return s[hi - 1].second + t * (s[hi].second - s[hi - 1].second);
      },
      [shared, segment](double r) {
        const auto& s = *shared;
        size_t hi = segment(r);
        return (s[hi].second - s[hi - 1].second) / (s[hi].first - s[hi - 1].first);
      });
}

RadialProfile RadialProfile::custom(std::function<double(double)> a,
                                    std::function<double(double)> da) {
  return RadialProfile(Kind::Custom, std::move(a), std::move(da));
}

NumericAlgebraView::NumericAlgebraView(const LieSubalgebra& g) {
  n_ = g.ambientDim();
  for (int j = 0; j < g.dimension(); ++j) {
    forms_.push_back(toNumeric(g.forms()[j]));
    mats_.push_back(toNumeric(g.ansatzBasis(j).matrix()));
  }
  finalize();
}

NumericAlgebraView NumericAlgebraView::orthonormalized(const LieSubalgebra& g) {
  NumericAlgebraView v;
  v.n_ = g.ambientDim();
  for (int j = 0; j < g.dimension(); ++j) {
    FormD f = toNumeric(g.forms()[j]);
    for (const FormD& prev : v.forms_) {
      double c = inner(f, prev);
      f -= c * prev;
    }
    double nn = std::sqrt(inner(f, f));
    if (nn < 1e-12) throw std::runtime_error("orthonormalized: dependent forms");
    f *= 1.0 / nn;
    v.forms_.push_back(f);
    // keep the iso pairing: M_j = isoInv(form_j)
    MatD m(v.n_);
    for (const auto& [mask, c] : f.coeffs()) {
      auto idx = maskIndices(mask);
      m(idx[1] - 1, idx[0] - 1) = c;
      m(idx[0] - 1, idx[1] - 1) = -c;
    }
    v.mats_.push_back(m);
  }
  v.finalize();
  return v;
}

void NumericAlgebraView::finalize() {
  const int d = dimension();
  std::vector<double> formGram(static_cast<size_t>(d) * d);
  matGram_.assign(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      formGram[i * d + j] = inner(forms_[i], forms_[j]);
      matGram_[i * d + j] = frobenius(mats_[i], mats_[j]);
    }
  formGramInv_ = invertDense(formGram, d);
  matGramInv_ = invertDense(matGram_, d);

  structure_.assign(static_cast<size_t>(d) * d * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatD br = commutator(mats_[i], mats_[j]);
      std::vector<double> coords = algebraCoordinates(br);
      for (int k = 0; k < d; ++k) {
        structure_[(static_cast<size_t>(i) * d + j) * d + k] = coords[k];
        structure_[(static_cast<size_t>(j) * d + i) * d + k] = -coords[k];
      }
    }
}

double NumericAlgebraView::structureConstant(int i, int j, int k) const {
  const int d = dimension();
  return structure_[(static_cast<size_t>(i) * d + j) * d + k];
}

FormD NumericAlgebraView::projectOut(const FormD& w) const {
  const int d = dimension();
  std::vector<double> rhs(d);
  for (int j = 0; j < d; ++j) rhs[j] = inner(w, forms_[j]);
  FormD out = w;
  for (int i = 0; i < d; ++i) {
    double c = 0;
    for (int j = 0; j < d; ++j) c += formGramInv_[i * d + j] * rhs[j];
    if (c != 0) out -= c * forms_[i];
  }
  return out;
}

std::vector<double> NumericAlgebraView::algebraCoordinates(const MatD& m) const {
  const int d = dimension();
  std::vector<double> rhs(d);
  for (int j = 0; j < d; ++j) rhs[j] = frobenius(m, mats_[j]);
  std::vector<double> out(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] += matGramInv_[i * d + j] * rhs[j];
  return out;
}

double NumericAlgebraView::residualRatio(const AlgebraValued2Form& F) const {
  const int d = dimension();
  std::vector<FormD> comp(d, FormD(n_, 2));
  for (const auto& [mask, m] : F) {
    std::vector<double> coords = algebraCoordinates(m);
    for (int j = 0; j < d; ++j)
      if (coords[j] != 0) comp[j].add(mask, coords[j]);
  }
  std::vector<FormD> out;
  out.reserve(d);
  for (int j = 0; j < d; ++j) out.push_back(projectOut(comp[j]));
  double num = 0, den = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double gij = matGram_[i * d + j];
      if (gij == 0) continue;
      num += gij * inner(out[i], out[j]);
      den += gij * inner(comp[i], comp[j]);
    }
  if (den <= 0) return 0.0;
  return std::sqrt(std::max(0.0, num) / den);
}

double NumericAlgebraView::normSquared(const AlgebraValued2Form& F) const {
  double s = 0;
  for (const auto& [mask, m] : F) s += frobenius(m, m);
  return s;
}

RadialGaugeField::RadialGaugeField(const GStructure& geometry, RadialProfile profile)
    : n_(geometry.dim()), profile_(std::move(profile)) {
  const LieSubalgebra& g = geometry.algebra();
  for (int j = 0; j < g.dimension(); ++j) {
    betas_.push_back(toNumeric(g.forms()[j]));
    mats_.push_back(toNumeric(g.ansatzBasis(j).matrix()));
  }
}

RadialGaugeField::RadialGaugeField(int dim, std::vector<FormD> betas, std::vector<MatD> mats,
                                   RadialProfile profile)
    : n_(dim), betas_(std::move(betas)), mats_(std::move(mats)), profile_(std::move(profile)) {
  if (betas_.size() != mats_.size())
    throw std::invalid_argument("RadialGaugeField: betas/mats length mismatch");
}

std::vector<FormD> RadialGaugeField::coefficientFormsAt(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("RadialGaugeField: wrong point dimension");
  double r = norm(x);
  if (r == 0) throw std::invalid_argument("RadialGaugeField: singular at the origin");
  double u = profile_.a(r) / r;
  std::vector<FormD> out;
  out.reserve(betas_.size());
  for (const FormD& b : betas_) {
    FormD g = interior(vecD(x), b);
    g *= u;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<MatD> RadialGaugeField::connectionAt(const std::vector<double>& x) const {
  std::vector<FormD> coeff = coefficientFormsAt(x);
  std::vector<MatD> A(n_, MatD(n_));
  for (size_t j = 0; j < coeff.size(); ++j)
    for (const auto& [mask, c] : coeff[j].coeffs()) {
      int mu = maskIndices(mask)[0] - 1;
      for (int r = 0; r < n_; ++r)
        for (int s = 0; s < n_; ++s) A[mu](r, s) += c * mats_[j](r, s);
    }
  return A;
}

AlgebraValued2Form curvatureFD(const RadialGaugeField& field, const std::vector<double>& x,
                               double h) {
  if (!(h > 0)) throw std::invalid_argument("curvatureFD: h must be positive");
  const int n = field.dim();
  std::vector<std::vector<MatD>> plus, minus;
  plus.reserve(n);
  minus.reserve(n);
  for (int mu = 0; mu < n; ++mu) {
    std::vector<double> xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    plus.push_back(field.connectionAt(xp));
    minus.push_back(field.connectionAt(xm));
  }
  std::vector<MatD> A = field.connectionAt(x);
  AlgebraValued2Form F;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      MatD dmuAnu = (plus[mu][nu] - minus[mu][nu]) * (0.5 / h);
      MatD dnuAmu = (plus[nu][mu] - minus[nu][mu]) * (0.5 / h);
      MatD f = dmuAnu - dnuAmu + commutator(A[mu], A[nu]);
      F.emplace((IndexMask{1} << mu) | (IndexMask{1} << nu), std::move(f));
    }
  return F;
}

double instantonOdeCoefficient(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Su2: return 2.0;
    case GeometryKind::G2: return 1.0 / 6.0;
    case GeometryKind::Spin7: return 3.0;
    default: throw std::invalid_argument("instantonOdeCoefficient: unsupported geometry");
  }
}

double instantonOdeResidual(GeometryKind kind, double a, double da, double r) {
  if (!(r > 0)) throw std::invalid_argument("instantonOdeResidual: r must be positive");
  return da - a / r * (1.0 + instantonOdeCoefficient(kind) * a * r);
}

FieldReport verifyInstantonField(const GStructure& geometry, const RadialProfile& profile,
                                 const SamplePlan& plan) {
  RadialGaugeField field(geometry, profile);
  NumericAlgebraView view(geometry.algebra());
  Rng rng(plan.seed);
  FieldReport rep;
  rep.points = plan.points;
  double sum = 0;
  for (int i = 0; i < plan.points; ++i) {
    double r = rng.uniform(plan.rMin, plan.rMax);
    std::vector<double> x = rng.unitVector(geometry.dim());
    for (double& c : x) c *= r;
    double ratio = view.residualRatio(curvatureFD(field, x, plan.fdStep));
    rep.maxRatio = std::max(rep.maxRatio, ratio);
    sum += ratio;
  }
  rep.meanRatio = plan.points ? sum / plan.points : 0.0;
  rep.pass = rep.maxRatio <= plan.tolerance;
  return rep;
}

SymbolicRadialCurvature::SymbolicRadialCurvature(NumericAlgebraView view,
                                                 std::vector<double> xhat)
    : view_(std::move(view)), xhat_(std::move(xhat)) {
  const int d = view_.dimension();
  FormD xf = flatD(xhat_);
  std::vector<FormD> alpha;
  alpha.reserve(d);
  for (int j = 0; j < d; ++j) alpha.push_back(interior(vecD(xhat_), view_.forms()[j]));
  for (int m = 0; m < d; ++m) {
    beta_.push_back(view_.forms()[m]);
    linear_.push_back(wedge(xf, alpha[m]));
    FormD B(view_.ambientDim(), 2);
    for (int j = 0; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        double c = view_.structureConstant(j, k, m);
        if (std::abs(c) > 1e-13) B += c * wedge(alpha[j], alpha[k]);
      }
    brackets_.push_back(std::move(B));
  }
}

SymbolicRadialCurvature SymbolicRadialCurvature::forGeometry(const GStructure& g) {
  std::vector<double> xhat(g.dim(), 0.0);
  if (g.dim() == 8)
    xhat[7] = 1.0;
  else
    xhat[0] = 1.0;
  bool printedTable = g.kind() == GeometryKind::Su2 || g.kind() == GeometryKind::G2 ||
                      g.kind() == GeometryKind::Spin7;
  NumericAlgebraView view = printedTable ? NumericAlgebraView(g.algebra())
                                         : NumericAlgebraView::orthonormalized(g.algebra());
  return {std::move(view), std::move(xhat)};
}

std::vector<FormD> SymbolicRadialCurvature::componentsAt(double a, double da,
                                                         double r) const {
  const int d = view_.dimension();
  std::vector<FormD> F;
  F.reserve(d);
  for (int m = 0; m < d; ++m) {
    FormD f = (2 * a / r) * beta_[m];
    f += ((da * r - a) / r) * linear_[m];
    f += (a * a) * brackets_[m];
    F.push_back(std::move(f));
  }
  return F;
}

double SymbolicRadialCurvature::ratioAt(double a, double da, double r) const {
  std::vector<FormD> F = componentsAt(a, da, r);
  const int d = view_.dimension();
  double num = 0, den = 0;
  for (int m = 0; m < d; ++m) {
    FormD out = view_.projectOut(F[m]);
    num += inner(out, out);
    den += inner(F[m], F[m]);
  }
  if (den <= 0) return 0.0;
  return std::sqrt(std::max(0.0, num) / den);
}

double SymbolicRadialCurvature::normSquaredAt(double a, double da, double r) const {
  std::vector<FormD> F = componentsAt(a, da, r);
  const int d = view_.dimension();
  double s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double g = frobenius(view_.ansatzMatrices()[i], view_.ansatzMatrices()[j]);
      if (g != 0) s += g * inner(F[i], F[j]);
    }
  return s;
}

std::vector<SymbolicRadialCurvature::ComponentOde>
SymbolicRadialCurvature::extractComponentOdes() const {
  // ((a'r - a)/r) Y_m + a^2 Z_m = 0 with Y, Z projected onto the
  // complement; a single ODE a' = a/r + q a^2 requires Z = -q Y there.
  std::vector<ComponentOde> out;
  const int d = view_.dimension();
  for (int m = 0; m < d; ++m) {
    FormD Y = view_.projectOut(linear_[m]);
    FormD Z = view_.projectOut(brackets_[m]);
    double ny = std::sqrt(inner(Y, Y)), nz = std::sqrt(inner(Z, Z));
    ComponentOde c;
    if (ny < 1e-12 && nz < 1e-12) {
      c.status = ComponentOde::Status::Vacuous;
    } else if (ny < 1e-12) {
      c.status = ComponentOde::Status::Transverse;
      c.transverse = 1.0;
    } else {
      double lam = inner(Z, Y) / inner(Y, Y);
      FormD W = Z - lam * Y;
      double nw = std::sqrt(inner(W, W));
      c.q = -lam;
      c.transverse = nw / std::max(ny, nz);
      c.status = c.transverse > 1e-9 ? ComponentOde::Status::Transverse
                                     : ComponentOde::Status::Ode;
    }
    out.push_back(c);
  }
  return out;
}

NegativeReport negativeAnsatzCheck(GeometryKind kind, const NegativeGrid& grid) {
  const GStructure& g = GStructure::byKind(kind);
  SymbolicRadialCurvature sym = SymbolicRadialCurvature::forGeometry(g);

  NegativeReport rep;
  rep.geometry = geometryName(kind);
  auto odes = sym.extractComponentOdes();
  rep.components = static_cast<int>(odes.size());
  double qmin = 0, qmax = 0, qsum = 0;
  int nq = 0;
  for (const auto& c : odes) {
    if (c.status == SymbolicRadialCurvature::ComponentOde::Status::Vacuous) {
      ++rep.vacuous;
      continue;
    }
    if (c.status == SymbolicRadialCurvature::ComponentOde::Status::Transverse)
      ++rep.transverse;
    qmin = nq ? std::min(qmin, c.q) : c.q;
    qmax = nq ? std::max(qmax, c.q) : c.q;
    qsum += c.q;
    ++nq;
  }
  rep.coefficientGap = nq ? qmax - qmin : 0.0;
  rep.meanCoefficient = nq ? qsum / nq : 0.0;
  rep.consistent = rep.transverse == 0 && rep.coefficientGap <= 1e-8;

  double best = std::numeric_limits<double>::infinity();
  for (double c : grid.c)
    for (double C : grid.C)
      for (double r : grid.r) {
        double a = c * r / (r * r + C);
        double da = c * (C - r * r) / ((r * r + C) * (r * r + C));
        best = std::min(best, sym.ratioAt(a, da, r));
      }
  rep.gridMinRatio = best;
  rep.producesInstantons = rep.consistent && best < 1e-8;
  return rep;
}

EnergyReport curvatureEnergy(const GStructure& geometry, const RadialProfile& profile,
                             double rMax, const QuadraturePlan& plan) {
  if (!(rMax > 0)) throw std::invalid_argument("curvatureEnergy: rMax must be positive");
  SymbolicRadialCurvature sym = SymbolicRadialCurvature::forGeometry(geometry);
  const int n = geometry.dim();
  const double sphere = 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);

  auto density = [&](double r) {
    double a = profile.a(r), da = profile.da(r);
    return sym.normSquaredAt(a, da, r) * std::pow(r, n - 1);
  };

  // 8-point Gauss-Legendre on [-1, 1]
  static const double gx[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                              -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                              0.7966664774136267,  0.9602898564975363};
  static const double gw[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                              0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                              0.2223810344533745, 0.1012285362903763};

  auto panelSum = [&](double a, double b, int panels) {
    double s = 0;
    for (int p = 0; p < panels; ++p) {
      double lo = a + (b - a) * p / panels, hi = a + (b - a) * (p + 1) / panels;
      double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
      for (int q = 0; q < 8; ++q) s += gw[q] * density(mid + half * gx[q]) * half;
    }
    return s;
  };

  auto integrate = [&](int refine) {
    double unit = std::min(1.0, rMax);
    int pu = plan.panelsUnit * refine;
    double total = panelSum(0.0, unit, pu);
    double lo = unit, w = unit / pu;
    while (lo < rMax) {
      w *= plan.panelGrowth;
      double hi = std::min(rMax, lo + w);
      total += panelSum(lo, hi, refine);
      lo = hi;
    }
    return total;
  };

  EnergyReport rep;
  double coarse = integrate(1);
  double fine = integrate(2);
  rep.value = sphere * fine;
  rep.errorEstimate = sphere * std::abs(fine - coarse);

  // divergence heuristic: the last octave should contribute less than the
  // one before it when the integral converges
  if (rMax >= 4) {
    double lastOctave = panelSum(rMax / 2, rMax, 32);
    double prevOctave = panelSum(rMax / 4, rMax / 2, 32);
    rep.tailRatio = prevOctave > 0 ? lastOctave / prevOctave : 0.0;
    rep.divergenceFlag = lastOctave > prevOctave * 1.0001 || !std::isfinite(rep.value);
  }
  return rep;
}

}  // namespace ilab
