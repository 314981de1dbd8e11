#ifndef ILAB_RADIAL_HPP
#define ILAB_RADIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilab/gstruct.hpp"

namespace ilab {

/// Radial profile a(r) with derivative access. Closed-form profiles are
/// a(r) = cn * r / (r^2 + C) with C > 0.
class RadialProfile {
 public:
  enum class Kind { ClosedForm, Tabulated, Custom };

  static RadialProfile closedForm(double cn, double C);
  /// Piecewise-linear interpolant through (r, a) samples, slope derivative.
  static RadialProfile tabulated(std::vector<std::pair<double, double>> samples);
  static RadialProfile custom(std::function<double(double)> a,
                              std::function<double(double)> da);

  Kind kind() const { return kind_; }
  double a(double r) const { return a_(r); }
  double da(double r) const { return da_(r); }
  /// Closed-form parameters when kind() == ClosedForm.
  double cn() const { return cn_; }
  double C() const { return C_; }

 private:
  RadialProfile(Kind k, std::function<double(double)> a, std::function<double(double)> da)
      : kind_(k), a_(std::move(a)), da_(std::move(da)) {}
  Kind kind_;
  std::function<double(double)> a_;
  std::function<double(double)> da_;
  double cn_ = 0, C_ = 0;
};

/// Algebra-valued 2-form at a point: component matrices F_{mu nu} indexed
/// by the increasing pair mask.
using AlgebraValued2Form = std::map<IndexMask, MatD>;

/// Numeric view of a structure's 2-form subbundle, used on curvature
/// values: double forms, the iso-normalized matrix basis entering the
/// connection ansatz, and the Gram data needed for projections and norms.
class NumericAlgebraView {
 public:
  explicit NumericAlgebraView(const LieSubalgebra& g);
  /// Lambda^2-orthonormalized view (for algebras with no printed scale
  /// convention); the span is unchanged.
  static NumericAlgebraView orthonormalized(const LieSubalgebra& g);

  int ambientDim() const { return n_; }
  int dimension() const { return static_cast<int>(forms_.size()); }
  const std::vector<FormD>& forms() const { return forms_; }
  const std::vector<MatD>& ansatzMatrices() const { return mats_; }
  /// c_{ij}^k for the ansatz matrix basis.
  double structureConstant(int i, int j, int k) const;

  /// Projection of a numeric 2-form onto the complement of span(forms).
  FormD projectOut(const FormD& w) const;

  /// Coordinates of an so(n) matrix over the ansatz basis (Frobenius
  /// least squares; exact for matrices in the span).
  std::vector<double> algebraCoordinates(const MatD& m) const;

  /// |P_out F| / |F| for an algebra-valued 2-form, with the Frobenius
  /// tensor norm on Lambda^2 (x) g. 0/0 -> 0.
  double residualRatio(const AlgebraValued2Form& F) const;

  /// Frobenius tensor norm squared of an algebra-valued 2-form.
  double normSquared(const AlgebraValued2Form& F) const;

 private:
  NumericAlgebraView() = default;
  int n_ = 0;
  std::vector<FormD> forms_;
  std::vector<MatD> mats_;
  std::vector<double> structure_;        // over ansatz basis
  std::vector<double> formGramInv_;      // dim x dim
  std::vector<double> matGram_;          // Frobenius Gram of ansatz matrices
  std::vector<double> matGramInv_;
  void finalize();
};

/// The radial connection ansatz A(x) = a(r) sum_j ((x/r) -| beta_j) (x) M_j
/// with M_j = isoInv(beta_j); equivalently r a(r) sum alpha_j (x) M_j for
/// the unit-sphere 1-forms alpha_j. Smooth at 0 iff a(r)/r is bounded.
class RadialGaugeField {
 public:
  RadialGaugeField(const GStructure& geometry, RadialProfile profile);
  /// Explicit (2-form, matrix) pairs; used for covariance tests and
  /// nonstandard normalizations.
  RadialGaugeField(int dim, std::vector<FormD> betas, std::vector<MatD> mats,
                   RadialProfile profile);

  int dim() const { return n_; }
  const RadialProfile& profile() const { return profile_; }

  /// Connection coefficient matrices A_mu(x).
  std::vector<MatD> connectionAt(const std::vector<double>& x) const;
  /// Per-basis-element coefficient 1-forms of the connection at x.
  std::vector<FormD> coefficientFormsAt(const std::vector<double>& x) const;

 private:
  int n_;
  std::vector<FormD> betas_;
  std::vector<MatD> mats_;
  RadialProfile profile_;
};

/// Curvature F_{mu nu} = d_mu A_nu - d_nu A_mu + [A_mu, A_nu] by central
/// differences with step h > 0; O(h^2) accurate away from singular points.
AlgebraValued2Form curvatureFD(const RadialGaugeField& field, const std::vector<double>& x,
                               double h);

/// a' - RHS of the radial instanton ODE for the geometry:
/// su2: a' = a/r (1 + 2 a r); g2: a' = a/r (1 + a r/6); spin7: a' = a/r (1 + 3 a r).
double instantonOdeResidual(GeometryKind kind, double a, double da, double r);

/// Coefficient q in a' = a/r (1 + q a r) for the supported geometries.
double instantonOdeCoefficient(GeometryKind kind);

struct SamplePlan {
  int points = 100;
  double rMin = 0.1;
  double rMax = 5.0;
  double fdStep = 1e-5;
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
};

struct FieldReport {
  double maxRatio = 0;
  double meanRatio = 0;
  int points = 0;
  bool pass = false;
};

/// Samples the field at random points and reports the worst / mean
/// curvature residual ratio against the structure's subbundle.
FieldReport verifyInstantonField(const GStructure& geometry, const RadialProfile& profile,
                                 const SamplePlan& plan);

/// Exact-in-(a, a', r) symbolic curvature of the ansatz at a reference
/// direction: F^m = (2a/r) beta_m + ((a'r - a)/r) xflat ^ alpha_m + a^2 B_m,
/// with B_m the structure-constant contraction of alpha_j ^ alpha_k.
class SymbolicRadialCurvature {
 public:
  SymbolicRadialCurvature(NumericAlgebraView view, std::vector<double> xhat);

  static SymbolicRadialCurvature forGeometry(const GStructure& g);

  const NumericAlgebraView& view() const { return view_; }
  const std::vector<double>& referenceDirection() const { return xhat_; }

  /// Component 2-forms F^m for given (a, a', r).
  std::vector<FormD> componentsAt(double a, double da, double r) const;
  /// Residual ratio of the full curvature at (a, a', r).
  double ratioAt(double a, double da, double r) const;
  /// Norm^2 of the full curvature at (a, a', r) (Frobenius tensor norm).
  double normSquaredAt(double a, double da, double r) const;

  struct ComponentOde {
    enum class Status { Vacuous, Ode, Transverse };
    Status status;
    double q = 0;           // least-squares coefficient in a' = a/r + q a^2...
    double transverse = 0;  // relative defect orthogonal to the Y direction
  };
  /// Per-component instanton equations: ((a'r-a)/r) Y_m + a^2 Z_m = 0
  /// classified against the single-ODE shape a' = a/r + q a^2.
  std::vector<ComponentOde> extractComponentOdes() const;

 private:
  NumericAlgebraView view_;
  std::vector<double> xhat_;
  std::vector<FormD> beta_;       // component X parts
  std::vector<FormD> linear_;     // Y_m = xflat ^ alpha_m
  std::vector<FormD> brackets_;   // Z_m = B_m
};

struct NegativeGrid {
  std::vector<double> c = {-24, -12, -6, -3, -1.5, -2.0 / 3.0};
  std::vector<double> C = {0.5, 1.0};
  std::vector<double> r = {1.0, 2.0, 4.0};
};

struct NegativeReport {
  std::string geometry;
  int components = 0;
  int vacuous = 0;
  int transverse = 0;
  bool consistent = false;
  double coefficientGap = 0;   // spread of per-component ODE coefficients
  double meanCoefficient = 0;  // recovered q when consistent
  double gridMinRatio = 0;
  bool producesInstantons = false;  // consistent && grid reaches ~0
};

/// Component-ODE extraction for the radial ansatz. For su3/sp2 (algebras
/// from the stabilizer oracle, orthonormalized) the component equations
/// are mutually inconsistent; for su2/g2/spin7 (printed tables) a single
/// ODE with the known coefficient is recovered.
NegativeReport negativeAnsatzCheck(GeometryKind kind, const NegativeGrid& grid = {});

struct QuadraturePlan {
  int panelsUnit = 16;       // panels on [0, 1]
  double panelGrowth = 1.5;  // geometric growth of panel widths past 1
  int gaussPoints = 8;       // Gauss-Legendre nodes per panel
};

struct EnergyReport {
  double value = 0;
  double errorEstimate = 0;  // |refined - value|
  bool divergenceFlag = false;
  double tailRatio = 0;  // last-decade / previous-decade contribution
};

/// Radial curvature energy integral vol(S^{n-1}) int_0^rMax |F|^2 r^{n-1} dr
/// for the ansatz (|F| is the Frobenius tensor norm, constant on spheres
/// for these geometries). A growing integrand tail sets divergenceFlag.
EnergyReport curvatureEnergy(const GStructure& geometry, const RadialProfile& profile,
                             double rMax, const QuadraturePlan& plan = {});

}  // namespace ilab

#endif  // ILAB_RADIAL_HPP
