#ifndef ILAB_QUAT_HPP
#define ILAB_QUAT_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ilab/form.hpp"
#include "ilab/matrix.hpp"

namespace ilab {

/// Coefficient vector over the gauge algebra basis {k_j}.
using AlgebraCoeffs = std::vector<double>;

/// A matrix Lie algebra presented by a basis with structure constants;
/// brackets of coefficient vectors are evaluated from the structure
/// constants (the matrix realization backs norms and serves as the default
/// test harness).
class GaugeAlgebra {
 public:
  static GaugeAlgebra fromMatrices(std::vector<MatD> basis);
  /// iso-normalized su(2) basis with [k1,k2] = -2 k3 (cyclically).
  static const GaugeAlgebra& su2();

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<MatD>& basis() const { return basis_; }
  double structureConstant(int i, int j, int k) const;

  AlgebraCoeffs bracket(const AlgebraCoeffs& a, const AlgebraCoeffs& b) const;
  double inner(const AlgebraCoeffs& a, const AlgebraCoeffs& b) const;
  double norm(const AlgebraCoeffs& a) const;
  MatD realize(const AlgebraCoeffs& a) const;

 private:
  std::vector<MatD> basis_;
  std::vector<double> structure_;
  std::vector<double> gram_;
};

/// A triple T = (T_1, T_2, T_3) of algebra-valued functions of one real
/// parameter with derivative access; solutions of T_i' = [T_j, T_k].
class NahmSolution {
 public:
  enum class Kind { Pole, Integrated, Custom };
  using Triple = std::array<AlgebraCoeffs, 3>;

  /// T_i(s) = k_i/(2s) on (0, inf); requires dim >= 3 and the su(2)
  /// relations on the first three basis elements.
  static NahmSolution pole(const GaugeAlgebra& algebra);
  static NahmSolution custom(const GaugeAlgebra& algebra, std::function<Triple(double)> T,
                             std::function<Triple(double)> Tprime, double sMin, double sMax);

  Kind kind() const { return kind_; }
  const GaugeAlgebra& algebra() const { return algebra_; }
  double sMin() const { return sMin_; }
  double sMax() const { return sMax_; }
  bool contains(double s) const { return s > sMin_ && s < sMax_; }

  Triple T(double s) const;
  Triple Tprime(double s) const;

  struct Sample {
    double s;
    Triple T;
    Triple dT;
  };
  const std::vector<Sample>& samples() const { return samples_; }

 private:
  friend NahmSolution integrateNahm(const GaugeAlgebra&, const Triple&, double, double,
                                    const struct NahmStepControl&);
  friend NahmSolution nahmFromCsv(const GaugeAlgebra&, const std::string&);
  NahmSolution(Kind k, GaugeAlgebra a) : kind_(k), algebra_(std::move(a)) {}

  Kind kind_;
  GaugeAlgebra algebra_;
  double sMin_ = 0, sMax_ = 0;
  std::function<Triple(double)> tFn_, tpFn_;
  std::vector<Sample> samples_;  // integrated kind; Hermite interpolation
  bool blewUp_ = false;

 public:
  bool blewUp() const { return blewUp_; }
};

struct NahmStepControl {
  double step = 1e-3;
  double overflowGuard = 1e8;
};

/// Fixed-step classical 4th-order integration of T_i' = [T_j, T_k].
/// Blow-up (common for Nahm data) truncates the interval and is flagged.
NahmSolution integrateNahm(const GaugeAlgebra& algebra, const NahmSolution::Triple& T0,
                           double s0, double s1, const NahmStepControl& ctrl = {});

/// max over cyclic (ijk) of |T_i'(s) - [T_j(s), T_k(s)]| (Frobenius).
double nahmResidual(const NahmSolution& sol, double s);

/// CSV: s, then the coefficient entries of T1, T2, T3 (columns Ti.kj).
std::string nahmCsv(const NahmSolution& sol, const std::vector<double>& ss);
/// Reads the nahmCsv format back as an interpolating solution.
NahmSolution nahmFromCsv(const GaugeAlgebra& algebra, const std::string& csv);

/// The flat quaternionic structure on R^{4n}: the triple of complex
/// structures acting on 1-forms, the Kahler forms, and the fundamental
/// 4-form.
class QuatStructure {
 public:
  explicit QuatStructure(int nq);
  int nq() const { return nq_; }
  int dim() const { return 4 * nq_; }
  /// Matrix of J^i on 1-form coefficients, i in 1..3.
  const MatD& J(int i) const;
  const FormD& sigma(int i) const;
  const FormD& fundamental() const { return sigma4_; }

  std::vector<double> jAction(int i, const std::vector<double>& oneForm) const;

 private:
  int nq_;
  std::vector<MatD> J_;
  std::vector<FormD> sigmas_;
  FormD sigma4_;
};

/// Scalar functions supported by the connection ansatz: quadratics plus
/// inverse-square terms A |x_block|^{-2} per quaternionic block, with
/// hand-coded exact gradient and Hessian.
class ScalarField {
 public:
  ScalarField(int dim, double constant, std::vector<double> linear,
              std::vector<double> hessian,  // dim x dim symmetric, row-major
              std::vector<std::pair<double, int>> inverseBlocks = {});

  int dim() const { return dim_; }
  double value(const std::vector<double>& x) const;
  std::vector<double> gradient(const std::vector<double>& x) const;
  std::vector<double> hessian(const std::vector<double>& x) const;
  bool singularAt(const std::vector<double>& x) const;
  bool hasSingularTerms() const { return !inv_.empty(); }

 private:
  int dim_;
  double c_;
  std::vector<double> b_;
  std::vector<double> h0_;
  std::vector<std::pair<double, int>> inv_;  // (A, block offset)
};

/// Example families for the ansatz. Coefficients are named; constrained
/// coefficients may be supplied explicitly (validated against the family
/// constraint, rejection names the constraint) or left out (auto-filled).
struct FieldSpec {
  enum class Family { SD4, ASD4, H2 };
  Family family = Family::SD4;
  std::map<std::string, double> coeffs;
};

ScalarField exampleFieldFactory(const FieldSpec& spec);
FieldSpec parseFieldSpec(const std::string& text);  // "sd,A=1,C=2" form

/// Algebra-coefficient-valued 2-form at a point.
using QuatCurvature = std::map<IndexMask, AlgebraCoeffs>;

/// Connection ansatz omega = sign * sum_i T_i(f) J^i(df), evaluated
/// pointwise as coefficient vectors per coordinate direction.
class QuatGaugeField {
 public:
  QuatGaugeField(NahmSolution sol, ScalarField f, int sign, int nq);
  int dim() const { return structure_.dim(); }
  const QuatStructure& structure() const { return structure_; }
  const NahmSolution& solution() const { return sol_; }
  const ScalarField& field() const { return f_; }
  int sign() const { return sign_; }

  std::vector<AlgebraCoeffs> connectionAt(const std::vector<double>& x) const;

  /// Curvature from the closed expression: the three-term sum with
  /// d(J^i(df)) assembled from the Hessian (no numeric differentiation).
  QuatCurvature curvatureAt(const std::vector<double>& x) const;

  /// Independent check: componentwise central differences plus the
  /// structure-constant bracket.
  QuatCurvature curvatureFD(const std::vector<double>& x, double h) const;

 private:
  NahmSolution sol_;
  ScalarField f_;
  int sign_;
  QuatStructure structure_;
};

/// d(J^i(df)) at x as a 2-form (from the Hessian anticommutator).
FormD dJdf(const QuatStructure& q, int i, const std::vector<double>& hessian);

/// max over p<q of |H_pp - H_qq| and |H_pq| on R^4.
double sdSystemResidual(const ScalarField& f, const std::vector<double>& x);

/// max over i of |d(J^i df) ^ Sigma^{n-1} - c1 * (d J^i df)| /
/// max(1, |d(J^i df)|) on R^{4n}.
double asdHnResidual(const ScalarField& f, int nq, const std::vector<double>& x);

/// |*F - want F| / |F| for an algebra-valued curvature on R^4 (0/0 -> 0).
double sdAsdCurvatureResidual(const QuatCurvature& F, const GaugeAlgebra& algebra,
                              int want);

/// |F ^ Sigma^{n-1} - c * (*F)| / |F| on R^{4n} (0/0 -> 0).
double quatWedgeResidual(const QuatCurvature& F, const GaugeAlgebra& algebra,
                         const QuatStructure& q, double c);

double curvatureNorm(const QuatCurvature& F, const GaugeAlgebra& algebra);

}  // namespace ilab

#endif  // ILAB_QUAT_HPP
