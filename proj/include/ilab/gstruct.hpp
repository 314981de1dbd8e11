#ifndef ILAB_GSTRUCT_HPP
#define ILAB_GSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ilab/form.hpp"
#include "ilab/liealg.hpp"

namespace ilab {

enum class GeometryKind { Su2, G2, Spin7, Su3OnR6, Sp2OnR8, QuatASD, QuatSD };

std::string geometryName(GeometryKind k);

/// A flat G-structure: the defining forms, the 2-form subbundle g (as a
/// subalgebra of so(n)), and the wedge-predicate constants where they apply.
class GStructure {
 public:
  static const GStructure& su2();
  static const GStructure& g2();
  static const GStructure& spin7();
  static const GStructure& su3OnR6();
  static const GStructure& sp2OnR8();
  static const GStructure& quatASD(int nq);  // nq in {1, 2}
  static const GStructure& quatSD(int nq);

  static const GStructure& byKind(GeometryKind k);

  GeometryKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int quaternionicDim() const { return nq_; }
  const std::vector<FormQ>& definingForms() const { return definingForms_; }
  const LieSubalgebra& algebra() const { return algebra_; }

  /// c1 = -(2n-1)!/2^{n-1} (quaternionic ASD), c2 = (2n+1)!/(6n 2^{n-1})
  /// (quaternionic SD); only present on the quaternionic structures.
  std::optional<Rational> c1() const { return c1_; }
  std::optional<Rational> c2() const { return c2_; }

  /// Defining forms rendered in dx^{ij...k} notation.
  std::string describeForms() const;

 private:
  GStructure(GeometryKind kind, int dim, int nq, std::vector<FormQ> forms,
             LieSubalgebra algebra, std::optional<Rational> c1,
             std::optional<Rational> c2);

  GeometryKind kind_;
  int dim_;
  int nq_;
  std::vector<FormQ> definingForms_;
  LieSubalgebra algebra_;
  std::optional<Rational> c1_, c2_;
};

Rational quatC1(int nq);
Rational quatC2(int nq);

struct InstantonCheck {
  bool pass;
  double residualRatio;
};

/// Membership of a curvature-type 2-form in the structure's subbundle.
/// residualRatio = |outPart|/|form| (0/0 -> 0). tol = 0 decides exactly.
/// For the quaternionic ASD structure the wedge predicate
/// w ^ Sigma^{n-1} = c1 * (*w) is evaluated directly; it agrees with the
/// projection route (cross-checked in the test suite).
InstantonCheck isInstanton(const FormQ& w, const GStructure& g, double tol = 0.0);

bool isASD(const FormQ& w);
bool isSD(const FormQ& w);

/// w ^ Sigma^{n-1} == c2 * (*w) on R^{4n}, exact.
bool quatSDPredicate(const FormQ& w, int nq);
/// w ^ Sigma^{n-1} == c1 * (*w) on R^{4n}, exact.
bool quatASDPredicate(const FormQ& w, int nq);

}  // namespace ilab

#endif  // ILAB_GSTRUCT_HPP
