#include "ilab/gstruct.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ilab/tables.hpp"

namespace ilab {

std::string geometryName(GeometryKind k) {
  switch (k) {
    case GeometryKind::Su2: return "su2";
    case GeometryKind::G2: return "g2";
    case GeometryKind::Spin7: return "spin7";
    case GeometryKind::Su3OnR6: return "su3";
    case GeometryKind::Sp2OnR8: return "sp2";
    case GeometryKind::QuatASD: return "quatASD";
    case GeometryKind::QuatSD: return "quatSD";
  }
  return "?";
}

Rational quatC1(int nq) {
  // -(2n-1)!/2^{n-1}
  mpz_class fact = 1;
  for (int i = 2; i <= 2 * nq - 1; ++i) fact *= i;
  mpz_class pow2 = mpz_class(1) << (nq - 1);
  Rational r(-fact, pow2);
  r.canonicalize();
  return r;
}

Rational quatC2(int nq) {
  // (2n+1)!/(6n 2^{n-1})
  mpz_class fact = 1;
  for (int i = 2; i <= 2 * nq + 1; ++i) fact *= i;
  mpz_class den = mpz_class(6 * nq) * (mpz_class(1) << (nq - 1));
  Rational r(fact, den);
  r.canonicalize();
  return r;
}

GStructure::GStructure(GeometryKind kind, int dim, int nq, std::vector<FormQ> forms,
                       LieSubalgebra algebra, std::optional<Rational> c1,
                       std::optional<Rational> c2)
    : kind_(kind),
      dim_(dim),
      nq_(nq),
      definingForms_(std::move(forms)),
      algebra_(std::move(algebra)),
      c1_(std::move(c1)),
      c2_(std::move(c2)) {}

const GStructure& GStructure::su2() {
  static const GStructure g(GeometryKind::Su2, 4, 1,
                            {tables::sigmaR4(), tables::psiR4(), tables::psiHatR4()},
                            tables::su2Table(), std::nullopt, std::nullopt);
  return g;
}

const GStructure& GStructure::g2() {
  static const GStructure g(GeometryKind::G2, 7, 0, {tables::phiR7(), tables::starPhiR7()},
                            tables::g2Table(), std::nullopt, std::nullopt);
  return g;
}

const GStructure& GStructure::spin7() {
  static const GStructure g(GeometryKind::Spin7, 8, 0, {tables::cayleyR8()},
                            tables::spin7Table(), std::nullopt, std::nullopt);
  return g;
}

const GStructure& GStructure::su3OnR6() {
  static const GStructure g(
      GeometryKind::Su3OnR6, 6, 0,
      {tables::kahlerR6(), tables::holVolReR6(), tables::holVolImR6()},
      stabilizerAlgebra({tables::kahlerR6(), tables::holVolReR6(), tables::holVolImR6()}),
      std::nullopt, std::nullopt);
  return g;
}

const GStructure& GStructure::sp2OnR8() {
  static const GStructure g(
      GeometryKind::Sp2OnR8, 8, 2,
      {tables::sigmaI(1, 2), tables::sigmaI(2, 2), tables::sigmaI(3, 2)},
      stabilizerAlgebra({tables::sigmaI(1, 2), tables::sigmaI(2, 2), tables::sigmaI(3, 2)}),
      std::nullopt, std::nullopt);
  return g;
}

const GStructure& GStructure::quatASD(int nq) {
  auto make = [](int nq_) {
    std::vector<FormQ> forms = {tables::sigmaI(1, nq_), tables::sigmaI(2, nq_),
                                tables::sigmaI(3, nq_), tables::fundamental4Form(nq_)};
    LieSubalgebra alg = stabilizerAlgebra(
        {tables::sigmaI(1, nq_), tables::sigmaI(2, nq_), tables::sigmaI(3, nq_)});
    return GStructure(GeometryKind::QuatASD, 4 * nq_, nq_, std::move(forms), std::move(alg),
                      quatC1(nq_), std::nullopt);
  };
  static const GStructure g1 = make(1);
  static const GStructure g2_ = make(2);
  if (nq == 1) return g1;
  if (nq == 2) return g2_;
  throw std::invalid_argument("quatASD: nq must be 1 or 2");
}

const GStructure& GStructure::quatSD(int nq) {
  auto make = [](int nq_) {
    std::vector<FormQ> sigmas = {tables::sigmaI(1, nq_), tables::sigmaI(2, nq_),
                                 tables::sigmaI(3, nq_)};
    std::vector<SkewEndo> basis;
    for (const FormQ& s : sigmas) basis.push_back(isoInv(s));
    LieSubalgebra alg = LieSubalgebra::fromMatrices(4 * nq_, std::move(basis));
    std::vector<FormQ> forms = sigmas;
    forms.push_back(tables::fundamental4Form(nq_));
    return GStructure(GeometryKind::QuatSD, 4 * nq_, nq_, std::move(forms), std::move(alg),
                      std::nullopt, quatC2(nq_));
  };
  static const GStructure g1 = make(1);
  static const GStructure g2_ = make(2);
  if (nq == 1) return g1;
  if (nq == 2) return g2_;
  throw std::invalid_argument("quatSD: nq must be 1 or 2");
}

const GStructure& GStructure::byKind(GeometryKind k) {
  switch (k) {
    case GeometryKind::Su2: return su2();
    case GeometryKind::G2: return g2();
    case GeometryKind::Spin7: return spin7();
    case GeometryKind::Su3OnR6: return su3OnR6();
    case GeometryKind::Sp2OnR8: return sp2OnR8();
    case GeometryKind::QuatASD: return quatASD(2);
    case GeometryKind::QuatSD: return quatSD(2);
  }
  throw std::invalid_argument("byKind: unknown geometry");
}

std::string GStructure::describeForms() const {
  std::ostringstream os;
  for (const FormQ& f : definingForms_) os << to_string(f) << "\n";
  return os.str();
}

InstantonCheck isInstanton(const FormQ& w, const GStructure& g, double tol) {
  if (w.dim() != g.dim() || w.grade() != 2)
    throw std::invalid_argument("isInstanton: grade-2 form on the structure space required");
  if (tol < 0) throw std::invalid_argument("isInstanton: negative tolerance");
  if (w.isZero()) return {true, 0.0};  // flat curvature counts as an instanton
  ProjectionResult pr = g.algebra().project(w);
  double num = toDouble(inner(pr.outPart, pr.outPart));
  double den = toDouble(inner(w, w));
  double ratio = num <= 0 ? 0.0 : std::sqrt(num / den);
  bool pass = tol == 0.0 ? pr.outPart.isZero() : ratio <= tol;
  if (g.kind() == GeometryKind::QuatASD && tol == 0.0) {
    // the wedge predicate is the defining condition; projection mirrors it
    pass = quatASDPredicate(w, g.quaternionicDim());
  }
  return {pass, ratio};
}

bool isASD(const FormQ& w) {
  if (w.dim() != 4 || w.grade() != 2)
    throw std::invalid_argument("isASD: grade-2 form on R^4 required");
  return hodge(w) == -w;
}

bool isSD(const FormQ& w) {
  if (w.dim() != 4 || w.grade() != 2)
    throw std::invalid_argument("isSD: grade-2 form on R^4 required");
  return hodge(w) == w;
}

namespace {

bool wedgePredicate(const FormQ& w, int nq, const Rational& c) {
  if (nq < 1 || w.dim() != 4 * nq || w.grade() != 2)
    throw std::invalid_argument("quaternionic predicate: grade-2 form on R^{4n} required");
  FormQ lhs = w;
  for (int i = 1; i < nq; ++i) lhs = wedge(lhs, tables::fundamental4Form(nq));
  return lhs == ExactReal(c) * hodge(w);
}

}  // namespace

bool quatSDPredicate(const FormQ& w, int nq) { return wedgePredicate(w, nq, quatC2(nq)); }
bool quatASDPredicate(const FormQ& w, int nq) { return wedgePredicate(w, nq, quatC1(nq)); }

}  // namespace ilab
