// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ilab/gstruct.hpp"
#include "ilab/quat.hpp"
#include "ilab/radial.hpp"
#include "ilab/rng.hpp"
#include "ilab/tables.hpp"
#include "ilab/yangmills.hpp"

using namespace ilab;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1. Stabilizer dimensions, exact arithmetic.
void criterion1() {
  struct Case {
    const char* name;
    std::vector<FormQ> forms;
    int expect;
  };
  std::vector<Case> cases;
  cases.push_back({"su2", {tables::sigmaR4(), tables::psiR4(), tables::psiHatR4()}, 3});
  cases.push_back({"g2", {tables::phiR7()}, 14});
  cases.push_back({"spin7", {tables::cayleyR8()}, 21});
  cases.push_back(
      {"su3", {tables::kahlerR6(), tables::holVolReR6(), tables::holVolImR6()}, 8});
  cases.push_back(
      {"sp2", {tables::sigmaI(1, 2), tables::sigmaI(2, 2), tables::sigmaI(3, 2)}, 10});
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    int dim = stabilizerAlgebra(c.forms).dimension();
    pass = pass && dim == c.expect;
    detail += std::string(c.name) + "=" + std::to_string(dim) + " ";
  }
  criterion(1, "stabilizer dimensions 3/14/21/8/10", pass, detail);
}

// 2. Table fidelity: membership conditions, span equality, typo repairs.
void criterion2() {
  bool membership = true;
  {
    FormQ sigma = tables::sigmaR4(), psi = tables::psiR4(), psihat = tables::psiHatR4();
    for (const FormQ& b : tables::su2Table().forms())
      membership = membership && wedge(sigma, b).isZero() && wedge(psi, b).isZero() &&
                   wedge(psihat, b).isZero();
    FormQ phi = tables::phiR7(), starphi = hodge(phi);
    for (const FormQ& b : tables::g2Table().forms())
      membership =
          membership && hodge(wedge(phi, b)) == -b && wedge(starphi, b).isZero();
    FormQ Phi = tables::cayleyR8();
    for (const FormQ& b : tables::spin7Table().forms())
      membership = membership && hodge(wedge(Phi, b)) == -b;
  }

  auto sameSpan = [](const LieSubalgebra& a, const LieSubalgebra& b) {
    if (a.dimension() != b.dimension()) return false;
    for (const FormQ& f : a.forms())
      if (!b.spanCoordinates(f)) return false;
    for (const FormQ& f : b.forms())
      if (!a.spanCoordinates(f)) return false;
    return true;
  };
  bool spans =
      sameSpan(tables::su2Table(),
               stabilizerAlgebra({tables::sigmaR4(), tables::psiR4(), tables::psiHatR4()})) &&
      sameSpan(tables::g2Table(), stabilizerAlgebra({tables::phiR7()})) &&
      sameSpan(tables::spin7Table(), stabilizerAlgebra({tables::cayleyR8()}));

  const LieSubalgebra& s7 = tables::spin7Table();
  LieSubalgebra oracle = stabilizerAlgebra({tables::cayleyR8()});
  bool repairs = s7.basis()[2] == isoInv(s7.forms()[2]) &&
                 s7.basis()[13] == isoInv(s7.forms()[13]) &&
                 oracle.spanCoordinates(s7.forms()[2]).has_value() &&
                 oracle.spanCoordinates(s7.forms()[13]).has_value();

  criterion(2, "table fidelity (membership, spans, spin7 repairs)",
            membership && spans && repairs,
            std::string("membership=") + (membership ? "ok" : "BAD") +
                " spans=" + (spans ? "ok" : "BAD") + " repairs=" + (repairs ? "ok" : "BAD"));
}

// 3. Hodge fidelity: printed dual 4-form and the double-star sign.
void criterion3() {
  bool starphi = hodge(tables::phiR7()) == tables::starPhiR7();
  bool doubleStar = true;
  Rng rng(100);
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      FormQ a = rng.rationalForm(n, k);
      int sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
      doubleStar = doubleStar && hodge(hodge(a)) == ExactReal(sign) * a;
    }
  criterion(3, "hodge fidelity (printed *phi, ** sign on all grades, n <= 8)",
            starphi && doubleStar,
            std::string("starphi=") + (starphi ? "exact" : "BAD") +
                " doubleStar=" + (doubleStar ? "exact" : "BAD"));
}

// 4. Basic instantons: ODE residual, FD field residual, negative control.
void criterion4() {
  bool pass = true;
  double worstOde = 0, worstField = 0, controlMin = 1e300;
  for (auto [kind, cn] : std::vector<std::pair<GeometryKind, double>>{
           {GeometryKind::Su2, -1.0},
           {GeometryKind::G2, -12.0},
           {GeometryKind::Spin7, -2.0 / 3.0}}) {
    for (double C : {0.5, 1.0, 2.0}) {
      RadialProfile p = RadialProfile::closedForm(cn, C);
      for (int i = 0; i < 1000; ++i) {
        double r = std::pow(10.0, -2.0 + 5.0 * i / 999.0);
        worstOde =
            std::max(worstOde, std::abs(instantonOdeResidual(kind, p.a(r), p.da(r), r)));
      }
      SamplePlan plan;  // 100 points, r in [0.1, 5], h = 1e-5, tol 1e-4
      FieldReport rep = verifyInstantonField(GStructure::byKind(kind), p, plan);
      worstField = std::max(worstField, rep.maxRatio);
    }
    SamplePlan plan;
    plan.points = 25;
    RadialProfile control =
        RadialProfile::custom([](double r) { return r; }, [](double) { return 1.0; });
    controlMin = std::min(
        controlMin, verifyInstantonField(GStructure::byKind(kind), control, plan).maxRatio);
  }
  pass = worstOde < 1e-12 && worstField < 1e-4 && controlMin > 1e-2;
  criterion(4, "basic instantons (ODE < 1e-12, field < 1e-4, control > 1e-2)", pass,
            fmt("ode=%.3g field=%.3g control=%.3g", worstOde, worstField, controlMin));
}

// 5. Negative result for su3/sp2 with su2/g2/spin7 controls.
void criterion5() {
  bool pass = true;
  std::string detail;
  for (GeometryKind kind : {GeometryKind::Su3OnR6, GeometryKind::Sp2OnR8}) {
    NegativeReport r = negativeAnsatzCheck(kind);
    pass = pass && !r.consistent && r.coefficientGap > 1e-8 && r.gridMinRatio > 0.05;
    detail += r.geometry + "(gap=" + fmt("%.3g", r.coefficientGap) +
              ",grid=" + fmt("%.3g", r.gridMinRatio) + ") ";
  }
  for (auto [kind, q] : std::vector<std::pair<GeometryKind, double>>{
           {GeometryKind::Su2, 2.0},
           {GeometryKind::G2, 1.0 / 6.0},
           {GeometryKind::Spin7, 3.0}}) {
    NegativeReport r = negativeAnsatzCheck(kind);
    pass = pass && r.consistent && std::abs(r.meanCoefficient - q) < 1e-10;
    detail += r.geometry + "(q=" + fmt("%.12g", r.meanCoefficient) + ") ";
  }
  criterion(5, "radial ansatz negative results and ODE-coefficient controls", pass, detail);
}

// 6. Yang-Mills support: residual, v-invariance, integrator order.
void criterion6() {
  double worstYm = 0;
  for (double C : {0.5, 1.0, 2.0}) {
    for (int i = 0; i < 500; ++i) {
      double r = std::pow(10.0, -2.0 + 4.0 * i / 499.0);
      double d = r * r + C;
      double a = -r / d, da = -(C - r * r) / (d * d);
      double dda = -(2 * r * r * r - 6 * C * r) / (d * d * d);
      worstYm = std::max(worstYm, std::abs(ymResidual(a, da, dda, r)));
    }
  }

  double maxV = 0;
  {
    double C = 1.0, r0 = 0.1;
    YMTrajectory t = integrateYM({r0, -1.0 / (r0 * r0 + C), 0.0}, 50.0);
    for (const YMState& s : t.states) maxV = std::max(maxV, std::abs(s.v));
    if (!t.completed) maxV = 1e300;
  }

  double ratio;
  {
    YMState init{0.5, -0.8, 0.3};
    auto endState = [&](double h) {
      StepControl c;
      c.adaptive = false;
      c.initialStep = h;
      return integrateYM(init, 1.5, c).states.back();
    };
    YMState ref = endState(1.0 / 8192);
    auto err = [&](double h) {
      YMState e = endState(h);
      return std::abs(e.u - ref.u) + std::abs(e.v - ref.v);
    };
    ratio = err(1.0 / 64) / err(1.0 / 128);
  }
  bool pass = worstYm < 1e-10 && maxV < 1e-10 && ratio > 16 * 0.7 && ratio < 16 * 1.3;
  criterion(6, "Yang-Mills (residual < 1e-10, v < 1e-10 on [0.1,50], order ~ 4)", pass,
            fmt("ym=%.3g maxV=%.3g ratio=%.3g", worstYm, maxV, ratio));
}

// 7. Energy convergence between rMax = 100 and rMax = 200.
void criterion7() {
  RadialProfile basic = RadialProfile::closedForm(-1.0, 1.0);
  EnergyReport e100 = curvatureEnergy(GStructure::su2(), basic, 100.0);
  EnergyReport e200 = curvatureEnergy(GStructure::su2(), basic, 200.0);
  double rel = std::abs(e200.value - e100.value) / std::abs(e100.value);
  bool pass = rel < 1e-6 && !e100.divergenceFlag && !e200.divergenceFlag;
  criterion(7, "curvature energy converges (su2, C = 1)", pass,
            fmt("value=%.9g rel(100->200)=%.3g", e200.value, rel));
}

// 8. Nahm / quaternionic checks.
void criterion8() {
  const GaugeAlgebra& k = GaugeAlgebra::su2();
  NahmSolution pole = NahmSolution::pole(k);

  double poleRes = 0;
  for (double s : {0.3, 1.0, 4.0}) poleRes = std::max(poleRes, nahmResidual(pole, s));

  double drift;
  {
    NahmSolution::Triple t0{AlgebraCoeffs{0.4, -0.2, 0.1}, AlgebraCoeffs{0.0, 0.3, -0.5},
                            AlgebraCoeffs{0.2, 0.1, 0.3}};
    NahmStepControl coarse, fine;
    coarse.step = 2e-2;
    fine.step = 1e-2;
    auto driftOf = [&](const NahmStepControl& c) {
      NahmSolution sol = integrateNahm(k, t0, 0.0, 1.0, c);
      auto ip = [&](const NahmSolution::Sample& s, int i, int j) {
        return frobenius(k.realize(s.T[i]), k.realize(s.T[j]));
      };
      const auto& f = sol.samples().front();
      const auto& l = sol.samples().back();
      return std::max({std::abs(ip(f, 0, 1) - ip(l, 0, 1)),
                       std::abs(ip(f, 1, 2) - ip(l, 1, 2)),
                       std::abs((ip(f, 0, 0) - ip(f, 1, 1)) -
                                (ip(l, 0, 0) - ip(l, 1, 1)))});
    };
    double dc = driftOf(coarse), df = driftOf(fine);
    // conserved to the integrator order: halving the step wins ~2^4
    drift = (df < dc / 8.0 || df < 1e-14) ? df : 1e300;
  }

  Rng rng(200);
  double sdRes = 0, asdRes = 0, fdRes = 0;
  {
    ScalarField f = exampleFieldFactory(
        {FieldSpec::Family::SD4, {{"A", 1.0}, {"B1", 1.0}, {"C", 1.0}}});
    QuatGaugeField field(pole, f, +1, 1);
    int tested = 0;
    for (int t = 0; t < 80 && tested < 25; ++t) {
      std::vector<double> x(4);
      for (double& c : x) c = rng.uniform(-1.2, 1.2);
      if (f.value(x) < 0.05) continue;
      ++tested;
      QuatCurvature F = field.curvatureAt(x);
      sdRes = std::max(sdRes, sdAsdCurvatureResidual(F, k, +1));
      QuatCurvature FD = field.curvatureFD(x, 1e-5);
      for (const auto& [mask, val] : FD) {
        AlgebraCoeffs diff = val;
        for (size_t m = 0; m < diff.size(); ++m) diff[m] -= F.at(mask)[m];
        fdRes = std::max(fdRes, k.norm(diff));
      }
    }
  }
  {
    ScalarField f = exampleFieldFactory({FieldSpec::Family::ASD4,
                                         {{"A", 1.5},
                                          {"A1", 1.0},
                                          {"A2", -0.5},
                                          {"A3", 0.4},
                                          {"B12", 0.7},
                                          {"C", 2.0}}});
    QuatGaugeField field(pole, f, -1, 1);
    int tested = 0;
    for (int t = 0; t < 80 && tested < 25; ++t) {
      std::vector<double> x(4);
      for (double& c : x) c = rng.uniform(-1.2, 1.2);
      if (f.singularAt(x) || f.value(x) < 0.05) continue;
      ++tested;
      asdRes = std::max(asdRes, sdAsdCurvatureResidual(field.curvatureAt(x), k, -1));
    }
  }

  double h2Res = 0, h2Pde = 0, brokenRes = 0;
  {
    ScalarField f = exampleFieldFactory({FieldSpec::Family::H2,
                                         {{"C0", 40.0},
                                          {"f1.A1", 1.0},
                                          {"f1.A2", -0.5},
                                          {"f1.A3", 0.25},
                                          {"f2.A1", 0.3},
                                          {"f2.A2", 0.2},
                                          {"f2.A3", -0.1},
                                          {"C1", 0.7},
                                          {"C2", -0.3},
                                          {"C3", 0.2},
                                          {"D1", 0.4},
                                          {"E2", 0.5},
                                          {"F3", 0.25}}});
    QuatGaugeField field(pole, f, -1, 2);
    QuatStructure q(2);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(8);
      for (double& c : x) c = rng.uniform(-0.8, 0.8);
      h2Res = std::max(h2Res, quatWedgeResidual(field.curvatureAt(x), k, q, -3.0));
      h2Pde = std::max(h2Pde, asdHnResidual(f, 2, x));
    }
    std::vector<double> H(64, 0.0);
    H[0 * 8 + 4] = H[4 * 8 + 0] = 1.0;  // x1 x5 without its compensator
    ScalarField broken(8, 0.0, std::vector<double>(8, 0.0), H);
    std::vector<double> x(8, 0.4);
    brokenRes = asdHnResidual(broken, 2, x);
  }

  bool asd1Equiv = true;
  {
    Rng rng2(300);
    for (int t = 0; t < 100 && asd1Equiv; ++t) {
      FormQ w = rng2.rationalForm(4, 2);
      asd1Equiv = quatASDPredicate(w, 1) == isASD(w);
    }
  }

  bool pass = poleRes < 1e-14 && drift < 1e-7 && sdRes < 1e-10 && asdRes < 1e-10 &&
              fdRes < 1e-6 && h2Res < 1e-9 && h2Pde < 1e-9 && brokenRes > 1e-3 &&
              asd1Equiv;
  criterion(8, "Nahm/quaternionic (pole, conservation, SD/ASD, H^2, c1 = -3)", pass,
            fmt("pole=%.3g sd=%.3g asd=%.3g", poleRes, sdRes, asdRes) +
                fmt(" fd=%.3g h2=%.3g broken=%.3g", fdRes, h2Res, brokenRes) +
                (asd1Equiv ? " asd1=ok" : " asd1=BAD"));
}

// 9. CLI determinism and exit codes.
void criterion9() {
#ifdef ILAB_CLI_PATH
  auto run = [](const std::string& args) {
    std::string cmd = std::string(ILAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t got;
    while (pipe && (got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int code = pipe ? WEXITSTATUS(pclose(pipe)) : -1;
    return std::make_pair(code, out);
  };
  auto body = [](const std::string& doc) {
    size_t at = doc.find("\"report\"");
    return at == std::string::npos ? doc : doc.substr(at);
  };
  auto a = run("--seed 4 nahm --solution pole --dim 1");
  auto b = run("--seed 4 nahm --solution pole --dim 1");
  bool deterministic = a.first == 0 && body(a.second) == body(b.second);
  bool exit2 = run("instanton --geometry su2 --C -1").first == 2 &&
               run("--bogus").first == 2;
  bool exit1 = run("instanton --geometry su2 --C 1 --points 4 --tol 1e-18").first == 1;
  criterion(9, "CLI golden determinism and exit-code contract",
            deterministic && exit2 && exit1,
            std::string("deterministic=") + (deterministic ? "ok" : "BAD") +
                " exit2=" + (exit2 ? "ok" : "BAD") + " exit1=" + (exit1 ? "ok" : "BAD"));
#else
  criterion(9, "CLI golden determinism and exit-code contract", false, "CLI not built");
#endif
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
