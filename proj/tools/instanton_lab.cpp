// Command-line driver: runs the verification suites and writes
// deterministic JSON reports (exit 0 all pass, 1 any failure, 2 usage).
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "ilab/gstruct.hpp"
#include "ilab/quat.hpp"
#include "ilab/radial.hpp"
#include "ilab/report.hpp"
#include "ilab/rng.hpp"
#include "ilab/tables.hpp"
#include "ilab/yangmills.hpp"

using namespace ilab;

namespace {

CheckResult boolCheck(const std::string& id, bool pass, const std::string& note = "") {
  return {id, pass, pass ? 0.0 : 1.0, 0.0, note};
}

CheckResult residCheck(const std::string& id, double residual, double tol,
                       const std::string& note = "") {
  return {id, residual <= tol, residual, tol, note};
}

CheckResult floorCheck(const std::string& id, double value, double floor,
                       const std::string& note = "") {
  CheckResult r{id, value > floor, value, floor, note};
  return r;
}

Report algebraSuite(std::uint64_t seed) {
  Report rep("algebra", seed);

  auto dimCheck = [&](const std::string& id, const std::vector<FormQ>& forms, int expect) {
    int dim = stabilizerAlgebra(forms).dimension();
    CheckResult r{id, dim == expect, static_cast<double>(dim), static_cast<double>(expect),
                  "stabilizer dimension, exact arithmetic"};
    rep.add(r);
  };
  dimCheck("stabilizer.su2.dim", {tables::sigmaR4(), tables::psiR4(), tables::psiHatR4()}, 3);
  dimCheck("stabilizer.g2.dim", {tables::phiR7()}, 14);
  dimCheck("stabilizer.spin7.dim", {tables::cayleyR8()}, 21);
  dimCheck("stabilizer.su3.dim",
           {tables::kahlerR6(), tables::holVolReR6(), tables::holVolImR6()}, 8);
  dimCheck("stabilizer.sp2.dim",
           {tables::sigmaI(1, 2), tables::sigmaI(2, 2), tables::sigmaI(3, 2)}, 10);

  rep.add(boolCheck("hodge.starphi.printed", hodge(tables::phiR7()) == tables::starPhiR7(),
                    "recomputed dual 4-form equals the printed one"));

  {
    Rng rng(seed);
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n)
      for (int k = 0; k <= n && ok; ++k) {
        FormQ a = rng.rationalForm(n, k);
        int sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
        ok = hodge(hodge(a)) == ExactReal(sign) * a;
      }
    rep.add(boolCheck("hodge.double.sign", ok, "** = (-1)^{k(n-k)} on random forms"));
  }

  auto tableChecks = [&](const std::string& name, const LieSubalgebra& table,
                         const std::vector<FormQ>& definers) {
    LieSubalgebra oracle = stabilizerAlgebra(definers);
    bool span = table.dimension() == oracle.dimension();
    for (const FormQ& f : table.forms())
      span = span && oracle.spanCoordinates(f).has_value();
    for (const FormQ& f : oracle.forms())
      span = span && table.spanCoordinates(f).has_value();
    rep.add(boolCheck("table." + name + ".span", span,
                      "printed table spans the stabilizer oracle output"));
    bool pairing = true;
    for (int j = 0; j < table.dimension(); ++j)
      pairing = pairing &&
                table.forms()[j] == ExactReal(table.scale()[j]) * iso(table.basis()[j]);
    rep.add(boolCheck("table." + name + ".pairing", pairing,
                      "forms[j] = scale[j] * iso(basis[j])"));
  };
  tableChecks("su2", tables::su2Table(),
              {tables::sigmaR4(), tables::psiR4(), tables::psiHatR4()});
  tableChecks("g2", tables::g2Table(), {tables::phiR7()});
  tableChecks("spin7", tables::spin7Table(), {tables::cayleyR8()});

  {
    bool ok = true;
    FormQ phi = tables::phiR7(), starphi = hodge(phi);
    for (const FormQ& b : tables::g2Table().forms())
      ok = ok && hodge(wedge(phi, b)) == -b && wedge(starphi, b).isZero();
    rep.add(boolCheck("membership.g2.printed", ok,
                      "every printed beta satisfies both conditions"));
  }
  {
    bool ok = true;
    FormQ Phi = tables::cayleyR8();
    for (const FormQ& b : tables::spin7Table().forms())
      ok = ok && hodge(wedge(Phi, b)) == -b;
    rep.add(boolCheck("membership.spin7.printed", ok,
                      "every (repaired) beta satisfies the condition"));
  }
  {
    const LieSubalgebra& s7 = tables::spin7Table();
    bool ok = s7.basis()[2] == isoInv(s7.forms()[2]) &&
              s7.basis()[13] == isoInv(s7.forms()[13]);
    rep.add(boolCheck("table.spin7.repairs", ok,
                      "e_3 and e_14 agree with isoInv of the printed betas"));
  }

  {
    Rng rng(seed + 1);
    bool equiv = true;
    FormQ phi = tables::phiR7(), starphi = hodge(phi);
    const LieSubalgebra& g2 = tables::g2Table();
    for (int t = 0; t < 200 && equiv; ++t) {
      FormQ w = rng.rationalForm(7, 2);
      bool c1 = hodge(wedge(phi, w)) == -w;
      bool c2 = wedge(starphi, w).isZero();
      bool mem = g2.project(w).outPart.isZero();
      equiv = (c1 == c2) && (c1 == mem);
    }
    rep.add(boolCheck("membership.g2.equivalence", equiv,
                      "the two conditions and span membership agree, 200 samples"));
  }
  {
    Rng rng(seed + 2);
    bool equiv = true;
    for (int t = 0; t < 200 && equiv; ++t) {
      FormQ w = rng.rationalForm(4, 2);
      equiv = isASD(w) == isInstanton(w, GStructure::su2(), 0.0).pass;
    }
    rep.add(boolCheck("membership.su2.asd", equiv,
                      "su(2) membership is anti-self-duality, 200 samples"));
  }
  {
    Rng rng(seed + 3);
    bool equiv = true;
    for (int t = 0; t < 100 && equiv; ++t) {
      FormQ w = rng.rationalForm(4, 2);
      equiv = quatASDPredicate(w, 1) == isASD(w);
    }
    rep.add(boolCheck("quat.asd1.equivalence", equiv,
                      "n=1 wedge predicate (c1=-1) is anti-self-duality, 100 samples"));
  }
  rep.add(boolCheck("quat.sd.sigma",
                    quatSDPredicate(tables::sigmaI(1, 2), 2) &&
                        quatSDPredicate(tables::sigmaI(2, 2), 2) &&
                        quatSDPredicate(tables::sigmaI(3, 2), 2),
                    "sigma_i satisfy the c2 = 5 predicate on R^8"));
  rep.add(boolCheck("sigma.fundamental.r4",
                    tables::fundamental4Form(1) == ExactReal(3) * FormQ::dx(4, {1, 2, 3, 4}),
                    "fundamental 4-form on R^4 is 3 dx^{1234}"));
  return rep;
}

GeometryKind parseBasicGeometry(const std::string& s) {
  if (s == "su2") return GeometryKind::Su2;
  if (s == "g2") return GeometryKind::G2;
  if (s == "spin7") return GeometryKind::Spin7;
  throw CLI::ValidationError("--geometry", "unknown geometry: " + s);
}

double basicConstant(GeometryKind k) {
  switch (k) {
    case GeometryKind::Su2: return -1.0;
    case GeometryKind::G2: return -12.0;
    default: return -2.0 / 3.0;
  }
}

Report instantonSuite(GeometryKind kind, double C, int points, double fdStep, double tol,
                      std::uint64_t seed) {
  Report rep("instanton", seed);
  rep.setParameter("geometry", geometryName(kind));
  rep.setParameter("C", C);
  rep.setParameter("cn", basicConstant(kind));
  rep.setParameter("points", points);
  rep.setParameter("fdStep", fdStep);
  rep.setParameter("tolerance", tol);

  const GStructure& g = GStructure::byKind(kind);
  RadialProfile basic = RadialProfile::closedForm(basicConstant(kind), C);
  double worstOde = 0;
  for (int i = 0; i < 1000; ++i) {
    double r = std::pow(10.0, -2.0 + 5.0 * i / 999.0);
    worstOde =
        std::max(worstOde, std::abs(instantonOdeResidual(kind, basic.a(r), basic.da(r), r)));
  }
  rep.add(residCheck("ode.residual", worstOde, 1e-12,
                     "closed-form profile vs the instanton ODE, 1000 radii"));

  SamplePlan plan;
  plan.points = points;
  plan.fdStep = fdStep;
  plan.tolerance = tol;
  plan.seed = seed;
  FieldReport field = verifyInstantonField(g, basic, plan);
  rep.add(residCheck("field.maxRatio", field.maxRatio, tol,
                     "FD-curvature residual ratio at random points"));

  RadialProfile control =
      RadialProfile::custom([](double r) { return r; }, [](double) { return 1.0; });
  SamplePlan ctrlPlan = plan;
  ctrlPlan.points = std::min(points, 25);
  FieldReport bad = verifyInstantonField(g, control, ctrlPlan);
  rep.add(floorCheck("control.ratio", bad.maxRatio, 1e-2,
                     "negative control a(r) = r; pass means ratio exceeds the floor"));

  EnergyReport energy = curvatureEnergy(g, basic, 100.0);
  CheckResult ce{"energy.finite", !energy.divergenceFlag, energy.value, 0.0,
                 "radial curvature energy over [0, 100]; value reported"};
  rep.add(ce);
  return rep;
}

Report negativeSuite(const std::optional<std::string>& which, std::uint64_t seed) {
  Report rep("negative", seed);
  auto runNeg = [&](GeometryKind kind) {
    NegativeReport r = negativeAnsatzCheck(kind);
    std::string name = geometryName(kind);
    rep.add(floorCheck(name + ".coefficientGap", r.coefficientGap, 1e-8,
                       "per-component ODE coefficients disagree"));
    rep.add(boolCheck(name + ".inconsistent", !r.consistent && !r.producesInstantons,
                      "the ansatz does not produce instantons"));
    rep.add(floorCheck(name + ".gridMinRatio", r.gridMinRatio, 0.05,
                       "closed-form family residual floor on the (c, C, r) grid"));
  };
  auto runControl = [&](GeometryKind kind, double q) {
    NegativeReport r = negativeAnsatzCheck(kind);
    std::string name = geometryName(kind);
    rep.add(boolCheck(name + ".consistent", r.consistent && r.transverse == 0,
                      "all components demand one ODE"));
    rep.add(residCheck(name + ".coefficient", std::abs(r.meanCoefficient - q), 1e-10,
                       "recovered ODE coefficient matches the printed value"));
  };
  if (!which || *which == "su3") runNeg(GeometryKind::Su3OnR6);
  if (!which || *which == "sp2") runNeg(GeometryKind::Sp2OnR8);
  if (!which) {
    runControl(GeometryKind::Su2, 2.0);
    runControl(GeometryKind::G2, 1.0 / 6.0);
    runControl(GeometryKind::Spin7, 3.0);
  }
  return rep;
}

Report ymSuite(double r0, double u0, double v0, double rEnd, double step,
               const std::string& csvOut, std::uint64_t seed) {
  Report rep("ym", seed);
  rep.setParameter("r0", r0);
  rep.setParameter("u0", u0);
  rep.setParameter("v0", v0);
  rep.setParameter("rEnd", rEnd);
  rep.setParameter("step", step);

  StepControl ctrl;
  ctrl.initialStep = step;
  YMTrajectory t = integrateYM({r0, u0, v0}, rEnd, ctrl);
  rep.add(boolCheck("trajectory.finite", t.completed || t.blewUp,
                    t.blewUp ? "blow-up detected and truncated" : "completed"));
  if (v0 == 0.0) {
    double maxV = 0;
    for (const YMState& s : t.states) maxV = std::max(maxV, std::abs(s.v));
    rep.add(residCheck("v.invariant", maxV, 1e-10, "v stays on the instanton branch"));
  }
  if (!csvOut.empty()) {
    std::ofstream out(csvOut);
    out << trajectoryCsv(t);
  }

  // closed-form instanton profiles satisfy the second-order equation
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    double r = std::pow(10.0, -2.0 + 4.0 * i / 499.0);
    double C = 1.0, d = r * r + C;
    double a = -r / d, da = -(C - r * r) / (d * d);
    double dda = -(2 * r * r * r - 6 * C * r) / (d * d * d);
    worst = std::max(worst, std::abs(ymResidual(a, da, dda, r)));
  }
  rep.add(residCheck("instanton.ymResidual", worst, 1e-10,
                     "basic profile solves the Yang-Mills equation, 500 radii"));

  // fourth-order convergence by step halving against a tight reference
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
    double ratio = err(1.0 / 64) / err(1.0 / 128);
    CheckResult r{"integrator.order4", ratio > 16 * 0.7 && ratio < 16 * 1.3, ratio, 16.0,
                  "error ratio under step halving (16x expected)"};
    rep.add(r);
  }
  return rep;
}

Report nahmSuite(const std::string& solution, const std::string& fieldSpecText, int dim,
                 const std::string& csvOut, std::uint64_t seed) {
  Report rep("nahm", seed);
  rep.setParameter("solution", solution);
  rep.setParameter("dim", dim);

  const GaugeAlgebra& k = GaugeAlgebra::su2();
  NahmSolution sol = [&] {
    if (solution == "pole") return NahmSolution::pole(k);
    std::ifstream in(solution);
    if (!in) throw CLI::ValidationError("--solution", "cannot read file: " + solution);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return nahmFromCsv(k, text);
  }();

  {
    double worst = 0;
    for (double s : {0.4, 1.0, 2.0, 5.0})
      if (sol.contains(s)) worst = std::max(worst, nahmResidual(sol, s));
    rep.add(residCheck("solution.residual", worst, solution == "pole" ? 1e-14 : 1e-6,
                       "Nahm residual at sample parameters"));
  }

  {
    // conserved traces along an integrated trajectory
    NahmSolution::Triple t0{AlgebraCoeffs{0.4, -0.2, 0.1}, AlgebraCoeffs{0.0, 0.3, -0.5},
                            AlgebraCoeffs{0.2, 0.1, 0.3}};
    NahmStepControl ctrl;
    ctrl.step = 1e-2;
    NahmSolution traj = integrateNahm(k, t0, 0.0, 1.0, ctrl);
    auto ip = [&](const NahmSolution::Sample& s, int i, int j) {
      return frobenius(k.realize(s.T[i]), k.realize(s.T[j]));
    };
    const auto& f = traj.samples().front();
    const auto& l = traj.samples().back();
    double drift = std::max({std::abs(ip(f, 0, 1) - ip(l, 0, 1)),
                             std::abs(ip(f, 1, 2) - ip(l, 1, 2)),
                             std::abs((ip(f, 0, 0) - ip(f, 1, 1)) -
                                      (ip(l, 0, 0) - ip(l, 1, 1)))});
    rep.add(residCheck("integrate.conserved", drift, 1e-7,
                       "trace invariants along an integrated trajectory"));
    if (!csvOut.empty()) {
      std::vector<double> ss;
      for (const auto& s : traj.samples()) ss.push_back(s.s);
      std::ofstream out(csvOut);
      out << nahmCsv(traj, ss);
    }
  }

  FieldSpec spec = parseFieldSpec(fieldSpecText.empty()
                                      ? (dim == 1 ? "sd,A=1,B1=1,C=1" : "h2,C0=40,C1=1")
                                      : fieldSpecText);
  ScalarField f = exampleFieldFactory(spec);
  rep.setParameter("field", fieldSpecText.empty() ? "(default)" : fieldSpecText);

  Rng rng(seed);
  if (dim == 1) {
    int sign = spec.family == FieldSpec::Family::ASD4 ? -1 : +1;
    int want = spec.family == FieldSpec::Family::ASD4 ? -1 : +1;
    QuatGaugeField field(sol, f, sign, 1);
    double worst = 0, worstFd = 0;
    int tested = 0;
    for (int t = 0; t < 60 && tested < 20; ++t) {
      std::vector<double> x(4);
      for (double& c : x) c = rng.uniform(-1.2, 1.2);
      if (f.singularAt(x) || !sol.contains(f.value(x))) continue;
      ++tested;
      QuatCurvature F = field.curvatureAt(x);
      worst = std::max(worst, sdAsdCurvatureResidual(F, k, want));
      QuatCurvature FD = field.curvatureFD(x, 1e-5);
      for (const auto& [mask, val] : FD) {
        AlgebraCoeffs diff = val;
        for (size_t m = 0; m < diff.size(); ++m) diff[m] -= F.at(mask)[m];
        worstFd = std::max(worstFd, k.norm(diff));
      }
    }
    rep.add(residCheck(want > 0 ? "curvature.sd" : "curvature.asd", worst, 1e-10,
                       "duality residual at sampled points"));
    rep.add(residCheck("curvature.fd", worstFd, 1e-6,
                       "closed curvature expression vs finite differences"));
  } else {
    QuatGaugeField field(sol, f, -1, 2);
    QuatStructure q(2);
    double worst = 0, worstPde = 0;
    int tested = 0;
    for (int t = 0; t < 60 && tested < 10; ++t) {
      std::vector<double> x(8);
      for (double& c : x) c = rng.uniform(-0.8, 0.8);
      if (f.singularAt(x) || !sol.contains(f.value(x))) continue;
      ++tested;
      worst = std::max(worst, quatWedgeResidual(field.curvatureAt(x), k, q, -3.0));
      worstPde = std::max(worstPde, asdHnResidual(f, 2, x));
    }
    rep.add(residCheck("curvature.quatASD", worst, 1e-10,
                       "wedge predicate (c1 = -3) for the -omega curvature"));
    rep.add(residCheck("field.secondOrder", worstPde, 1e-9,
                       "second-order system residual for the family"));
  }
  return rep;
}

int writeAndExit(const Report& rep, const std::string& outPath) {
  std::string text = dumpDeterministic(rep.document());
  if (outPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(outPath);
    if (!out) {
      std::cerr << "cannot write " << outPath << "\n";
      return 2;
    }
    out << text;
  }
  return rep.allPass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"instanton-lab: verification suites for flat-space instanton constructions"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string outPath;
  app.add_option("--seed", seed, "random seed recorded in the report (default 0)");
  app.add_option("--out", outPath, "report output path (default stdout)");

  auto* algebra = app.add_subcommand("algebra", "basis tables and stabilizer suites");

  auto* instanton = app.add_subcommand("instanton", "radial instanton verification");
  std::string geom = "su2";
  double C = 1.0, fdStep = 1e-5, tol = 1e-4;
  int points = 100;
  instanton->add_option("--geometry", geom, "su2 | g2 | spin7")->capture_default_str();
  instanton->add_option("--C", C, "closed-form constant C > 0")->capture_default_str();
  instanton->add_option("--points", points, "sample points")->capture_default_str();
  instanton->add_option("--fd-step", fdStep, "central-difference step")
      ->capture_default_str();
  instanton->add_option("--tol", tol, "field residual tolerance")->capture_default_str();

  auto* negative = app.add_subcommand("negative", "ansatz negative results");
  std::string negGeom;
  negative->add_option("--geometry", negGeom, "su3 | sp2 (default: both plus controls)");

  auto* ym = app.add_subcommand("ym", "radial Yang-Mills system");
  double r0 = 0.1, u0 = -1.0 / 1.01, v0 = 0.0, rEnd = 50.0, step = 1e-3;
  std::string ymCsv;
  ym->add_option("--r0", r0, "initial radius > 0")->capture_default_str();
  ym->add_option("--u0", u0, "initial u = a/r")->capture_default_str();
  ym->add_option("--v0", v0, "initial v")->capture_default_str();
  ym->add_option("--r-end", rEnd, "final radius")->capture_default_str();
  ym->add_option("--step", step, "initial step")->capture_default_str();
  ym->add_option("--csv-out", ymCsv, "write the trajectory as CSV");

  auto* nahm = app.add_subcommand("nahm", "Nahm / quaternionic ansatz");
  std::string solution = "pole", fieldSpec;
  int dim = 1;
  std::string nahmCsvOut;
  nahm->add_option("--solution", solution, "pole | path to a trajectory CSV")
      ->capture_default_str();
  nahm->add_option("--f", fieldSpec, "field family, e.g. sd,A=1,C=1 / asd,A=1 / h2,C1=1");
  nahm->add_option("--dim", dim, "quaternionic dimension (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  nahm->add_option("--csv-out", nahmCsvOut, "write the integrated trajectory as CSV");

  auto* all = app.add_subcommand("all", "every suite with default parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("INSTANTON_LAB_SEED")) seed = std::strtoull(env, nullptr, 10);

  try {
    if (algebra->parsed()) return writeAndExit(algebraSuite(seed), outPath);
    if (instanton->parsed()) {
      if (!(C > 0)) {
        std::cerr << "C must be positive\n";
        return 2;
      }
      GeometryKind kind = parseBasicGeometry(geom);
      return writeAndExit(instantonSuite(kind, C, points, fdStep, tol, seed), outPath);
    }
    if (negative->parsed()) {
      std::optional<std::string> which;
      if (!negGeom.empty()) {
        if (negGeom != "su3" && negGeom != "sp2") {
          std::cerr << "unknown geometry for negative: " << negGeom << "\n";
          return 2;
        }
        which = negGeom;
      }
      return writeAndExit(negativeSuite(which, seed), outPath);
    }
    if (ym->parsed()) {
      if (!(r0 > 0) || !(rEnd > r0)) {
        std::cerr << "need 0 < r0 < r-end\n";
        return 2;
      }
      return writeAndExit(ymSuite(r0, u0, v0, rEnd, step, ymCsv, seed), outPath);
    }
    if (nahm->parsed())
      return writeAndExit(nahmSuite(solution, fieldSpec, dim, nahmCsvOut, seed), outPath);
    if (all->parsed()) {
      Report rep("all", seed);
      rep.merge(algebraSuite(seed), "algebra");
      rep.merge(instantonSuite(GeometryKind::Su2, 1.0, 100, 1e-5, 1e-4, seed), "su2");
      rep.merge(instantonSuite(GeometryKind::G2, 1.0, 100, 1e-5, 1e-4, seed), "g2");
      rep.merge(instantonSuite(GeometryKind::Spin7, 1.0, 100, 1e-5, 1e-4, seed), "spin7");
      rep.merge(negativeSuite(std::nullopt, seed), "negative");
      rep.merge(ymSuite(0.1, -1.0 / 1.01, 0.0, 50.0, 1e-3, "", seed), "ym");
      rep.merge(nahmSuite("pole", "", 1, "", seed), "nahm.r4");
      rep.merge(nahmSuite("pole", "", 2, "", seed), "nahm.h2");
      return writeAndExit(rep, outPath);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
