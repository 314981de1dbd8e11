#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ilab/yangmills.hpp"

using namespace ilab;

namespace {

// closed-form instanton profile and its derivatives, for residual checks
struct Basic {
  double C;
  double a(double r) const { return -r / (r * r + C); }
  double da(double r) const {
    double d = r * r + C;
    return -(C - r * r) / (d * d);
  }
  double dda(double r) const {
    double d = r * r + C;
    return -(2 * r * r * r - 6 * C * r) / (d * d * d);
  }
};

}  // namespace

TEST_CASE("ymResidual vanishes on the instanton profile, 500 radii") {
  Basic b{1.0};
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    double r = std::pow(10.0, -2.0 + 4.0 * i / 499.0);
    worst = std::max(worst, std::abs(ymResidual(b.a(r), b.da(r), b.dda(r), r)));
  }
  CHECK(worst < 1e-12);
  CHECK(ymResidual(0, 0, 0, 1.0) == 0.0);
  // a(r) = r at r=1: 3 - 4(3+2) - 3 = -20
  CHECK(ymResidual(1.0, 1.0, 0.0, 1.0) == doctest::Approx(-20.0));
}

TEST_CASE("uvRHS matches the system and its singular guard") {
  // v = 0, u = -1/(r^2+C): u' = 2 r u^2 (instanton branch)
  double C = 1.0;
  for (double r : {0.3, 1.0, 2.5}) {
    double u = -1.0 / (r * r + C);
    auto [du, dv] = uvRHS({r, u, 0.0});
    CHECK(du == doctest::Approx(2 * r * u * u));
    CHECK(dv == 0.0);
  }
  // u = 0: (v/r^5, 0)
  auto [du0, dv0] = uvRHS({2.0, 0.0, 3.0});
  CHECK(du0 == doctest::Approx(3.0 / 32.0));
  CHECK(dv0 == 0.0);
  CHECK_THROWS_AS(uvRHS({0.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("eliminating v reproduces the second-order residual along trajectories") {
  // for any (u, v) trajectory of the system, a = r u satisfies the
  // second-order equation; check by finite-differencing a numeric solution
  YMState init{0.5, -0.8, 0.3};
  StepControl ctrl;
  ctrl.adaptive = false;
  ctrl.initialStep = 1e-4;
  YMTrajectory t = integrateYM(init, 2.0, ctrl);
  REQUIRE(t.completed);
  double worst = 0;
  for (size_t i = 200; i + 200 < t.states.size(); i += 500) {
    const YMState &m = t.states[i], &l = t.states[i - 1], &r_ = t.states[i + 1];
    double h = r_.r - m.r;
    double a = m.a();
    double da = (r_.a() - l.a()) / (2 * h);
    double dda = (r_.a() - 2 * a + l.a()) / (h * h);
    worst = std::max(worst, std::abs(ymResidual(a, da, dda, m.r)));
  }
  CHECK(worst < 1e-4);  // second difference limits the attainable accuracy
}

TEST_CASE("instanton branch keeps v below 1e-10 over [0.1, 50]") {
  double C = 1.0, r0 = 0.1;
  YMState init{r0, -1.0 / (r0 * r0 + C), 0.0};
  StepControl ctrl;
  ctrl.initialStep = 1e-3;
  YMTrajectory t = integrateYM(init, 50.0, ctrl);
  REQUIRE(t.completed);
  double maxV = 0, worstU = 0;
  for (const YMState& s : t.states) {
    maxV = std::max(maxV, std::abs(s.v));
    worstU = std::max(worstU, std::abs(s.u + 1.0 / (s.r * s.r + C)));
  }
  CHECK(maxV < 1e-10);
  CHECK(worstU < 1e-8);
}

TEST_CASE("zero state stays zero") {
  YMTrajectory t = integrateYM({1.0, 0.0, 0.0}, 10.0);
  REQUIRE(t.completed);
  for (const YMState& s : t.states) {
    CHECK(s.u == 0.0);
    CHECK(s.v == 0.0);
  }
}

TEST_CASE("dv/dr along numeric trajectories equals -4ruv") {
  YMState init{0.8, 0.6, -0.4};
  StepControl ctrl;
  ctrl.adaptive = false;
  ctrl.initialStep = 1e-4;
  YMTrajectory t = integrateYM(init, 1.6, ctrl);
  REQUIRE(t.completed);
  double worst = 0;
  for (size_t i = 1; i + 1 < t.states.size(); i += 97) {
    const YMState &m = t.states[i], &l = t.states[i - 1], &r_ = t.states[i + 1];
    double dv = (r_.v - l.v) / (r_.r - l.r);
    worst = std::max(worst, std::abs(dv + 4 * m.r * m.u * m.v));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("v grows away from zero where u < 0, per the sign structure") {
  // v' = -4 r u v: with u < 0 and v > 0 the derivative is positive
  YMState init{0.5, -0.9, 1e-6};
  StepControl ctrl;
  ctrl.adaptive = false;
  ctrl.initialStep = 1e-4;
  YMTrajectory t = integrateYM(init, 1.0, ctrl);
  REQUIRE(t.completed);
  CHECK(t.states.back().v > 1e-6);
  for (size_t i = 1; i < t.states.size(); ++i) CHECK(t.states[i].v >= t.states[i - 1].v);
}

TEST_CASE("step-halving shows fourth-order convergence") {
  YMState init{0.5, -0.8, 0.3};
  double rEnd = 1.5;
  auto endState = [&](double h) {
    StepControl ctrl;
    ctrl.adaptive = false;
    ctrl.initialStep = h;
    return integrateYM(init, rEnd, ctrl).states.back();
  };
  YMState ref = endState(1.0 / 8192);
  auto err = [&](double h) {
    YMState e = endState(h);
    return std::abs(e.u - ref.u) + std::abs(e.v - ref.v);
  };
  double e1 = err(1.0 / 64), e2 = err(1.0 / 128);
  double ratio = e1 / e2;
  CHECK(ratio > 16.0 * 0.7);
  CHECK(ratio < 16.0 * 1.3);
}

TEST_CASE("blow-up detection reports and truncates, not fatal") {
  // large positive u: u' = 2ru^2 blows up in finite r
  YMTrajectory t = integrateYM({1.0, 5.0, 0.0}, 10.0);
  CHECK(t.blewUp);
  CHECK(!t.completed);
  CHECK(std::isfinite(t.states[t.states.size() - 2].u));
}

TEST_CASE("trajectory CSV export") {
  YMTrajectory t = integrateYM({1.0, -0.5, 0.0}, 1.01);
  std::string csv = trajectoryCsv(t);
  CHECK(csv.rfind("r,u,v,a\n", 0) == 0);
  CHECK(csv.find("\n1,") != std::string::npos);
  // a = r*u reconstruction in the last column
  CHECK(csv.find(",-0.5,0,-0.5") != std::string::npos);
}

TEST_CASE("integrator argument validation") {
  CHECK_THROWS_AS(integrateYM({0.0, 1.0, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integrateYM({2.0, 1.0, 0.0}, 1.0), std::invalid_argument);
}
