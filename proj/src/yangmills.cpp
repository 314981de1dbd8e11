#include "ilab/yangmills.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ilab {

double ymResidual(double a, double da, double dda, double r) {
  return r * r * dda + 3 * r * da - 4 * r * a * a * (3 + 2 * r * a) - 3 * a;
}

std::pair<double, double> uvRHS(const YMState& s) {
  if (!(s.r > 0)) throw std::invalid_argument("uvRHS: r must be positive");
  double r5 = std::pow(s.r, 5);
  return {2 * s.r * s.u * s.u + s.v / r5, -4 * s.r * s.u * s.v};
}

namespace {

YMState rk4Step(const YMState& s, double h) {
  auto f = [](const YMState& st) { return uvRHS(st); };
  auto [k1u, k1v] = f(s);
  YMState s2{s.r + h / 2, s.u + h / 2 * k1u, s.v + h / 2 * k1v};
  auto [k2u, k2v] = f(s2);
  YMState s3{s.r + h / 2, s.u + h / 2 * k2u, s.v + h / 2 * k2v};
  auto [k3u, k3v] = f(s3);
  YMState s4{s.r + h, s.u + h * k3u, s.v + h * k3v};
  auto [k4u, k4v] = f(s4);
  return {s.r + h, s.u + h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u),
          s.v + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)};
}

}  // namespace

YMTrajectory integrateYM(const YMState& initial, double rEnd, const StepControl& ctrl) {
  if (!(initial.r > 0)) throw std::invalid_argument("integrateYM: r0 must be positive");
  if (!(rEnd > initial.r)) throw std::invalid_argument("integrateYM: rEnd must exceed r0");
  YMTrajectory out;
  out.states.push_back(initial);
  double h = ctrl.initialStep;
  YMState s = initial;
  for (int step = 0; step < ctrl.maxSteps; ++step) {
    if (s.r >= rEnd) {
      out.completed = true;
      break;
    }
    h = std::min(h, rEnd - s.r);
    YMState full = rk4Step(s, h);
    YMState halves = rk4Step(rk4Step(s, h / 2), h / 2);
    double err =
        (std::abs(full.u - halves.u) + std::abs(full.v - halves.v)) / 15.0;
    if (ctrl.adaptive && err > ctrl.tolerance && h > 1e-12) {
      h /= 2;
      continue;
    }
    s = halves;
    out.maxLocalError = std::max(out.maxLocalError, err);
    out.states.push_back(s);
    if (std::abs(s.u) > ctrl.overflowGuard || std::abs(s.v) > ctrl.overflowGuard ||
        !std::isfinite(s.u) || !std::isfinite(s.v)) {
      out.blewUp = true;
      break;
    }
    if (ctrl.adaptive && err < ctrl.tolerance / 32) h *= 2;
  }
  return out;
}

std::string trajectoryCsv(const YMTrajectory& t) {
  std::string out = "r,u,v,a\n";
  char buf[160];
  for (const YMState& s : t.states) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.r, s.u, s.v, s.a());
    out += buf;
  }
  return out;
}

}  // namespace ilab
