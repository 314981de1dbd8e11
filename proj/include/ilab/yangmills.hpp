#ifndef ILAB_YANGMILLS_HPP
#define ILAB_YANGMILLS_HPP

#include <string>
#include <vector>

namespace ilab {

/// State of the first-order reformulation of the 4d radial Yang-Mills ODE:
/// u = a/r and v = r^5 (u' - 2 r u^2); instanton trajectories have v = 0.
struct YMState {
  double r = 0;
  double u = 0;
  double v = 0;
  double a() const { return r * u; }
};

/// Residual of r^2 a'' + 3 r a' - 4 r a^2 (3 + 2 r a) - 3 a.
double ymResidual(double a, double da, double dda, double r);

/// Right-hand side (du/dr, dv/dr) = (2 r u^2 + v/r^5, -4 r u v); r > 0.
std::pair<double, double> uvRHS(const YMState& s);

struct StepControl {
  double initialStep = 1e-3;
  double tolerance = 1e-10;   // local error per step (adaptive mode)
  bool adaptive = true;
  double overflowGuard = 1e12;
  int maxSteps = 2000000;
};

struct YMTrajectory {
  std::vector<YMState> states;
  double maxLocalError = 0;
  bool blewUp = false;
  bool completed = false;
};

/// Classical 4th-order one-step integration with step halving for local
/// error control. Never starts at r = 0 (the system is singular there).
YMTrajectory integrateYM(const YMState& initial, double rEnd, const StepControl& ctrl = {});

/// CSV columns r,u,v,a with a header row.
std::string trajectoryCsv(const YMTrajectory& t);

}  // namespace ilab

#endif  // ILAB_YANGMILLS_HPP
