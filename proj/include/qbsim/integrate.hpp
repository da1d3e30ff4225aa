#pragma once

// Fixed-step classical Runge-Kutta integration over states with vector-space
// semantics (Eigen vectors and matrices both qualify).

#include <algorithm>
#include <cmath>

namespace qbsim {

// One RK4 step of y' = f(t, y) from t to t + h.
template <class State, class Derivative>
State rk4_step(double t, double h, const State& y, Derivative&& f) {
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * h, State(y + (0.5 * h) * k1));
  const State k3 = f(t + 0.5 * h, State(y + (0.5 * h) * k2));
  const State k4 = f(t + h, State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Uniform grid over [t_start, t_end] with the step count chosen so that the
// actual step is as close as possible to the requested one.
struct TimeGrid {
  double t_start = 0.0;
  double h = 0.0;
  long steps = 0;

  static TimeGrid make(double t_start, double t_end, double dt) {
    TimeGrid g;
    g.t_start = t_start;
    const double span = t_end - t_start;
    g.steps = std::max(1L, std::lround(span / dt));
    g.h = span / static_cast<double>(g.steps);
    return g;
  }

  double time_at(long i) const { return t_start + static_cast<double>(i) * h; }
};

}  // namespace qbsim
