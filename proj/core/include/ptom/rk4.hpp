#pragma once

namespace ptom {

/// One classical fourth-order Runge-Kutta step of the autonomous system
/// y' = rhs(y). State must support +, and scalar * (Eigen vectors do).
template <class State, class Rhs>
State rk4_step(const State& y, double h, Rhs&& rhs) {
  const State k1 = rhs(y);
  const State k2 = rhs(State(y + (0.5 * h) * k1));
  const State k3 = rhs(State(y + (0.5 * h) * k2));
  const State k4 = rhs(State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

}  // namespace ptom
