#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "meridian/expression.hpp"
#include "meridian/profile.hpp"

namespace meridian {

// One classical fourth-order Runge-Kutta step of the autonomous system
// s' = rhs(s).
template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, const std::array<double, N>& s, double h) {
  const auto axpy = [](const std::array<double, N>& a, double t, const std::array<double, N>& k) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + t * k[i];
    return r;
  };
  const std::array<double, N> k1 = rhs(s);
  const std::array<double, N> k2 = rhs(axpy(s, 0.5 * h, k1));
  const std::array<double, N> k3 = rhs(axpy(s, 0.5 * h, k2));
  const std::array<double, N> k4 = rhs(axpy(s, h, k3));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = s[i] + h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  return out;
}

// Cubic Hermite interpolation through (x_i, y_i) with slopes dy_i.
// x must be strictly increasing; t is clamped to [x.front(), x.back()].
double hermite(const std::vector<double>& x, const std::vector<double>& y,
               const std::vector<double>& dy, double t);

// Quintic Hermite interpolation through values, first and second
// derivatives. Returns the interpolant's value and first three derivatives
// at t (clamped to [x.front(), x.back()]).
ScalarJet hermite5(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& dy, const std::vector<double>& ddy, double t);

// Nodes x_0 = lo, lo + step, ..., hi (the last step is shortened).
std::vector<double> step_nodes(Interval range, double step);

// Result of integrating f' = y(f) from the left end of a range.
struct AutonomousSolution {
  std::vector<double> u;
  std::vector<double> f;
  Interval realized;
  bool truncated = false;
  std::string reason;  // why integration stopped early
  // f on `realized`: value from the Hermite interpolant of the nodes,
  // derivatives from the equation: f' = y(f), f'' = y'(f) y(f),
  // f''' = (y'' y + y'^2) y.
  FunctionRef profile;
};

// Classical RK4 on f' = y(f) with f(lo) = f0. Stops early (truncated) if a
// stage leaves y's domain, y would change sign or drop below kMinSlope in
// magnitude, or f would stop being positive. Throws ProfileInvariantError
// if y(f0) is zero or undefined.
AutonomousSolution integrate_autonomous(FunctionRef y, double f0, Interval u_range,
                                        double step);

struct DirectrixSolution {
  Directrix directrix;
  Interval realized;
  bool truncated = false;
  std::string reason;
};

inline constexpr double kDirectrixSlopeCap = 50.0;

// Directrix with constant curvature b != 0. For b < 0 this is the constant
// phi = -1/b. For b > 0, phi solves
//   phi phi'' - 2 phi'^2 - phi^2 = b (phi'^2 + phi^2)^{3/2},
//   phi(lo) = 1, phi'(lo) = 0,
// by RK4 with steps shrunk by phi^2 / (phi^2 + phi'^2) as the solution
// steepens; integration stops where |phi'| exceeds kDirectrixSlopeCap (the
// solution has a vertical tangent at a finite v). phi and phi' come from a
// quintic Hermite interpolant of (phi, phi', phi''); the higher derivatives
// are taken from the equation so kappa = b holds to rounding.
DirectrixSolution constant_kappa_directrix(double b, Interval v_range, double step = 1e-3);

}  // namespace meridian
