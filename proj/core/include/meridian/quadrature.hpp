#pragma once

#include <cstddef>
#include <functional>

namespace meridian {

struct QuadratureResult {
  double value = 0.0;
  std::size_t intervals = 0;  // accepted subintervals
};

inline constexpr double kQuadratureTolerance = 1e-10;
inline constexpr std::size_t kQuadratureMaxIntervals = std::size_t{1} << 20;

// Adaptive Simpson rule with Richardson correction on [a, b] (b < a gives
// the signed integral). Throws QuadratureError when more than
// `max_intervals` subintervals would be needed.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tolerance = kQuadratureTolerance,
                                  std::size_t max_intervals = kQuadratureMaxIntervals);

}  // namespace meridian
