#include "meridian/minkowski.hpp"

namespace meridian {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

LightlikePair lightlike_basis() {
  return {Vec4{0.0, 0.0, kInvSqrt2, kInvSqrt2}, Vec4{0.0, 0.0, -kInvSqrt2, kInvSqrt2}};
}

Vec4 from_null_coordinates(double a1, double a2, double b1, double b2) {
  return {a1, a2, kInvSqrt2 * (b1 - b2), kInvSqrt2 * (b1 + b2)};
}

std::array<double, 4> to_null_coordinates(const Vec4& v) {
  // c3 = (b1 - b2)/sqrt2, c4 = (b1 + b2)/sqrt2
  return {v[0], v[1], kInvSqrt2 * (v[3] + v[2]), kInvSqrt2 * (v[3] - v[2])};
}

std::array<std::array<double, 4>, 4> gram(const std::array<Vec4, 4>& vs) {
  std::array<std::array<double, 4>, 4> g{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = minkowski_dot(vs[i], vs[j]);
  return g;
}

}  // namespace meridian
