#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace meridian {

// A vector of the Minkowski space R^4_1 in coordinates w.r.t. the
// orthonormal basis e1..e4, where <e4, e4> = -1.
struct Vec4 {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  constexpr Vec4() = default;
  constexpr Vec4(double c1, double c2, double c3, double c4) : c{c1, c2, c3, c4} {}

  constexpr double operator[](std::size_t i) const { return c[i]; }
  constexpr double& operator[](std::size_t i) { return c[i]; }

  constexpr Vec4& operator+=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Vec4& operator-=(const Vec4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Vec4& operator*=(double s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  bool finite() const {
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]) &&
           std::isfinite(c[3]);
  }

  friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend constexpr Vec4 operator-(Vec4 a) { return a *= -1.0; }
  friend constexpr Vec4 operator*(double s, Vec4 a) { return a *= s; }
  friend constexpr Vec4 operator*(Vec4 a, double s) { return a *= s; }
  friend constexpr Vec4 operator/(Vec4 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vec4&, const Vec4&) = default;
};

namespace basis {
inline constexpr Vec4 e1{1.0, 0.0, 0.0, 0.0};
inline constexpr Vec4 e2{0.0, 1.0, 0.0, 0.0};
inline constexpr Vec4 e3{0.0, 0.0, 1.0, 0.0};
inline constexpr Vec4 e4{0.0, 0.0, 0.0, 1.0};
}  // namespace basis

// <a, b> = a1 b1 + a2 b2 + a3 b3 - a4 b4
constexpr double minkowski_dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

// The null pair xi1 = (e3 + e4)/sqrt2, xi2 = (-e3 + e4)/sqrt2 with
// <xi1, xi2> = -1.
struct LightlikePair {
  Vec4 xi1;
  Vec4 xi2;
};

LightlikePair lightlike_basis();

// Coordinates (a1, a2, b1, b2) w.r.t. the pseudo-orthonormal basis
// {e1, e2, xi1, xi2}, converted to e-coordinates.
Vec4 from_null_coordinates(double a1, double a2, double b1, double b2);

// Inverse of from_null_coordinates.
std::array<double, 4> to_null_coordinates(const Vec4& v);

// 4x4 Gram matrix <v_i, v_j>.
std::array<std::array<double, 4>, 4> gram(const std::array<Vec4, 4>& vs);

}  // namespace meridian
