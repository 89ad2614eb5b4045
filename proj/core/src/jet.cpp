#include "meridian/jet.hpp"

#include <cmath>

#include "meridian/errors.hpp"

namespace meridian {

ScalarJet operator-(const ScalarJet& a) { return {-a.value, -a.d1, -a.d2, -a.d3}; }

ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
  return {a.value * b.value,
          a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2,
          a.d3 * b.value + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.value * b.d3};
}

ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) { return a * reciprocal(b); }

ScalarJet operator+(const ScalarJet& a, double b) { return {a.value + b, a.d1, a.d2, a.d3}; }
ScalarJet operator+(double a, const ScalarJet& b) { return b + a; }
ScalarJet operator-(const ScalarJet& a, double b) { return {a.value - b, a.d1, a.d2, a.d3}; }
ScalarJet operator-(double a, const ScalarJet& b) { return {a - b.value, -b.d1, -b.d2, -b.d3}; }
ScalarJet operator*(const ScalarJet& a, double b) {
  return {a.value * b, a.d1 * b, a.d2 * b, a.d3 * b};
}
ScalarJet operator*(double a, const ScalarJet& b) { return b * a; }
ScalarJet operator/(const ScalarJet& a, double b) {
  if (b == 0.0) throw DomainError("division by zero", a.value);
  return a * (1.0 / b);
}
ScalarJet operator/(double a, const ScalarJet& b) { return a * reciprocal(b); }

ScalarJet compose(const ScalarJet& u, double g0, double g1, double g2, double g3) {
  const double u1 = u.d1;
  return {g0, g1 * u1, g2 * u1 * u1 + g1 * u.d2,
          g3 * u1 * u1 * u1 + 3.0 * g2 * u1 * u.d2 + g1 * u.d3};
}

ScalarJet sin(const ScalarJet& x) {
  const double s = std::sin(x.value), c = std::cos(x.value);
  return compose(x, s, c, -s, -c);
}

ScalarJet cos(const ScalarJet& x) {
  const double s = std::sin(x.value), c = std::cos(x.value);
  return compose(x, c, -s, -c, s);
}

ScalarJet tan(const ScalarJet& x) {
  if (std::cos(x.value) == 0.0) throw DomainError("tan at a pole", x.value);
  const double t = std::tan(x.value);
  const double s2 = 1.0 + t * t;
  return compose(x, t, s2, 2.0 * t * s2, 2.0 * s2 * (s2 + 2.0 * t * t));
}

ScalarJet sec(const ScalarJet& x) {
  const double c = std::cos(x.value);
  if (c == 0.0) throw DomainError("sec at a pole", x.value);
  const double s = 1.0 / c;
  const double t = std::tan(x.value);
  return compose(x, s, s * t, s * (t * t + s * s), s * t * (t * t + 5.0 * s * s));
}

ScalarJet sinh(const ScalarJet& x) {
  const double s = std::sinh(x.value), c = std::cosh(x.value);
  return compose(x, s, c, s, c);
}

ScalarJet cosh(const ScalarJet& x) {
  const double s = std::sinh(x.value), c = std::cosh(x.value);
  return compose(x, c, s, c, s);
}

ScalarJet exp(const ScalarJet& x) {
  const double e = std::exp(x.value);
  return compose(x, e, e, e, e);
}

ScalarJet log(const ScalarJet& x) {
  const double v = x.value;
  if (!(v > 0.0)) throw DomainError("log of a non-positive argument", v);
  const double r = 1.0 / v;
  return compose(x, std::log(v), r, -r * r, 2.0 * r * r * r);
}

ScalarJet sqrt(const ScalarJet& x) {
  const double v = x.value;
  if (!(v > 0.0)) throw DomainError("sqrt of a non-positive argument", v);
  const double s = std::sqrt(v);
  return compose(x, s, 0.5 / s, -0.25 / (v * s), 0.375 / (v * v * s));
}

ScalarJet asin(const ScalarJet& x) {
  const double v = x.value;
  if (!(std::abs(v) < 1.0)) throw DomainError("asin outside (-1, 1)", v);
  const double w = 1.0 - v * v;
  const double r = 1.0 / std::sqrt(w);
  return compose(x, std::asin(v), r, v * r / w, (1.0 + 2.0 * v * v) * r / (w * w));
}

ScalarJet reciprocal(const ScalarJet& x) {
  const double v = x.value;
  if (v == 0.0) throw DomainError("division by zero", v);
  const double r = 1.0 / v;
  const double r2 = r * r;
  return compose(x, r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2);
}

namespace {

ScalarJet integer_power(ScalarJet base, long long n) {
  ScalarJet acc = ScalarJet::constant(1.0);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

}  // namespace

ScalarJet pow(const ScalarJet& x, double p) {
  if (p == std::trunc(p) && std::abs(p) <= 64.0) {
    const auto n = static_cast<long long>(p);
    if (n >= 0) return integer_power(x, n);
    return reciprocal(integer_power(x, -n));
  }
  const double v = x.value;
  if (!(v > 0.0)) throw DomainError("non-integer power of a non-positive argument", v);
  const double g0 = std::pow(v, p);
  const double g1 = p * g0 / v;
  const double g2 = (p - 1.0) * g1 / v;
  const double g3 = (p - 2.0) * g2 / v;
  return compose(x, g0, g1, g2, g3);
}

ScalarJet pow(const ScalarJet& x, const ScalarJet& p) {
  if (p.d1 == 0.0 && p.d2 == 0.0 && p.d3 == 0.0) return pow(x, p.value);
  return exp(p * log(x));
}

}  // namespace meridian
