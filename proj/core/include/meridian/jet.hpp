#pragma once

#include <limits>

namespace meridian {

// Value and first three derivatives of a scalar function of one variable
// at a point. Arithmetic propagates the truncated Taylor expansion, so the
// derivatives are exact up to rounding.
struct ScalarJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static constexpr ScalarJet constant(double c) { return {c, 0.0, 0.0, 0.0}; }
  static constexpr ScalarJet variable(double t) { return {t, 1.0, 0.0, 0.0}; }

  // Jet of the derivative. The top order is unknown and set to NaN; only
  // the first two orders of the result are meaningful.
  constexpr ScalarJet derivative() const {
    return {d1, d2, d3, std::numeric_limits<double>::quiet_NaN()};
  }
};

ScalarJet operator-(const ScalarJet& a);
ScalarJet operator+(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator*(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator/(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator+(const ScalarJet& a, double b);
ScalarJet operator+(double a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a, double b);
ScalarJet operator-(double a, const ScalarJet& b);
ScalarJet operator*(const ScalarJet& a, double b);
ScalarJet operator*(double a, const ScalarJet& b);
ScalarJet operator/(const ScalarJet& a, double b);
ScalarJet operator/(double a, const ScalarJet& b);

// Chain rule to third order: the jet of g(u) given g, g', g'', g''' at u.
ScalarJet compose(const ScalarJet& u, double g0, double g1, double g2, double g3);

// Elementary functions. Each throws DomainError (carrying the argument
// value) outside the open domain where the function is three times
// differentiable.
ScalarJet sin(const ScalarJet& x);
ScalarJet cos(const ScalarJet& x);
ScalarJet tan(const ScalarJet& x);
ScalarJet sec(const ScalarJet& x);
ScalarJet sinh(const ScalarJet& x);
ScalarJet cosh(const ScalarJet& x);
ScalarJet exp(const ScalarJet& x);
ScalarJet log(const ScalarJet& x);
ScalarJet sqrt(const ScalarJet& x);
ScalarJet asin(const ScalarJet& x);
ScalarJet reciprocal(const ScalarJet& x);
ScalarJet pow(const ScalarJet& x, double p);
ScalarJet pow(const ScalarJet& x, const ScalarJet& p);

}  // namespace meridian
