#include <cmath>
#include <numbers>

#include "doctest.h"
#include "meridian/profile.hpp"
#include "support/surfaces.hpp"

using namespace meridian;

namespace {
ProfileCurve profile(const char* f, Interval d, double g0 = 0.0) {
  return ProfileCurve(Expression::parse(f), d, g0);
}
Directrix directrix(const char* phi, Interval d = {-1.0, 1.0}) {
  return Directrix(Expression::parse(phi), d);
}
}  // namespace

TEST_CASE("validate_profile examples") {
  CHECK(validate_profile(profile("sqrt(u+1)", {0.0, 3.0}), 64).valid);
  CHECK(validate_profile(profile("u+1", {0.0, 1.0}), 64).valid);

  const ValidationReport r = validate_profile(profile("cos(u)", {0.0, std::numbers::pi / 2}), 64);
  CHECK_FALSE(r.valid);
  CHECK(r.predicate == "f > 0");
  CHECK(r.at == doctest::Approx(std::numbers::pi / 2));

  const ValidationReport flat = validate_profile(profile("(u-0.5)^2+1", {0.0, 1.0}), 65);
  CHECK_FALSE(flat.valid);
  CHECK(flat.predicate == "f' != 0");
  CHECK(flat.at == doctest::Approx(0.5));

  const ValidationReport neg = validate_profile(profile("1-2*u", {0.0, 1.0}), 11);
  CHECK_FALSE(neg.valid);
  CHECK(neg.at == doctest::Approx(0.5));
}

TEST_CASE("unnormalized profiles check -f'g' > 0") {
  const ProfileCurve good = ProfileCurve::unnormalized(Expression::parse("u+1"),
                                                       Expression::parse("-u"), {0.0, 1.0});
  CHECK(validate_profile(good, 16).valid);
  const ProfileCurve bad = ProfileCurve::unnormalized(Expression::parse("u+1"),
                                                      Expression::parse("u"), {0.0, 1.0});
  const ValidationReport r = validate_profile(bad, 16);
  CHECK_FALSE(r.valid);
  CHECK(r.predicate == "-f'g' > 0");
}

TEST_CASE("kappa_m examples") {
  CHECK(kappa_m(profile("sqrt(u+1)", {0.0, 3.0}), 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(kappa_m(profile("u+1", {0.0, 1.0}), 0.3) == 0.0);
  CHECK(kappa_m(profile("cos(u)", {0.1, 1.4}), std::numbers::pi / 4) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(kappa_m(profile("u+1", {0.0, 1.0}), 2.0), DomainError);
}

TEST_CASE("general kappa_m reduces to f''/f' under the normalization") {
  // g = -(2/3)(u+1)^{3/2} pairs with f = sqrt(u+1).
  const ProfileCurve p = ProfileCurve::unnormalized(
      Expression::parse("sqrt(u+1)"), Expression::parse("-(2/3)*(u+1)^1.5"), {0.0, 3.0});
  for (double u : {0.0, 0.7, 2.9})
    CHECK(kappa_m(p, u) == doctest::Approx(-0.5 / (u + 1.0)).epsilon(1e-13));
}

TEST_CASE("kappa examples") {
  CHECK(kappa(directrix("1"), 0.4) == -1.0);
  CHECK(kappa(directrix("2"), 0.4) == -0.5);
  CHECK(kappa(directrix("exp(v)"), 0.0) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(kappa(directrix("sec(v)"), 0.2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(kappa(directrix("v^2"), 0.0), DegeneracyError);
}

TEST_CASE("kappa of a constant is -1/p") {
  for (double p : {0.25, 0.5, 1.0, 3.0, 10.0}) {
    const Directrix d(Expression::parse(format_real(p)), {0.0, 1.0});
    CHECK(kappa(d, 0.5) == doctest::Approx(-1.0 / p).epsilon(1e-15));
  }
}

TEST_CASE("kappa is invariant under translation") {
  const Directrix d = directrix("2+0.3*cos(v)", {-3.0, 3.0});
  const Directrix shifted = directrix("2+0.3*cos(v+0.4)", {-3.0, 3.0});
  for (double v : {-1.0, 0.0, 0.8})
    CHECK(kappa(shifted, v) == doctest::Approx(kappa(d, v + 0.4)).epsilon(1e-13));
}

TEST_CASE("kappa_jet derivative matches finite differences") {
  const Directrix d = directrix("2+0.3*sin(2*v)", {-1.0, 1.0});
  const double h = 1e-5;
  for (double v : {-0.5, 0.1, 0.6}) {
    const double fd = (kappa(d, v + h) - kappa(d, v - h)) / (2 * h);
    CHECK(kappa_jet(d, v).dv == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("g_from_f") {
  const ProfileCurve p = profile("sqrt(u+1)", {0.0, 3.0}, -2.0 / 3.0);
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double u = 3.0 * i / 60;
    worst = std::max(worst, std::abs(g_from_f(p, u) + 2.0 / 3.0 * std::pow(u + 1.0, 1.5)));
  }
  CHECK(worst <= 1e-9);

  const ProfileCurve lin = profile("u+1", {0.0, 1.0});
  for (double u : {0.0, 0.25, 1.0}) CHECK(g_from_f(lin, u) == doctest::Approx(-u / 2).epsilon(1e-14));

  CHECK_THROWS_AS(g_from_f(profile("(u-0.5)^2+1", {0.0, 1.0}), 0.9), ProfileInvariantError);
}

TEST_CASE("-2 f' g' = 1 along the quadrature") {
  const ProfileCurve p = profile("2*exp(0.7*u)", {0.0, 1.0});
  const double h = 1e-4;
  for (double u : {0.1, 0.5, 0.9}) {
    const double gp = (g_from_f(p, u + h) - g_from_f(p, u - h)) / (2 * h);
    CHECK(-2.0 * p.f_jet(u).d1 * gp == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(-2.0 * p.f_jet(u).d1 * p.g_prime(u) == doctest::Approx(1.0).epsilon(1e-15));
  }
}
