#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "meridian/families.hpp"
#include "meridian/invariants.hpp"
#include "meridian/ode.hpp"
#include "support/surfaces.hpp"

using namespace meridian;

namespace {

Directrix constant_phi(double p, Interval v = {0.0, 2.0 * std::numbers::pi}) {
  return Directrix(Expression::parse(format_real(p)), v);
}

// Largest |value - target| of the family's pinned invariant over an n x n
// grid of the realized range.
double property_error(const GeneratedSurface& g, int n = 7) {
  const FamilyProperty prop = family_property(g.spec);
  const Interval u = g.realized, v = g.surface.domain_v();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double uu = u.lo + u.length() * (i + 0.5) / n;
      const double vv = v.lo + v.length() * (j + 0.5) / n;
      worst = std::max(worst, std::abs(family_property_value(g.spec, g.surface, uu, vv) - prop.target));
    }
  return worst;
}

double residual(const GeneratedSurface& g, int n = 50) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = g.realized.lo + g.realized.length() * (i + 0.5) / n;
    worst = std::max(worst, defining_residual(g.spec, g.surface.profile(), u));
  }
  return worst;
}

}  // namespace

TEST_CASE("y_of_t examples") {
  CHECK(y_of_t(ConstantMean{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus}, 1.0) ==
        doctest::Approx(1.91322295).epsilon(1e-8));
  CHECK(y_of_t(ConstantK{1.0, 2.0, 0.0, Sign::Plus}, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(y_of_t(Chen{1.0, 1.0, Sign::Plus}, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double t : {0.1, 1.0, 7.0})
    CHECK(y_of_t(ParallelB{1.0, 0.0, -1.0}, t) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("y domain errors") {
  const ConstantMean cm{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus};
  CHECK_THROWS_AS(y_of_t(cm, 0.0), DomainError);
  CHECK_THROWS_AS(y_of_t(cm, 2.0), DomainError);  // cap is |b|/(2|a|) = 2
  CHECK_NOTHROW(y_of_t(cm, 2.0 - 2e-9));
  CHECK_THROWS_AS(y_of_t(ParallelB{1.0, 1.0, 1.0}, -1.0), DomainError);
  CHECK_THROWS_AS(y_of_t(ConstantGauss{1.0, 1.0, 0.0}, 1.0), SpecError);
}

TEST_CASE("y solves the first-order form of each relation") {
  // t (t y)' = ... checked with jets: for y = f'(f), ff'' + f'^2 = y (t y)'.
  const auto P = [](const FamilySpec& s, double t) {
    const ScalarJet y = y_jet(s, ScalarJet::variable(t));
    return y.value * (y.value + t * y.d1);
  };
  const ConstantMean plus{0.5, 2.0, 0.3, Sign::Plus, Sign::Minus};
  const ConstantMean minus{0.5, 1.0, 0.0, Sign::Minus, Sign::Plus};
  for (double t : {0.3, 0.9, 1.7}) {
    const double y = y_of_t(plus, t), p = P(plus, t);
    CHECK(p * p + 4 * 0.25 * t * t * y * y == doctest::Approx(4.0 * y * y).epsilon(1e-12));
    const double ym = y_of_t(minus, t), pm = P(minus, t);
    CHECK(pm * pm - 4 * 0.25 * t * t * ym * ym == doctest::Approx(ym * ym).epsilon(1e-12));
    CHECK(P(ParallelB{2.0, -0.5, 1.0}, t) == doctest::Approx(2.0 * y_of_t(ParallelB{2.0, -0.5, 1.0}, t)));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(validate(ConstantGauss{0.0, 1.0, 0.0}), "K must be nonzero", SpecError);
  CHECK_THROWS_AS(validate(Chen{1.0, 0.0, Sign::Plus}), SpecError);
  CHECK_THROWS_AS(validate(ConstantK{1.0, 0.0, 0.0, Sign::Plus}), SpecError);
  CHECK_THROWS_AS(validate(ConstantMean{0.0, 1.0, 0.0, Sign::Plus, Sign::Plus}), SpecError);
  CHECK_THROWS_AS(validate(ParallelA{0.0, 1.0, 0.0, Sign::Plus}), SpecError);
  CHECK_THROWS_AS(validate(ParallelA{1.0, 1.0, 0.0, Sign::Minus}), SpecError);
  CHECK_THROWS_AS(validate(ParallelB{1.0, 0.0, 0.0}), SpecError);
}

TEST_CASE("canonical text") {
  CHECK(to_text(ConstantMean{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus}) ==
        "constant-mean a=0.5 b=2 C=0 epsilon=+1 branch=+");
  CHECK(std::get<ConstantGauss>(parse_family_spec("constant-gauss K=1 alpha=1 beta=0")) ==
        ConstantGauss{1.0, 1.0, 0.0});
  CHECK(std::get<ParallelA>(parse_family_spec("parallel-a sign=+ a=0 d=1 c=1")) ==
        ParallelA{1.0, 1.0, 0.0, Sign::Plus});
  CHECK_THROWS_WITH_AS(parse_family_spec("constant-gauss K=0 alpha=1 beta=0"), "K must be nonzero",
                       SpecError);
  CHECK_THROWS_AS(parse_family_spec("constant-gauss K=1 alpha=1"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("constant-gauss K=1 alpha=1 beta=0 gamma=2"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("constant-gauss K=x alpha=1 beta=0"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("chen b=1 c=1 exponent=2"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("torus r=1"), SpecError);
  CHECK_THROWS_AS(parse_family_spec(""), SpecError);
}

TEST_CASE("canonical text round trip") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  const auto nz = [&] {
    const double x = d(rng);
    return x == 0.0 ? 1.0 : x;
  };
  const auto sg = [&] { return d(rng) < 0 ? Sign::Minus : Sign::Plus; };
  for (int i = 0; i < 200; ++i) {
    const FamilySpec specs[] = {
        ConstantGauss{nz(), d(rng), d(rng)}, ConstantMean{nz(), nz(), d(rng), sg(), sg()},
        ConstantK{nz(), nz(), d(rng), sg()}, Chen{nz(), nz(), sg()},
        ParallelA{nz(), d(rng), d(rng), Sign::Plus}, ParallelB{nz(), d(rng), nz()}};
    for (const FamilySpec& s : specs) CHECK(parse_family_spec(to_text(s)) == s);
  }
}

TEST_CASE("generate: closed forms") {
  const GeneratedSurface g = generate(ConstantGauss{1.0, 1.0, 0.0}, 1.0, {0.1, 1.4}, constant_phi(1.0));
  CHECK(g.source == ProfileSource::ClosedForm);
  CHECK_FALSE(g.truncated);
  for (double u : {0.1, 0.7, 1.4}) {
    CHECK(g.surface.profile().f()(u) == doctest::Approx(std::cos(u)).epsilon(1e-15));
    CHECK(std::abs(gauss_curvature(g.surface, u) - 1.0) <= 1e-9);
  }

  const GeneratedSurface a = generate(ParallelA{1.0, 1.0, 0.0, Sign::Plus}, 1.0, {0.0, 3.0}, constant_phi(1.0));
  CHECK(a.surface.profile().f()(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(g_from_f(a.surface.profile(), 3.0) + 2.0 / 3.0 * 8.0) <= 1e-9);
  CHECK(property_error(a) <= 1e-9);
}

TEST_CASE("generate trims closed forms to the valid range") {
  // cos u reaches 0 at pi/2.
  const GeneratedSurface g = generate(ConstantGauss{1.0, 1.0, 0.0}, 1.0, {0.1, 2.0}, constant_phi(1.0));
  CHECK(g.truncated);
  CHECK(g.realized.hi <= std::numbers::pi / 2);
  CHECK(g.realized.hi >= std::numbers::pi / 2 - 1e-9);
  CHECK(validate_profile(g.surface.profile(), 257).valid);
  // f'(0) = 0: nothing valid at the left end.
  CHECK_THROWS_AS(generate(ConstantGauss{1.0, 1.0, 0.0}, 1.0, {0.0, 1.0}, constant_phi(1.0)),
                  ProfileInvariantError);
}

TEST_CASE("generate: ODE families") {
  const Directrix minus_one = constant_phi(1.0);

  const GeneratedSurface pb = generate(ParallelB{1.0, 1.0, -2.0}, 1.0, {0.0, 1.0}, constant_phi(0.5));
  CHECK(pb.source == ProfileSource::OdeIntegrated);
  for (int i = 0; i <= 20; ++i) {
    const double u = pb.realized.length() * i / 20;
    const ScalarJet f = pb.surface.profile().f_jet(u);
    CHECK(std::abs((f.value * f.d2 + f.d1 * f.d1) / f.d1 - 1.0) <= 1e-7);
  }
  CHECK(property_error(pb) <= 1e-6);
  CHECK(pb.error_estimate <= 1e-10);

  const DirectrixSolution one = constant_kappa_directrix(1.0, {0.0, 1.0});
  const GeneratedSurface chen = generate(Chen{1.0, 1.0, Sign::Plus}, 2.0, {0.0, 1.0}, one.directrix);
  CHECK(property_error(chen) <= 1e-7);
  CHECK(residual(chen) <= 1e-6);

  const DirectrixSolution two = constant_kappa_directrix(2.0, {0.0, 1.0});
  const GeneratedSurface cm =
      generate(ConstantMean{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus}, 1.0, {0.0, 1.0}, two.directrix);
  CHECK(property_error(cm) <= 1e-6);
  CHECK(residual(cm) <= 1e-6);

  const GeneratedSurface ck =
      generate(ConstantK{1.0, -1.0, 0.5, Sign::Minus}, 0.5, {0.0, 1.0}, minus_one);
  CHECK(property_error(ck) <= 1e-6);
  CHECK(residual(ck) <= 1e-6);
}

TEST_CASE("generate reports truncation at the arcsin cap") {
  // y grows until t = |b|/(2|a|) = 2 is reached.
  const DirectrixSolution two = constant_kappa_directrix(2.0, {0.0, 1.0});
  const GeneratedSurface g =
      generate(ConstantMean{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus}, 1.0, {0.0, 10.0}, two.directrix);
  CHECK(g.truncated);
  CHECK(g.realized.hi < 10.0);
  CHECK(g.surface.profile().f()(g.realized.hi) <= 2.0);
  CHECK_FALSE(g.reason.empty());
}

TEST_CASE("generate rejects a directrix with the wrong curvature") {
  CHECK_THROWS_AS(generate(ParallelB{1.0, 1.0, -0.5}, 1.0, {0.0, 1.0}, constant_phi(1.0)), SpecError);
  const Directrix wobbly(Expression::parse("1+0.1*sin(v)"), {0.0, 1.0});
  CHECK_THROWS_AS(generate(Chen{-1.0, 1.0, Sign::Plus}, 1.0, {0.0, 1.0}, wobbly), SpecError);
  // Closed-form families accept any directrix.
  CHECK_NOTHROW(generate(ConstantGauss{-1.0, 1.0, 0.0}, 1.0, {0.1, 1.0}, wobbly));
}
