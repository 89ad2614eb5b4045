#include <cmath>
#include <numbers>

#include "doctest.h"
#include "meridian/errors.hpp"
#include "meridian/quadrature.hpp"

using namespace meridian;

TEST_CASE("smooth integrands") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0).value ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
}

TEST_CASE("reversed limits give the signed integral") {
  const double fwd = adaptive_simpson([](double x) { return x * x; }, 0.0, 2.0).value;
  const double back = adaptive_simpson([](double x) { return x * x; }, 2.0, 0.0).value;
  CHECK(fwd == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK(back == doctest::Approx(-fwd).epsilon(1e-14));
  CHECK(adaptive_simpson([](double x) { return x; }, 1.0, 1.0).value == 0.0);
}

TEST_CASE("subdivision cap") {
  CHECK_THROWS_AS(
      adaptive_simpson([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-14, 64),
      QuadratureError);
}
