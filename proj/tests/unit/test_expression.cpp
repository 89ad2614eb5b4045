#include <cmath>
#include <numbers>

#include "doctest.h"
#include "meridian/expression.hpp"

using namespace meridian;

namespace {
ScalarJet at(const char* text, double t) { return Expression::parse(text)->jet(t); }
}  // namespace

TEST_CASE("jet_eval examples") {
  const ScalarJet c = at("cos(t)", 0.0);
  CHECK(c.value == 1.0);
  CHECK(c.d1 == doctest::Approx(0.0));
  CHECK(c.d2 == -1.0);
  CHECK(c.d3 == doctest::Approx(0.0));

  const ScalarJet r = at("sqrt(t+1)", 0.0);
  CHECK(r.value == 1.0);
  CHECK(r.d1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.d2 == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(r.d3 == doctest::Approx(0.375).epsilon(1e-15));

  const ScalarJet q = at("t^2", 3.0);
  CHECK(q.value == 9.0);
  CHECK(q.d1 == 6.0);
  CHECK(q.d2 == 2.0);
  CHECK(q.d3 == 0.0);
}

TEST_CASE("precedence and associativity") {
  CHECK(at("-u^2", 3.0).value == -9.0);
  CHECK(at("2^3^2", 0.0).value == 512.0);
  CHECK(at("2^-1", 0.0).value == 0.5);
  CHECK(at("1+2*3-4/2", 0.0).value == 5.0);
  CHECK(at("(1+2)*3", 0.0).value == 9.0);
  CHECK(at("pi", 0.0).value == std::numbers::pi);
  CHECK(at(" 2 * x ", 1.5).value == 3.0);
  CHECK(at("1.5e1", 0.0).value == 15.0);
}

TEST_CASE("every catalogue function parses") {
  for (const char* f : {"sin", "cos", "tan", "sec", "sinh", "cosh", "exp", "log", "sqrt"}) {
    const std::string text = std::string(f) + "(v)";
    CHECK(std::isfinite(at(text.c_str(), 0.5).value));
  }
}

TEST_CASE("constant detection") {
  CHECK(Expression::parse("2*pi")->is_constant());
  CHECK_FALSE(Expression::parse("2*v")->is_constant());
}

TEST_CASE("parse errors name the token and offset") {
  try {
    Expression::parse("1+foo(u)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
  try {
    Expression::parse("u*)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(std::string(e.what()).find("')'") != std::string::npos);
  }
  CHECK_THROWS_AS(Expression::parse(""), ParseError);
  CHECK_THROWS_AS(Expression::parse("(u+1"), ParseError);
  CHECK_THROWS_AS(Expression::parse("u+v"), ParseError);
  CHECK_THROWS_AS(Expression::parse("sin u"), ParseError);
  CHECK_THROWS_AS(Expression::parse("2u"), ParseError);
}

TEST_CASE("domain errors carry the evaluation point") {
  const auto e = Expression::parse("log(u-1)");
  try {
    e->jet(0.5);
    FAIL("expected a domain error");
  } catch (const DomainError& err) {
    CHECK(err.at() == 0.5);
  }
}

TEST_CASE("composition") {
  const auto outer = Expression::parse("sin(t)");
  const ScalarJet inner = ScalarJet::variable(0.3) * 2.0;
  const ScalarJet j = compose(*outer, inner);
  CHECK(j.value == doctest::Approx(std::sin(0.6)).epsilon(1e-15));
  CHECK(j.d1 == doctest::Approx(2 * std::cos(0.6)).epsilon(1e-14));
  CHECK(j.d2 == doctest::Approx(-4 * std::sin(0.6)).epsilon(1e-14));
  CHECK(j.d3 == doctest::Approx(-8 * std::cos(0.6)).epsilon(1e-14));
}
