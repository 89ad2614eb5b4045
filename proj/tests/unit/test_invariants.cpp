#include <cmath>
#include <numbers>

#include "doctest.h"
#include "meridian/invariants.hpp"
#include "support/surfaces.hpp"

using namespace meridian;
using namespace meridian::testing;

TEST_CASE("gauss_curvature examples") {
  const Interval v{0.0, 1.0};
  CHECK(gauss_curvature(make_surface("cos(u)", "1", {0.1, 1.4}, v), 0.3) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gauss_curvature(make_surface("cosh(u)", "1", {0.1, 1.4}, v), 0.5) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(gauss_curvature(parallel_a_reference(), 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(gauss_curvature(make_surface("u+1", "1", {0.0, 1.0}, v), 0.5) == 0.0);
}

TEST_CASE("mean_curvature examples") {
  const MeanCurvature h = mean_curvature(parallel_a_reference(), 0.0, 0.0);
  CHECK(h.H_n1 == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(h.H_n2) <= 1e-15);
  CHECK(h.norm == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h.epsilon == 1);

  const MeanCurvature c =
      mean_curvature(make_surface("cos(u)", "1", {0.1, 1.4}, {0.0, 1.0}), std::numbers::pi / 4, 0.0);
  CHECK(c.norm == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(c.epsilon == 1);

  const MeridianSurface sec = make_surface("sqrt(u+1)", "sec(v)", {0.0, 3.0}, {-1.0, 1.0});
  CHECK_THROWS_AS(mean_curvature(sec, 1.0, 0.2), FlatCaseError);
}

TEST_CASE("invariant_k examples") {
  CHECK(invariant_k(parallel_a_reference(), 0.0, 0.0) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(invariant_k(make_surface("u+1", "1", {0.0, 1.0}, {0.0, 1.0}), 0.5, 0.5) == 0.0);
}

TEST_CASE("eight_invariants at the reference point") {
  const InvariantRecord r = eight_invariants(parallel_a_reference(), 0.0, 0.0);
  const double expected[8] = {0.35355339, -0.35355339, 0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
  const double got[8] = {r.gamma1, r.gamma2, r.nu1, r.nu2, r.lambda, r.mu, r.beta1, r.beta2};
  for (int i = 0; i < 8; ++i) CHECK(std::abs(got[i] - expected[i]) <= 1e-8);
  CHECK(r.K == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r.epsilon * (r.nu1 * r.nu2 - r.lambda * r.lambda + r.mu * r.mu) ==
        doctest::Approx(r.K).epsilon(1e-14));
  CHECK(r.varkappa == 0.0);
}

TEST_CASE("normal connection is flat") {
  const MeridianSurface s = make_surface("cos(u)", "exp(v)", {0.1, 1.4}, {-1.0, 1.0});
  CHECK(normal_connection_curvature(s, std::numbers::pi / 4, 0.1) == 0.0);
  CHECK(normal_connection_curvature(parallel_a_reference(), 0.0, 0.0) == 0.0);
}

TEST_CASE("identity suite on random surfaces") {
  SurfaceSampler sampler(21);
  int eps_minus = 0;
  for (int i = 0; i < 20; ++i) {
    const RandomSurface rs = sampler.surface();
    for (int j = 0; j < 5; ++j) {
      const SamplePoint p = sampler.general_point(rs.surface).value();
      const InvariantRecord r = eight_invariants(rs.surface, p.u, p.v);
      const PointScalars ps = point_scalars(rs.surface, p.u, p.v);
      eps_minus += r.epsilon < 0;
      CHECK(r.gamma1 + r.gamma2 == 0.0);
      CHECK(r.nu1 - r.nu2 == 0.0);
      CHECK(r.varkappa == 0.0);
      const double kscale = std::max(1.0, std::abs(r.k));
      CHECK(std::abs(r.k + 4 * r.nu1 * r.nu2 * r.mu * r.mu) <= 1e-9 * kscale);
      CHECK(std::abs(r.k - invariant_k(rs.surface, p.u, p.v)) <= 1e-9 * kscale);
      const double Kscale = std::max({1.0, r.nu1 * r.nu2, r.lambda * r.lambda, r.mu * r.mu});
      CHECK(std::abs(r.K - r.epsilon * (r.nu1 * r.nu2 - r.lambda * r.lambda + r.mu * r.mu)) <=
            1e-9 * Kscale);
      const double h2 = r.epsilon * ps.discriminant / (4 * ps.f * ps.f * ps.fp * ps.fp);
      CHECK(std::abs(r.H_norm * r.H_norm - h2) <= 1e-12 * std::max(1.0, h2));
      CHECK(r.H_norm > 0.0);
      const double mu_literal = mu_without_epsilon_factor(rs.surface, p.u, p.v);
      CHECK(mu_literal == doctest::Approx(r.epsilon * r.mu).epsilon(1e-14));
    }
  }
  CHECK(eps_minus > 0);
}

TEST_CASE("invariants reject degenerate points") {
  const MeridianSurface sec = make_surface("sqrt(u+1)", "sec(v)", {0.0, 3.0}, {-1.0, 1.0});
  CHECK_THROWS_AS(eight_invariants(sec, 1.0, 0.2), FlatCaseError);
  const MeridianSurface lin = make_surface("u+1", "1", {0.0, 1.0}, {0.0, 1.0});
  CHECK_THROWS_AS(eight_invariants(lin, 0.5, 0.5), FlatCaseError);
  CHECK(invariant_k(lin, 0.5, 0.5) == 0.0);
}

TEST_CASE("marginally trapped points are rejected") {
  // f = u^2 + 1, phi = 0.2: kappa = -5 and 10u = 6u^2 + 2 has a root in
  // (0.2, 0.3); bisect <H, H> to it.
  const MeridianSurface s = make_surface("u^2+1", "0.2", {0.1, 0.4}, {0.0, 1.0});
  double lo = 0.2, hi = 0.3;
  const auto D = [&](double u) { return point_scalars(s, u, 0.5).discriminant; };
  REQUIRE(D(lo) * D(hi) < 0.0);
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (D(mid) * D(lo) > 0.0 ? lo : hi) = mid;
  }
  const double u = 0.5 * (lo + hi);
  CHECK(u == doctest::Approx((10.0 - std::sqrt(52.0)) / 12.0).epsilon(1e-12));
  CHECK(classify_point(s, u, 0.5) == PointCase::MarginallyTrapped);
  CHECK_THROWS_AS(eight_invariants(s, u, 0.5), MarginallyTrappedError);
  CHECK_THROWS_AS(mean_curvature(s, u, 0.5), MarginallyTrappedError);
  CHECK(classify_point(s, u + 1e-3, 0.5) == PointCase::General);
}
