#pragma once

// Surface builders shared by the unit, property and acceptance tests.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "meridian/expression.hpp"
#include "meridian/format.hpp"
#include "meridian/surface.hpp"

namespace meridian::testing {

inline MeridianSurface make_surface(const std::string& f, const std::string& phi, Interval u,
                                    Interval v, double g0 = 0.0) {
  return MeridianSurface(ProfileCurve(Expression::parse(f), u, g0),
                         Directrix(Expression::parse(phi), v));
}

// f = sqrt(u + 1), g = -(2/3)(u + 1)^{3/2}, phi = 1.
inline MeridianSurface parallel_a_reference(Interval u = {0.0, 3.0},
                                            Interval v = {0.0, 6.283185307179586}) {
  return make_surface("sqrt(u+1)", "1", u, v, -2.0 / 3.0 * std::pow(u.lo + 1.0, 1.5));
}

struct RandomSurface {
  std::string f, phi;
  MeridianSurface surface;
};

struct SamplePoint {
  double u = 0.0, v = 0.0;
};

// Distance from the marginally trapped locus D = (kappa f')^2 - (ff'' + f'^2)^2
// = 0, required of sampled points. The frame {b, l} scales like
// 1/sqrt(|D|) and beta1, beta2 like 1/||H||^2, so the truncation error of a
// finite-difference check grows without bound as D -> 0.
struct Conditioning {
  double discriminant = 1e-2;  // |D| > discriminant * max((kappa f')^2, (ff'' + f'^2)^2)
  double h_norm = 0.0;         // ||H|| > h_norm
};

// Used by the oracle comparisons.
inline constexpr Conditioning kOracleConditioning{0.25, 0.15};

// Random profile/directrix pairs drawn from templates that are valid
// (f > 0, f' != 0, kappa_m != 0) on u in [0.2, 1.2], v in [0.3, 2.8].
// Directrix templates stay at unit frequency: beta1, beta2 involve the
// fifth derivative of phi through the oracle's truncation error, which
// grows like frequency^5 (see the convergence test in test_oracle).
class SurfaceSampler {
 public:
  explicit SurfaceSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double signed_uniform(double lo, double hi) {
    return (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(lo, hi);
  }

  RandomSurface surface() {
    const auto r = [](double x) { return format_real(x); };
    const auto p = [&](double x) { return x < 0.0 ? "(" + r(x) + ")" : r(x); };
    std::string f, phi;
    switch (pick(5)) {
      case 0:
        f = p(uniform(1.0, 2.0)) + "+" + p(uniform(0.8, 1.5)) + "*u+" + p(signed_uniform(0.05, 0.2)) +
            "*u^2";
        break;
      case 1:
        f = p(uniform(0.5, 2.0)) + "*exp(" + p(signed_uniform(0.3, 1.2)) + "*u)";
        break;
      case 2:
        f = p(uniform(0.5, 1.5)) + "*cosh(" + p(uniform(0.5, 1.5)) + "*u)+" + p(uniform(0.0, 1.0));
        break;
      case 3:
        f = "sqrt(" + p(uniform(0.5, 2.0)) + "*u+" + p(uniform(0.5, 2.0)) + ")";
        break;
      default:
        f = p(uniform(0.5, 2.0)) + "*log(u+" + p(uniform(1.5, 2.5)) + ")";
        break;
    }
    switch (pick(4)) {
      case 0: phi = p(uniform(0.5, 2.0)); break;
      case 1: phi = p(uniform(1.5, 2.5)) + "+" + p(uniform(0.2, 0.6)) + "*cos(v)"; break;
      case 2: phi = p(uniform(0.5, 1.5)) + "*exp(" + p(signed_uniform(0.05, 0.3)) + "*v)"; break;
      default: phi = p(uniform(1.5, 2.5)) + "+" + p(uniform(0.1, 0.4)) + "*sin(v)"; break;
    }
    return {f, phi, make_surface(f, phi, {0.2, 1.2}, {0.3, 2.8})};
  }

  // A point of `s` at least `margin` inside the domain where the frame is
  // defined (kappa, kappa_m != 0) and which satisfies `c`. Gives up after
  // `attempts` draws.
  std::optional<SamplePoint> general_point(const MeridianSurface& s, double margin = 0.01,
                                           Conditioning c = {}, int attempts = 2000) {
    for (int i = 0; i < attempts; ++i) {
      const double u = uniform(s.domain_u().lo + margin, s.domain_u().hi - margin);
      const double v = uniform(s.domain_v().lo + margin, s.domain_v().hi - margin);
      const PointScalars ps = point_scalars(s, u, v);
      const double scale = std::max(ps.q * ps.q, ps.p * ps.p);
      const double h_norm = std::sqrt(std::abs(ps.discriminant)) / (2.0 * std::abs(ps.f * ps.fp));
      if (std::abs(ps.kappa) > 1e-2 && std::abs(ps.kappa_m) > 1e-2 &&
          std::abs(ps.discriminant) > c.discriminant * scale && h_norm > c.h_norm)
        return SamplePoint{u, v};
    }
    return std::nullopt;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

}  // namespace meridian::testing
