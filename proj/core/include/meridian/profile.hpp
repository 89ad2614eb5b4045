#pragma once

#include <cstddef>
#include <string>

#include "meridian/expression.hpp"

namespace meridian {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double slack() const;
  bool contains(double t) const { return t >= lo - slack() && t <= hi + slack(); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Thresholds used when sampling a profile.
inline constexpr double kPositivityFloor = 1e-12;  // f >= floor counts as f > 0
inline constexpr double kMinSlope = 1e-9;          // |f'| >= this counts as f' != 0
inline constexpr double kDegenerateSpeed2 = 1e-12;  // phi_dot^2 + phi^2 below this is degenerate

// Meridian profile (f, g). In the normalized form (the only form accepted
// by MeridianSurface) g is never stored: g' = -1/(2 f') by construction and
// g(lo) = g_origin, so -2 f' g' = 1 identically. The unnormalized form keeps
// an explicit g and exists for validation only.
class ProfileCurve {
 public:
  ProfileCurve(FunctionRef f, Interval domain_u, double g_origin = 0.0);

  static ProfileCurve unnormalized(FunctionRef f, FunctionRef g, Interval domain_u);

  bool normalized() const { return g_ == nullptr; }
  const JetFunction& f() const { return *f_; }
  const FunctionRef& f_ref() const { return f_; }
  const FunctionRef& g_ref() const { return g_; }
  Interval domain() const { return domain_; }
  double g_origin() const { return g_origin_; }

  // Throws DomainError when u lies outside the domain.
  ScalarJet f_jet(double u) const;
  ScalarJet g_jet(double u) const;  // unnormalized only
  double g_prime(double u) const;

 private:
  FunctionRef f_;
  FunctionRef g_;
  Interval domain_;
  double g_origin_ = 0.0;
};

// phi(v) of the directrix w1 = phi(v), w2 = v.
class Directrix {
 public:
  Directrix(FunctionRef phi, Interval domain_v);

  const JetFunction& phi() const { return *phi_; }
  const FunctionRef& phi_ref() const { return phi_; }
  Interval domain() const { return domain_; }

  ScalarJet phi_jet(double v) const;

 private:
  FunctionRef phi_;
  Interval domain_;
};

struct ValidationReport {
  bool valid = true;
  std::string predicate;  // failed predicate, empty when valid
  double at = 0.0;        // first violating u
  std::string message;
};

// Samples `samples` >= 2 uniformly spaced points of the closed domain.
// f > 0 is checked on every sample; f' != 0 (and -f'g' > 0 for
// unnormalized profiles) on the interior samples only, since a slope that
// vanishes exactly at an endpoint is a limit point, not a violation.
ValidationReport validate_profile(const ProfileCurve& p, std::size_t samples);

// Meridian curvature f''/f' (general form (f'g'' - g'f'')/(-2f'g')^{3/2}
// for unnormalized profiles).
double kappa_m(const ProfileCurve& p, double u);

// Directrix curvature (phi phi'' - 2 phi'^2 - phi^2)/(phi'^2 + phi^2)^{3/2}.
// Throws DegeneracyError where phi'^2 + phi^2 vanishes.
double kappa(const Directrix& d, double v);

// kappa(v) together with d kappa / dv (needs the third derivative of phi).
struct CurvatureJet {
  double value = 0.0;
  double dv = 0.0;
};
CurvatureJet kappa_jet(const Directrix& d, double v);

// g(u) = g_origin + integral from lo to u of -1/(2 f'(t)) dt by adaptive
// Simpson (tolerance 1e-10). Throws ProfileInvariantError if f' changes
// sign on the way.
double g_from_f(const ProfileCurve& p, double u);

}  // namespace meridian
