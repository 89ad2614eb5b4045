#include "meridian/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meridian/format.hpp"
#include "meridian/invariants.hpp"
#include "meridian/ode.hpp"

namespace meridian {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_nonzero(double x, const char* name) {
  if (!std::isfinite(x)) throw SpecError(std::string(name) + " must be finite");
  if (x == 0.0) throw SpecError(std::string(name) + " must be nonzero");
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw SpecError(std::string(name) + " must be finite");
}

// Literal for an expression string; parenthesized when negative so the
// result can be spliced anywhere.
std::string lit(double x) {
  const std::string s = format_real(x);
  return x < 0.0 ? "(" + s + ")" : s;
}

FunctionRef closed_form_f(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const ConstantGauss& s) -> FunctionRef {
            const double w = std::sqrt(std::abs(s.K));
            const std::string arg = lit(w) + "*u";
            const char* c = s.K > 0.0 ? "cos" : "cosh";
            const char* sn = s.K > 0.0 ? "sin" : "sinh";
            return Expression::parse(lit(s.alpha) + "*" + c + "(" + arg + ")+" + lit(s.beta) +
                                     "*" + sn + "(" + arg + ")");
          },
          [](const ParallelA& s) -> FunctionRef {
            return Expression::parse(lit(sign_value(s.sign)) + "*sqrt(" + lit(s.c) + "*u+" +
                                     lit(s.d) + ")");
          },
          [](const auto&) -> FunctionRef { return nullptr; },
      },
      spec);
}

void check_directrix(const FamilySpec& spec, const Directrix& d) {
  const double b = required_kappa(spec);
  if (std::isnan(b)) return;
  constexpr int kSamples = 65;
  const Interval dom = d.domain();
  for (int i = 0; i < kSamples; ++i) {
    const double v = i + 1 == kSamples ? dom.hi : dom.lo + dom.length() * i / (kSamples - 1);
    const double k = kappa(d, v);
    if (!(std::abs(k - b) <= 1e-8))
      throw SpecError(family_name(spec) + " needs a directrix with kappa = " + format_real(b) +
                      ", found kappa(" + format_real(v) + ") = " + format_real(k));
  }
}

// Checks f > 0 and f' != 0 (and that f is defined) at u.
bool profile_ok(const JetFunction& f, double u) {
  try {
    const ScalarJet j = f.jet(u);
    return std::isfinite(j.value) && j.value >= kPositivityFloor && std::isfinite(j.d1) &&
           std::abs(j.d1) >= kMinSlope;
  } catch (const DomainError&) {
    return false;
  }
}

// Longest prefix of `range` on which profile_ok holds, from a 4096-cell
// scan refined by bisection at the first failure.
Interval valid_prefix(const JetFunction& f, Interval range, std::string& reason) {
  if (!profile_ok(f, range.lo))
    throw ProfileInvariantError("profile " + f.describe() + " is invalid at u = " +
                                format_real(range.lo));
  constexpr int kCells = 4096;
  double good = range.lo;
  for (int i = 1; i <= kCells; ++i) {
    const double u = i == kCells ? range.hi : range.lo + range.length() * i / kCells;
    if (profile_ok(f, u)) {
      good = u;
      continue;
    }
    double bad = u;
    for (int it = 0; it < 80 && bad - good > 1e-15 * std::max(1.0, std::abs(bad)); ++it) {
      const double mid = 0.5 * (good + bad);
      (profile_ok(f, mid) ? good : bad) = mid;
    }
    reason = "f > 0 and f' != 0 fail past u = " + format_real(good);
    break;
  }
  if (!(good > range.lo))
    throw ProfileInvariantError("profile " + f.describe() + " has no valid sub-range");
  return {range.lo, good};
}

double relative(double residual, std::initializer_list<double> scales) {
  double m = 0.0;
  for (double s : scales) m = std::max(m, std::abs(s));
  return m == 0.0 ? std::abs(residual) : std::abs(residual) / m;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const ConstantGauss& s) {
                   require_nonzero(s.K, "K");
                   require_finite(s.alpha, "alpha");
                   require_finite(s.beta, "beta");
                 },
                 [](const ConstantMean& s) {
                   require_nonzero(s.a, "a");
                   require_nonzero(s.b, "b");
                   require_finite(s.C, "C");
                 },
                 [](const ConstantK& s) {
                   require_nonzero(s.a, "a");
                   require_nonzero(s.b, "b");
                   require_finite(s.c, "c");
                 },
                 [](const Chen& s) {
                   require_nonzero(s.b, "b");
                   require_nonzero(s.c, "c");
                 },
                 [](const ParallelA& s) {
                   require_nonzero(s.c, "c");
                   require_finite(s.d, "d");
                   require_finite(s.a, "a");
                   if (s.sign == Sign::Minus)
                     throw SpecError("sign=- gives f < 0; a meridian surface needs f > 0");
                 },
                 [](const ParallelB& s) {
                   require_nonzero(s.a, "a");
                   require_finite(s.c, "c");
                   require_nonzero(s.b, "b");
                 },
             },
             spec);
}

std::string family_name(const FamilySpec& spec) {
  static constexpr const char* names[] = {"constant-gauss", "constant-mean", "constant-k",
                                          "chen",           "parallel-a",    "parallel-b"};
  return names[spec.index()];
}

bool is_ode_family(const FamilySpec& spec) {
  return !std::holds_alternative<ConstantGauss>(spec) && !std::holds_alternative<ParallelA>(spec);
}

double required_kappa(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const ConstantMean& s) { return s.b; },
                        [](const ConstantK& s) { return s.b; },
                        [](const Chen& s) { return s.b; },
                        [](const ParallelB& s) { return s.b; },
                        [](const auto&) { return std::numeric_limits<double>::quiet_NaN(); },
                    },
                    spec);
}

std::string_view to_string(ProfileSource s) {
  return s == ProfileSource::ClosedForm ? "closed-form" : "ode-integrated";
}

ScalarJet y_jet(const FamilySpec& spec, const ScalarJet& t) {
  if (!(t.value > 0.0)) throw DomainError("y needs t > 0", t.value);
  return std::visit(
      overloaded{
          [&](const ConstantMean& s) {
            const double b2 = s.b * s.b;
            const double s1 = sign_value(s.branch);
            if (s.epsilon == Sign::Plus) {
              const double cap = std::abs(s.b) / (2.0 * std::abs(s.a)) - kArcsinCapMargin;
              if (t.value > cap)
                throw DomainError("y needs t <= |b|/(2|a|) - " + format_real(kArcsinCapMargin),
                                  t.value);
              const ScalarJet root = sqrt(b2 - 4.0 * s.a * s.a * t * t);
              const ScalarJet bracket =
                  0.5 * t * root + b2 / (4.0 * s.a) * asin(2.0 * s.a / std::abs(s.b) * t);
              return (s.C + s1 * bracket) / t;
            }
            const ScalarJet root = sqrt(b2 + 4.0 * s.a * s.a * t * t);
            const ScalarJet bracket = 0.5 * t * root + b2 / (4.0 * s.a) * log(2.0 * s.a * t + root);
            return (s.C + s1 * bracket) / t;
          },
          [&](const ConstantK& s) {
            return s.c + sign_value(s.branch) * s.a / (2.0 * s.b) * t * t;
          },
          [&](const Chen& s) {
            const ScalarJet te = s.exponent == Sign::Plus ? t : reciprocal(t);
            return (s.c * s.c * te * te + s.b * s.b) / (2.0 * s.c * te);
          },
          [&](const ParallelB& s) { return (s.c + s.a * t) / t; },
          [](const auto&) -> ScalarJet {
            throw SpecError("y(t) is only defined for the ODE families");
          },
      },
      spec);
}

double y_of_t(const FamilySpec& spec, double t) {
  return y_jet(spec, ScalarJet::variable(t)).value;
}

FunctionRef y_function(const FamilySpec& spec) {
  validate(spec);
  if (!is_ode_family(spec)) throw SpecError(family_name(spec) + " has a closed-form f, no y(t)");
  return std::make_shared<LambdaFunction>([spec](const ScalarJet& t) { return y_jet(spec, t); },
                                          "y[" + to_text(spec) + "]");
}

GeneratedSurface generate(const FamilySpec& spec, double f0, Interval u_range,
                          const Directrix& directrix, const GenerateOptions& options) {
  validate(spec);
  if (!(u_range.hi > u_range.lo)) throw SpecError("u range must satisfy lo < hi");
  check_directrix(spec, directrix);

  if (!is_ode_family(spec)) {
    FunctionRef f = closed_form_f(spec);
    std::string reason;
    const Interval realized = valid_prefix(*f, u_range, reason);
    double g0 = 0.0;
    if (const auto* pa = std::get_if<ParallelA>(&spec)) {
      const double w = pa->c * realized.lo + pa->d;
      g0 = -sign_value(pa->sign) * 2.0 / (3.0 * pa->c * pa->c) * std::pow(w, 1.5) + pa->a;
    }
    const bool truncated = realized.hi < u_range.hi;
    return {MeridianSurface(ProfileCurve(std::move(f), realized, g0), directrix),
            spec,
            ProfileSource::ClosedForm,
            u_range,
            realized,
            truncated,
            truncated ? reason : std::string(),
            0.0,
            0.0};
  }

  if (!(f0 > 0.0) || !std::isfinite(f0)) throw SpecError("f0 must be positive");
  if (!(options.step > 0.0)) throw SpecError("step must be positive");
  FunctionRef y = y_function(spec);
  const FamilyProperty property = family_property(spec);

  double step = options.step;
  AutonomousSolution coarse = integrate_autonomous(y, f0, u_range, step);
  for (int halvings = 0;; ++halvings) {
    AutonomousSolution fine = integrate_autonomous(y, f0, u_range, 0.5 * step);
    // Compare on the common realized range at the coarse nodes.
    const double common = std::min(coarse.realized.hi, fine.realized.hi);
    double estimate = 0.0;
    for (std::size_t i = 0; i < coarse.u.size() && coarse.u[i] <= common; ++i) {
      const double ff = fine.profile->jet(coarse.u[i]).value;
      estimate = std::max(estimate, std::abs(coarse.f[i] - ff) / 15.0);
    }

    const Interval realized = fine.realized;
    MeridianSurface surface(ProfileCurve(fine.profile, realized, 0.0), directrix);

    bool property_ok = true;
    if (estimate <= options.error_target) {
      constexpr int kChecks = 16;
      const Interval dv = directrix.domain();
      for (int i = 0; i < kChecks && property_ok; ++i) {
        const double u = realized.lo + realized.length() * (i + 0.5) / kChecks;
        const double v = dv.lo + dv.length() * (i + 0.5) / kChecks;
        try {
          const double value = family_property_value(spec, surface, u, v);
          property_ok = std::abs(value - property.target) <= property.tolerance;
        } catch (const Error&) {
          // Flat or marginally trapped sample points say nothing about accuracy.
        }
      }
    }

    const bool accurate = estimate <= options.error_target && property_ok;
    if (accurate || halvings >= options.max_halvings) {
      const bool truncated = fine.truncated;
      return {std::move(surface), spec,      ProfileSource::OdeIntegrated,
              u_range,            realized,  truncated,
              fine.reason,        0.5 * step, estimate};
    }
    step *= 0.5;
    coarse = std::move(fine);
  }
}

double defining_residual(const FamilySpec& spec, const ProfileCurve& profile, double u) {
  const ScalarJet j = profile.f_jet(u);
  const double f = j.value, fp = j.d1, fpp = j.d2;
  const double p = f * fpp + fp * fp;
  return std::visit(
      overloaded{
          [&](const ConstantGauss& s) { return relative(fpp + s.K * f, {fpp, s.K * f}); },
          [&](const ConstantMean& s) {
            const double e4 = sign_value(s.epsilon) * 4.0 * s.a * s.a * f * f * fp * fp;
            const double rhs = s.b * s.b * fp * fp;
            return relative(p * p + e4 - rhs, {p * p, e4, rhs});
          },
          [&](const ConstantK& s) {
            const double rhs = sign_value(s.branch) * s.a * f * fp;
            return relative(s.b * fpp - rhs, {s.b * fpp, rhs});
          },
          [&](const Chen& s) {
            const double lhs = f * f * fpp * fpp;
            const double rhs = fp * fp * (fp * fp - s.b * s.b);
            return relative(lhs - rhs, {lhs, rhs, fp * fp * fp * fp});
          },
          [&](const ParallelA&) { return relative(p, {f * fpp, fp * fp}); },
          [&](const ParallelB& s) { return relative(p - s.a * fp, {f * fpp, fp * fp, s.a * fp}); },
      },
      spec);
}

FamilyProperty family_property(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const ConstantGauss& s) { return FamilyProperty{"K", s.K, 1e-9}; },
                        [](const ConstantMean& s) {
                          return FamilyProperty{"H_norm", std::abs(s.a), 1e-6};
                        },
                        [](const ConstantK& s) { return FamilyProperty{"k", -s.a * s.a, 1e-6}; },
                        [](const Chen&) { return FamilyProperty{"lambda", 0.0, 1e-6}; },
                        [](const ParallelA&) { return FamilyProperty{"beta", 0.0, 1e-6}; },
                        [](const ParallelB&) { return FamilyProperty{"beta", 0.0, 1e-6}; },
                    },
                    spec);
}

double family_property_value(const FamilySpec& spec, const MeridianSurface& s, double u,
                             double v) {
  return std::visit(overloaded{
                        [&](const ConstantGauss&) { return gauss_curvature(s, u); },
                        [&](const ConstantMean&) { return mean_curvature(s, u, v).norm; },
                        [&](const ConstantK&) { return invariant_k(s, u, v); },
                        [&](const Chen&) { return eight_invariants(s, u, v).lambda; },
                        [&](const auto&) {
                          const InvariantRecord r = eight_invariants(s, u, v);
                          return std::max(std::abs(r.beta1), std::abs(r.beta2));
                        },
                    },
                    spec);
}

}  // namespace meridian
