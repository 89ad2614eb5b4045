#pragma once

#include <string>
#include <variant>

#include "meridian/expression.hpp"
#include "meridian/surface.hpp"

namespace meridian {

enum class Sign { Minus = -1, Plus = 1 };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

// f = alpha cos(sqrt(K) u) + beta sin(sqrt(K) u); cosh/sinh of sqrt(-K) u
// for K < 0.
struct ConstantGauss {
  double K = 1.0, alpha = 1.0, beta = 0.0;
  friend bool operator==(const ConstantGauss&, const ConstantGauss&) = default;
};

// ||H|| = a on a directrix with kappa = b. epsilon is the sign of <H, H>.
// branch picks the sign in front of the bracket of
//   y(t) = (1/t) (C +- [(t/2) sqrt(b^2 - 4a^2 t^2) + (b^2/4a) arcsin(2at/|b|)])
// (epsilon = +1) or its arcsinh counterpart (epsilon = -1).
struct ConstantMean {
  double a = 1.0, b = 1.0, C = 0.0;
  Sign epsilon = Sign::Plus;
  Sign branch = Sign::Plus;
  friend bool operator==(const ConstantMean&, const ConstantMean&) = default;
};

// k = -a^2 on a directrix with kappa = b: y(t) = c +- a t^2/(2b).
struct ConstantK {
  double a = 1.0, b = 1.0, c = 0.0;
  Sign branch = Sign::Plus;
  friend bool operator==(const ConstantK&, const ConstantK&) = default;
};

// lambda = 0: y(t) = (c^2 t^{2e} + b^2) / (2c t^e), e = +-1.
struct Chen {
  double b = 1.0, c = 1.0;
  Sign exponent = Sign::Plus;
  friend bool operator==(const Chen&, const Chen&) = default;
};

// Parallel normal bundle, any directrix: f = +-sqrt(cu + d),
// g = -+(2/(3c^2)) (cu + d)^{3/2} + a.
struct ParallelA {
  double c = 1.0, d = 0.0, a = 0.0;
  Sign sign = Sign::Plus;
  friend bool operator==(const ParallelA&, const ParallelA&) = default;
};

// Parallel normal bundle on a directrix with kappa = b: y(t) = (c + at)/t.
struct ParallelB {
  double a = 1.0, c = 0.0, b = 1.0;
  friend bool operator==(const ParallelB&, const ParallelB&) = default;
};

using FamilySpec = std::variant<ConstantGauss, ConstantMean, ConstantK, Chen, ParallelA, ParallelB>;

// Throws SpecError naming the first violated parameter constraint.
void validate(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);  // "constant-gauss", ...
bool is_ode_family(const FamilySpec& spec);
// kappa required of the directrix, or NaN when the family imposes none.
double required_kappa(const FamilySpec& spec);

// Canonical text form, e.g. "constant-mean a=0.5 b=2 C=0 epsilon=+1 branch=+".
std::string to_text(const FamilySpec& spec);
// Parses the canonical form. Keys may come in any order; each is required
// exactly once. Throws SpecError naming the offending token.
FamilySpec parse_family_spec(std::string_view text);

// The slope function y with f' = y(f), for ODE families. Out-of-domain
// arguments (t <= 0, negative square roots, the arcsin cap) throw
// DomainError.
ScalarJet y_jet(const FamilySpec& spec, const ScalarJet& t);
double y_of_t(const FamilySpec& spec, double t);
FunctionRef y_function(const FamilySpec& spec);

// Margin kept below t = |b|/(2|a|) for ConstantMean with epsilon = +1.
inline constexpr double kArcsinCapMargin = 1e-9;

enum class ProfileSource { ClosedForm, OdeIntegrated };

std::string_view to_string(ProfileSource s);

struct GenerateOptions {
  double step = 1e-3;
  // Richardson estimate (|f_h - f_{h/2}| / 15) and the defining-property
  // check may each trigger a halving of the step, at most max_halvings times.
  double error_target = 1e-10;
  int max_halvings = 4;
};

struct GeneratedSurface {
  MeridianSurface surface;
  FamilySpec spec;
  ProfileSource source = ProfileSource::ClosedForm;
  Interval requested;
  Interval realized;
  bool truncated = false;
  std::string reason;
  double step = 0.0;            // ODE step used (0 for closed forms)
  double error_estimate = 0.0;  // Richardson estimate of the global error in f
};

// Builds the surface of a family. Closed-form families ignore f0; the others
// integrate f' = y(f), f(lo) = f0. The realized range is the longest prefix
// of u_range on which f > 0, f' != 0 and y stays in its domain; a shorter
// realized range is reported through `truncated`, not as an error.
// Throws SpecError for invalid parameters or a directrix whose curvature is
// not the family's b (tolerance 1e-8 on 65 samples), and
// ProfileInvariantError when no valid prefix exists.
GeneratedSurface generate(const FamilySpec& spec, double f0, Interval u_range,
                          const Directrix& directrix, const GenerateOptions& options = {});

// Relative residual of the family's second-order relation in f at u:
//   constant-gauss  f'' + K f = 0
//   constant-mean   (ff'' + f'^2)^2 + eps 4a^2 f^2 f'^2 = b^2 f'^2
//   constant-k      b f'' = +-a f f'
//   chen            (f f'')^2 = f'^2 (f'^2 - b^2)
//   parallel-a      ff'' + f'^2 = 0
//   parallel-b      ff'' + f'^2 = a f'
double defining_residual(const FamilySpec& spec, const ProfileCurve& profile, double u);

// The invariant each family pins, its target value and the tolerance it is
// held to: K, ||H||, k, lambda, or max(|beta1|, |beta2|).
struct FamilyProperty {
  std::string name;
  double target = 0.0;
  double tolerance = 0.0;
};
FamilyProperty family_property(const FamilySpec& spec);
double family_property_value(const FamilySpec& spec, const MeridianSurface& s, double u, double v);

}  // namespace meridian
