#include "meridian/profile.hpp"

#include <algorithm>
#include <cmath>

#include "meridian/format.hpp"
#include "meridian/quadrature.hpp"

namespace meridian {

double Interval::slack() const { return 1e-12 * std::max(1.0, std::abs(hi - lo)); }

namespace {

void require_domain(const Interval& domain, double t, const char* what) {
  if (!std::isfinite(t) || !domain.contains(t))
    throw DomainError(std::string(what) + " outside [" + format_real(domain.lo) + ", " +
                          format_real(domain.hi) + "]",
                      t);
}

ScalarJet kappa_expression(const ScalarJet& phi) {
  const ScalarJet dphi = phi.derivative();
  const ScalarJet ddphi = dphi.derivative();
  const ScalarJet speed2 = dphi * dphi + phi * phi;
  if (!(speed2.value >= kDegenerateSpeed2))
    throw DegeneracyError("directrix is degenerate: phi_dot^2 + phi^2 = " +
                          format_real(speed2.value));
  return (phi * ddphi - 2.0 * dphi * dphi - phi * phi) * pow(speed2, -1.5);
}

}  // namespace

ProfileCurve::ProfileCurve(FunctionRef f, Interval domain_u, double g_origin)
    : f_(std::move(f)), domain_(domain_u), g_origin_(g_origin) {
  if (!f_) throw SpecError("profile needs a function f");
  if (!(domain_.hi > domain_.lo)) throw SpecError("profile domain must satisfy lo < hi");
}

ProfileCurve ProfileCurve::unnormalized(FunctionRef f, FunctionRef g, Interval domain_u) {
  if (!g) throw SpecError("unnormalized profile needs a function g");
  ProfileCurve p(std::move(f), domain_u, 0.0);
  p.g_ = std::move(g);
  return p;
}

ScalarJet ProfileCurve::f_jet(double u) const {
  require_domain(domain_, u, "u");
  return jet_eval(*f_, u);
}

ScalarJet ProfileCurve::g_jet(double u) const {
  require_domain(domain_, u, "u");
  if (!g_) throw SpecError("g_jet is only available for unnormalized profiles");
  return jet_eval(*g_, u);
}

double ProfileCurve::g_prime(double u) const {
  if (g_) return g_jet(u).d1;
  return -0.5 / f_jet(u).d1;
}

Directrix::Directrix(FunctionRef phi, Interval domain_v) : phi_(std::move(phi)), domain_(domain_v) {
  if (!phi_) throw SpecError("directrix needs a function phi");
  if (!(domain_.hi > domain_.lo)) throw SpecError("directrix domain must satisfy lo < hi");
}

ScalarJet Directrix::phi_jet(double v) const {
  require_domain(domain_, v, "v");
  return jet_eval(*phi_, v);
}

ValidationReport validate_profile(const ProfileCurve& p, std::size_t samples) {
  if (samples < 2) throw SpecError("validate_profile needs at least 2 samples");
  const Interval d = p.domain();
  for (std::size_t i = 0; i < samples; ++i) {
    const double u =
        i + 1 == samples ? d.hi : d.lo + d.length() * static_cast<double>(i) / (samples - 1);
    const bool interior = i != 0 && i + 1 != samples;
    ScalarJet f;
    try {
      f = p.f_jet(u);
    } catch (const DomainError& e) {
      return {false, "f defined", u, e.what()};
    }
    if (!std::isfinite(f.value) || !(f.value >= kPositivityFloor))
      return {false, "f > 0", u, "f(" + format_real(u) + ") = " + format_real(f.value)};
    if (!interior) continue;
    if (!std::isfinite(f.d1) || !(std::abs(f.d1) >= kMinSlope))
      return {false, "f' != 0", u, "f'(" + format_real(u) + ") = " + format_real(f.d1)};
    if (!p.normalized()) {
      const double gp = p.g_jet(u).d1;
      if (!(-f.d1 * gp > 0.0))
        return {false, "-f'g' > 0", u,
                "-f'g'(" + format_real(u) + ") = " + format_real(-f.d1 * gp)};
    }
  }
  return {};
}

double kappa_m(const ProfileCurve& p, double u) {
  const ScalarJet f = p.f_jet(u);
  if (p.normalized()) return f.d2 / f.d1;
  const ScalarJet g = p.g_jet(u);
  return (f.d1 * g.d2 - g.d1 * f.d2) / std::pow(-2.0 * f.d1 * g.d1, 1.5);
}

double kappa(const Directrix& d, double v) { return kappa_expression(d.phi_jet(v)).value; }

CurvatureJet kappa_jet(const Directrix& d, double v) {
  const ScalarJet k = kappa_expression(d.phi_jet(v));
  return {k.value, k.d1};
}

double g_from_f(const ProfileCurve& p, double u) {
  if (!p.normalized()) return p.g_jet(u).value;
  const Interval d = p.domain();
  require_domain(d, u, "u");
  const double reference = p.f_jet(d.lo).d1;
  if (reference == 0.0) throw ProfileInvariantError("f' vanishes at the start of the profile");
  const auto integrand = [&](double t) {
    const double fp = p.f_jet(std::clamp(t, d.lo, d.hi)).d1;
    if (!(fp * reference > 0.0))
      throw ProfileInvariantError("f' changes sign inside the integration range near u = " +
                                  format_real(t));
    return -0.5 / fp;
  };
  return p.g_origin() + adaptive_simpson(integrand, d.lo, u).value;
}

}  // namespace meridian
