#include "meridian/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "meridian/format.hpp"

namespace meridian {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

std::string_view to_string(PointCase c) {
  switch (c) {
    case PointCase::HyperplanarFlat: return "HyperplanarFlat";
    case PointCase::DevelopableRuledFlat: return "DevelopableRuledFlat";
    case PointCase::MarginallyTrapped: return "MarginallyTrapped";
    case PointCase::General: return "General";
  }
  return "?";
}

MeridianSurface::MeridianSurface(ProfileCurve profile, Directrix directrix)
    : profile_(std::move(profile)), directrix_(std::move(directrix)) {
  if (!profile_.normalized())
    throw SpecError("a meridian surface needs an arc-length normalized profile");
}

PointScalars point_scalars(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const ScalarJet phi = s.directrix().phi_jet(v);
  const CurvatureJet k = kappa_jet(s.directrix(), v);
  PointScalars ps;
  ps.f = f.value;
  ps.fp = f.d1;
  ps.fpp = f.d2;
  ps.fppp = f.d3;
  ps.phi = phi.value;
  ps.phid = phi.d1;
  ps.phidd = phi.d2;
  ps.speed = std::sqrt(phi.d1 * phi.d1 + phi.value * phi.value);
  ps.kappa = k.value;
  ps.kappa_dv = k.dv;
  ps.kappa_m = f.d2 / f.d1;
  ps.p = f.value * f.d2 + f.d1 * f.d1;
  ps.q = k.value * f.d1;
  ps.discriminant = ps.q * ps.q - ps.p * ps.p;
  return ps;
}

Vec4 embed(const MeridianSurface& s, double u, double v) {
  const double f = s.profile().f_jet(u).value;
  const double phi = s.directrix().phi_jet(v).value;
  const double g = g_from_f(s.profile(), u);
  return from_null_coordinates(f * phi * std::cos(v), f * phi * std::sin(v),
                               0.5 * f * phi * phi + g, f);
}

CoordinateTangents coordinate_tangents(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const ScalarJet phi = s.directrix().phi_jet(v);
  const double gp = -0.5 / f.d1;
  const double c = std::cos(v), sn = std::sin(v);
  const double p = phi.value, pd = phi.d1;
  CoordinateTangents t;
  t.zu = from_null_coordinates(f.d1 * p * c, f.d1 * p * sn, 0.5 * f.d1 * p * p + gp, f.d1);
  t.zv = from_null_coordinates(f.value * (pd * c - p * sn), f.value * (pd * sn + p * c),
                               f.value * p * pd, 0.0);
  return t;
}

TangentFrame tangent_frame(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const ScalarJet phi = s.directrix().phi_jet(v);
  const double speed2 = phi.d1 * phi.d1 + phi.value * phi.value;
  if (!(speed2 >= kDegenerateSpeed2))
    throw DegeneracyError("degenerate directrix point: phi_dot^2 + phi^2 = " +
                          format_real(speed2));
  const CoordinateTangents t = coordinate_tangents(s, u, v);
  TangentFrame fr;
  fr.X = t.zu;
  fr.Y = t.zv / (f.value * std::sqrt(speed2));
  fr.xdir = kInvSqrt2 * (fr.X + fr.Y);
  fr.ydir = kInvSqrt2 * (fr.Y - fr.X);
  return fr;
}

FundamentalForm first_fundamental_form(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const ScalarJet phi = s.directrix().phi_jet(v);
  // E = -2 f' g' = 1 exactly under the normalization.
  return {1.0, 0.0, f.value * f.value * (phi.d1 * phi.d1 + phi.value * phi.value)};
}

NormalPair normal_pair(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const ScalarJet phi = s.directrix().phi_jet(v);
  const double p = phi.value, pd = phi.d1;
  const double speed2 = pd * pd + p * p;
  if (!(speed2 >= kDegenerateSpeed2))
    throw DegeneracyError("degenerate directrix point: phi_dot^2 + phi^2 = " +
                          format_real(speed2));
  const double c = std::cos(v), sn = std::sin(v);
  const double w = 1.0 / std::sqrt(speed2);
  NormalPair np;
  np.n1 = from_null_coordinates(w * (pd * sn + p * c), w * (-pd * c + p * sn), w * p * p, 0.0);
  // xi1 coefficient (f' phi^2 - 2 g')/(2 f') with g' = -1/(2 f'); the overall
  // sign makes grad_X X = -kappa_m n2 hold.
  const double fp = f.d1;
  const double xi1 = 0.5 * p * p + 0.5 / (fp * fp);
  np.n2 = -fp * from_null_coordinates(p * c, p * sn, xi1, 1.0);
  return np;
}

PointCase classify(const PointScalars& ps, double tol) {
  if (std::abs(ps.kappa) <= tol) return PointCase::HyperplanarFlat;
  if (std::abs(ps.kappa_m) <= tol) return PointCase::DevelopableRuledFlat;
  const double scale = std::max({std::abs(ps.q), std::abs(ps.p), tol});
  if (std::abs(ps.discriminant) <= tol * scale * scale) return PointCase::MarginallyTrapped;
  return PointCase::General;
}

PointCase classify_point(const MeridianSurface& s, double u, double v, double tol) {
  return classify(point_scalars(s, u, v), tol);
}

void require_general(const PointScalars& ps, double tol) {
  switch (const PointCase c = classify(ps, tol)) {
    case PointCase::HyperplanarFlat:
      throw FlatCaseError("flat point (kappa = 0): the surface lies in a hyperplane", c);
    case PointCase::DevelopableRuledFlat:
      throw FlatCaseError("flat point (kappa_m = 0): developable ruled surface", c);
    case PointCase::MarginallyTrapped:
      throw MarginallyTrappedError("marginally trapped point: <H, H> = 0");
    case PointCase::General: return;
  }
}

NormalFrame normal_frame(const MeridianSurface& s, double u, double v, double tol) {
  const PointScalars ps = point_scalars(s, u, v);
  require_general(ps, tol);
  const NormalPair np = normal_pair(s, u, v);
  NormalFrame fr;
  fr.n1 = np.n1;
  fr.n2 = np.n2;
  fr.epsilon = ps.epsilon();
  const double root = std::sqrt(std::abs(ps.discriminant));
  if (fr.epsilon > 0) {
    fr.b = (ps.q * np.n1 - ps.p * np.n2) / root;
    fr.l = (ps.p * np.n1 - ps.q * np.n2) / root;
  } else {
    fr.b = -(ps.q * np.n1 - ps.p * np.n2) / root;
    fr.l = (-ps.p * np.n1 + ps.q * np.n2) / root;
  }
  return fr;
}

}  // namespace meridian
