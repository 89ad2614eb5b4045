#pragma once

#include <string_view>

#include "meridian/minkowski.hpp"
#include "meridian/profile.hpp"

namespace meridian {

enum class PointCase { HyperplanarFlat, DevelopableRuledFlat, MarginallyTrapped, General };

std::string_view to_string(PointCase c);

// Raised where the geometric frame {b, l} (and the invariants built on it)
// is undefined because kappa = 0 or kappa_m = 0.
class FlatCaseError : public Error {
 public:
  FlatCaseError(const std::string& what, PointCase c) : Error(what), case_(c) {}
  PointCase point_case() const noexcept { return case_; }

 private:
  PointCase case_;
};

// <H, H> = 0 with H != 0; outside the scope of the invariant machinery.
class MarginallyTrappedError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kDefaultClassifyTolerance = 1e-9;

// z(u, v) = f phi cos v e1 + f phi sin v e2 + (f phi^2/2 + g) xi1 + f xi2
class MeridianSurface {
 public:
  MeridianSurface(ProfileCurve profile, Directrix directrix);

  const ProfileCurve& profile() const { return profile_; }
  const Directrix& directrix() const { return directrix_; }
  Interval domain_u() const { return profile_.domain(); }
  Interval domain_v() const { return directrix_.domain(); }
  bool contains(double u, double v) const {
    return domain_u().contains(u) && domain_v().contains(v);
  }

 private:
  ProfileCurve profile_;
  Directrix directrix_;
};

// Every scalar the closed-form formulas need at one parameter point.
struct PointScalars {
  double f = 0.0, fp = 0.0, fpp = 0.0, fppp = 0.0;
  double phi = 0.0, phid = 0.0, phidd = 0.0;
  double speed = 0.0;      // sqrt(phi_dot^2 + phi^2)
  double kappa = 0.0;      // directrix curvature
  double kappa_dv = 0.0;   // d kappa / dv
  double kappa_m = 0.0;    // f''/f'
  double p = 0.0;          // f f'' + f'^2
  double q = 0.0;          // kappa f'
  double discriminant = 0.0;  // q^2 - p^2, sign <H, H>

  int epsilon() const { return discriminant >= 0.0 ? 1 : -1; }
};

PointScalars point_scalars(const MeridianSurface& s, double u, double v);

Vec4 embed(const MeridianSurface& s, double u, double v);

struct CoordinateTangents {
  Vec4 zu;
  Vec4 zv;
};
CoordinateTangents coordinate_tangents(const MeridianSurface& s, double u, double v);

struct TangentFrame {
  Vec4 X, Y;        // X = z_u, Y = z_v / (f sqrt(phi_dot^2 + phi^2))
  Vec4 xdir, ydir;  // principal tangents (X + Y)/sqrt2, (-X + Y)/sqrt2
};
TangentFrame tangent_frame(const MeridianSurface& s, double u, double v);

struct FundamentalForm {
  double E = 0.0, F = 0.0, G = 0.0;
};
FundamentalForm first_fundamental_form(const MeridianSurface& s, double u, double v);

struct NormalPair {
  Vec4 n1;  // spacelike unit normal
  Vec4 n2;  // timelike unit normal
};
// Defined at every regular point, flat or not.
NormalPair normal_pair(const MeridianSurface& s, double u, double v);

struct NormalFrame {
  Vec4 n1, n2;
  Vec4 b, l;  // b along H; <b, b> = epsilon, <l, l> = -epsilon
  int epsilon = 1;
};
// Throws FlatCaseError at flat points (use normal_pair for n1, n2 there)
// and MarginallyTrappedError where <H, H> = 0.
NormalFrame normal_frame(const MeridianSurface& s, double u, double v,
                         double tol = kDefaultClassifyTolerance);

PointCase classify_point(const MeridianSurface& s, double u, double v,
                         double tol = kDefaultClassifyTolerance);
PointCase classify(const PointScalars& ps, double tol = kDefaultClassifyTolerance);

// Throws the matching error unless the point is General.
void require_general(const PointScalars& ps, double tol = kDefaultClassifyTolerance);

}  // namespace meridian
