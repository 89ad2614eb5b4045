#pragma once

#include "meridian/invariants.hpp"

namespace meridian {

// Finite-difference oracle. Frame fields are evaluated at neighbouring
// parameter points and differentiated with second-order central
// differences; the parameter-space direction of a tangent vector t is
// recovered from the numerically differentiated embedding by solving
// [E F; F G] (a, c) = (<t, z_u>, <t, z_v>). Nothing here uses the
// closed-form invariant expressions.

inline constexpr double kDefaultOracleStep = 1e-4;

// Eight invariants from their frame definitions, e.g. nu1 = <D_x x, b>,
// beta1 = <D_x b, l>. K comes from the Gauss equation
// <s(x,x), s(y,y)> - <s(x,y), s(x,y)>, H from the normal part of
// (D_x x + D_y y)/2; k and varkappa from -4 nu1 nu2 mu^2 and (nu1 - nu2) mu.
// Requires [u-2h, u+2h] x [v-2h, v+2h] inside the domain.
InvariantRecord oracle_invariants(const MeridianSurface& s, double u, double v,
                                  double h = kDefaultOracleStep,
                                  double tol = kDefaultClassifyTolerance);

// Numerical mean curvature vector decomposed along the geometric normals.
struct OracleMeanCurvature {
  Vec4 H;
  double along_b = 0.0;  // H = along_b b + along_l l
  double along_l = 0.0;
};
OracleMeanCurvature oracle_mean_curvature(const MeridianSurface& s, double u, double v,
                                          double h = kDefaultOracleStep,
                                          double tol = kDefaultClassifyTolerance);

// Inner products of a numerically differentiated field with X, Y, n1, n2.
struct FrameComponents {
  double X = 0.0, Y = 0.0, n1 = 0.0, n2 = 0.0;
};

// Ambient derivatives of the frame {X, Y, n1, n2} along X and Y.
// Defined at flat points too; only regularity is needed.
struct FrameDerivatives {
  FrameComponents XX, XY, YX, YY;      // D_X X, D_X Y, D_Y X, D_Y Y
  FrameComponents Xn1, Yn1, Xn2, Yn2;  // D_X n1, D_Y n1, D_X n2, D_Y n2
};
FrameDerivatives oracle_second_fundamental(const MeridianSurface& s, double u, double v,
                                           double h = kDefaultOracleStep);

}  // namespace meridian
