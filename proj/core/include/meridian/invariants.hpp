#pragma once

#include "meridian/surface.hpp"

namespace meridian {

// The eight frame invariants plus the derived scalars at one point.
struct InvariantRecord {
  double gamma1 = 0.0, gamma2 = 0.0;
  double nu1 = 0.0, nu2 = 0.0;
  double lambda = 0.0, mu = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  double K = 0.0;         // Gauss curvature
  double k = 0.0;         // det of the Weingarten-type map
  double varkappa = 0.0;  // normal curvature
  double H_norm = 0.0;
  double H_n1 = 0.0, H_n2 = 0.0;  // H = H_n1 n1 + H_n2 n2
  int epsilon = 1;                // sign <H, H>
};

// K = -f''/f; depends on u only.
double gauss_curvature(const MeridianSurface& s, double u);

struct MeanCurvature {
  double H_n1 = 0.0;
  double H_n2 = 0.0;
  double norm = 0.0;
  int epsilon = 1;
};

// H = kappa/(2f) n1 - (f f'' + f'^2)/(2 f f') n2. Throws FlatCaseError
// where kappa = 0 and MarginallyTrappedError where <H, H> = 0.
MeanCurvature mean_curvature(const MeridianSurface& s, double u, double v,
                             double tol = kDefaultClassifyTolerance);

// k = -kappa_m^2 kappa^2 / f^2. Defined everywhere (0 at flat points).
double invariant_k(const MeridianSurface& s, double u, double v);

// Closed forms of all eight invariants at a General point.
//
// mu carries a factor epsilon: mu = epsilon kappa f'' / sqrt(epsilon D),
// D = kappa^2 f'^2 - (f f'' + f'^2)^2. With the published frame {b, l}
// this is what <grad_x y, l> evaluates to; for epsilon = +1 it equals the
// epsilon-free expression returned by mu_without_epsilon_factor.
InvariantRecord eight_invariants(const MeridianSurface& s, double u, double v,
                                 double tol = kDefaultClassifyTolerance);

// kappa f'' / sqrt(epsilon D) with no epsilon prefactor. Differs from
// eight_invariants().mu by its sign where epsilon = -1.
double mu_without_epsilon_factor(const MeridianSurface& s, double u, double v,
                                 double tol = kDefaultClassifyTolerance);

// (nu1 - nu2) mu; identically zero on these surfaces.
double normal_connection_curvature(const MeridianSurface& s, double u, double v,
                                   double tol = kDefaultClassifyTolerance);

}  // namespace meridian
