#include "meridian/invariants.hpp"

#include <cmath>

namespace meridian {

double gauss_curvature(const MeridianSurface& s, double u) {
  const ScalarJet f = s.profile().f_jet(u);
  return -f.d2 / f.value;
}

MeanCurvature mean_curvature(const MeridianSurface& s, double u, double v, double tol) {
  const PointScalars ps = point_scalars(s, u, v);
  const PointCase c = classify(ps, tol);
  if (c == PointCase::HyperplanarFlat)
    throw FlatCaseError("flat point (kappa = 0): the geometric frame is undefined", c);
  if (c == PointCase::MarginallyTrapped)
    throw MarginallyTrappedError("marginally trapped point: <H, H> = 0");
  MeanCurvature h;
  h.H_n1 = ps.kappa / (2.0 * ps.f);
  h.H_n2 = -ps.p / (2.0 * ps.f * ps.fp);
  h.epsilon = ps.epsilon();
  h.norm = std::sqrt(h.epsilon * ps.discriminant / (4.0 * ps.f * ps.f * ps.fp * ps.fp));
  return h;
}

double invariant_k(const MeridianSurface& s, double u, double v) {
  const ScalarJet f = s.profile().f_jet(u);
  const double km = f.d2 / f.d1;
  const double k = kappa(s.directrix(), v);
  return -km * km * k * k / (f.value * f.value);
}

InvariantRecord eight_invariants(const MeridianSurface& s, double u, double v, double tol) {
  const PointScalars ps = point_scalars(s, u, v);
  require_general(ps, tol);

  const double f = ps.f, fp = ps.fp, fpp = ps.fpp, fppp = ps.fppp;
  const int eps = ps.epsilon();
  const double eps_d = eps * ps.discriminant;  // > 0
  const double root = std::sqrt(eps_d);
  const double ffp = f * fp;

  InvariantRecord r;
  r.epsilon = eps;
  r.gamma1 = fp / (std::numbers::sqrt2 * f);
  r.gamma2 = -r.gamma1;
  r.nu1 = root / (2.0 * ffp);
  r.nu2 = r.nu1;
  r.lambda =
      eps * (ps.kappa * ps.kappa * fp * fp + f * f * fpp * fpp - fp * fp * fp * fp) / (2.0 * ffp * root);
  r.mu = eps * ps.kappa * fpp / root;

  // d/du (p / f') with p' = 3 f' f'' + f f'''
  const double dp = 3.0 * fp * fpp + f * fppp;
  const double dratio = (dp * fp - ps.p * fpp) / (fp * fp);
  const double along_v = ps.kappa_dv * ps.p / (ffp * ps.speed);
  const double pre = fp * fp / (std::numbers::sqrt2 * eps_d);
  r.beta1 = -pre * (ps.kappa * dratio - along_v);
  r.beta2 = pre * (ps.kappa * dratio + along_v);

  r.K = -fpp / f;
  r.k = -ps.kappa_m * ps.kappa_m * ps.kappa * ps.kappa / (f * f);
  r.varkappa = (r.nu1 - r.nu2) * r.mu;
  r.H_n1 = ps.kappa / (2.0 * f);
  r.H_n2 = -ps.p / (2.0 * ffp);
  r.H_norm = root / (2.0 * std::abs(ffp));
  return r;
}

double mu_without_epsilon_factor(const MeridianSurface& s, double u, double v, double tol) {
  const PointScalars ps = point_scalars(s, u, v);
  require_general(ps, tol);
  return ps.kappa * ps.fpp / std::sqrt(ps.epsilon() * ps.discriminant);
}

double normal_connection_curvature(const MeridianSurface& s, double u, double v, double tol) {
  return eight_invariants(s, u, v, tol).varkappa;
}

}  // namespace meridian
