#include <algorithm>
#include <cmath>
#include <functional>

#include "meridian/format.hpp"
#include "meridian/harness.hpp"
#include "meridian/invariants.hpp"
#include "meridian/oracle.hpp"

namespace meridian::harness {

namespace {

struct Accumulator {
  CheckRecord rec;
  std::size_t skipped = 0;
  std::size_t failed_points = 0;
  std::string first_failure;

  Accumulator(std::string name, double tol) {
    rec.name = std::move(name);
    rec.tolerance = tol;
  }

  void add(double err, double u, double v) {
    ++rec.points;
    if (std::isnan(rec.max_abs_error)) return;
    if (rec.points == 1 || !(err <= rec.max_abs_error)) {
      rec.max_abs_error = err;
      rec.worst_u = u;
      rec.worst_v = v;
    }
  }

  void fail(const std::string& what, double u, double v) {
    if (failed_points++ == 0) {
      first_failure = what;
      rec.worst_u = u;
      rec.worst_v = v;
    }
  }

  CheckRecord finish() {
    rec.pass = failed_points == 0 && rec.points > 0 && rec.max_abs_error <= rec.tolerance;
    std::string note;
    if (rec.points == 0) note = "no points evaluated";
    if (skipped) note += (note.empty() ? "" : "; ") + std::to_string(skipped) + " points skipped";
    if (failed_points)
      note += (note.empty() ? "" : "; ") + std::to_string(failed_points) +
              " points failed to evaluate, first: " + first_failure;
    if (!rec.note.empty()) note = rec.note + (note.empty() ? "" : "; " + note);
    rec.note = note;
    return rec;
  }
};

bool stencil_fits(const MeridianSurface& s, double u, double v, double h) {
  const Interval du = s.domain_u(), dv = s.domain_v();
  return u - 2 * h >= du.lo && u + 2 * h <= du.hi && v - 2 * h >= dv.lo && v + 2 * h <= dv.hi;
}

using Component = double InvariantRecord::*;
struct Named {
  const char* name;
  Component field;
};
constexpr Named kEight[] = {{"gamma1", &InvariantRecord::gamma1}, {"gamma2", &InvariantRecord::gamma2},
                            {"nu1", &InvariantRecord::nu1},       {"nu2", &InvariantRecord::nu2},
                            {"lambda", &InvariantRecord::lambda}, {"mu", &InvariantRecord::mu},
                            {"beta1", &InvariantRecord::beta1},   {"beta2", &InvariantRecord::beta2}};

// Largest deviation of the oracle frame derivatives from the closed-form
// derivative formulas.
double derivative_formula_error(const FrameDerivatives& d, const PointScalars& ps) {
  const double ff = ps.fp / ps.f;
  const double terms[] = {
      d.XX.X,  d.XX.Y,  d.XX.n1, d.XX.n2 - ps.kappa_m,
      d.XY.X,  d.XY.Y,  d.XY.n1, d.XY.n2,
      d.YX.X,  d.YX.Y - ff, d.YX.n1, d.YX.n2,
      d.YY.X + ff, d.YY.Y, d.YY.n1 - ps.kappa / ps.f, d.YY.n2 - ff,
      d.Xn1.X, d.Xn1.Y, d.Xn1.n2,
      d.Yn1.Y + ps.kappa / ps.f,
      d.Xn2.X + ps.kappa_m, d.Yn2.Y + ff};
  double worst = 0.0;
  for (double t : terms) worst = std::max(worst, std::abs(t));
  return worst;
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

VerificationReport verify_surface(const BuiltSurface& built, const std::optional<FamilySpec>& family,
                                  const std::vector<double>& us, const std::vector<double>& vs,
                                  const VerifyOptions& opt) {
  const MeridianSurface& s = built.surface;
  std::vector<Accumulator> oracle;
  for (const Named& n : kEight) oracle.emplace_back(std::string("oracle ") + n.name, opt.tol);
  Accumulator formulas("derivative formulas", opt.tol);
  Accumulator id_gamma("gamma1 + gamma2 = 0", opt.identity_tol);
  Accumulator id_nu("nu1 - nu2 = 0", opt.identity_tol);
  Accumulator id_varkappa("varkappa = 0", opt.identity_tol);
  Accumulator id_k("k + 4 nu1 nu2 mu^2 = 0", opt.identity_tol);
  Accumulator id_K("K - eps (nu1 nu2 - lambda^2 + mu^2) = 0", opt.identity_tol);
  Accumulator gram_check("frame Gram = diag(1, 1, eps, -eps)", opt.identity_tol);
  id_k.rec.note = id_K.rec.note = "error relative to max(1, term magnitudes)";

  std::optional<Accumulator> property, residual;
  if (family) {
    const FamilyProperty fp = family_property(*family);
    property.emplace(fp.name + " = " + format_real(fp.target), fp.tolerance);
    residual.emplace("defining relation", 1e-6);
    residual->rec.note = "relative residual, v-independent";
  }

  std::size_t eps_minus = 0, mu_flipped = 0;

  for (double u : us) {
    if (residual) {
      try {
        residual->add(defining_residual(*family, s.profile(), u), u, 0.0);
      } catch (const Error& e) {
        residual->fail(e.what(), u, 0.0);
      }
    }
    for (double v : vs) {
      PointScalars ps;
      try {
        ps = point_scalars(s, u, v);
      } catch (const Error& e) {
        formulas.fail(e.what(), u, v);
        continue;
      }
      const bool fits = stencil_fits(s, u, v, opt.oracle_step);
      if (fits) {
        try {
          formulas.add(derivative_formula_error(oracle_second_fundamental(s, u, v, opt.oracle_step), ps), u, v);
        } catch (const Error& e) {
          formulas.fail(e.what(), u, v);
        }
      } else {
        ++formulas.skipped;
      }

      if (classify(ps) != PointCase::General) {
        for (auto& a : oracle) ++a.skipped;
        for (Accumulator* a : {&id_gamma, &id_nu, &id_varkappa, &id_k, &id_K, &gram_check}) ++a->skipped;
        if (property) ++property->skipped;
        continue;
      }

      InvariantRecord r;
      try {
        r = eight_invariants(s, u, v);
      } catch (const Error& e) {
        for (Accumulator* a : {&id_gamma, &id_nu, &id_varkappa, &id_k, &id_K}) a->fail(e.what(), u, v);
        continue;
      }
      id_gamma.add(std::abs(r.gamma1 + r.gamma2), u, v);
      id_nu.add(std::abs(r.nu1 - r.nu2), u, v);
      id_varkappa.add(std::abs(r.varkappa), u, v);
      const double m2 = r.mu * r.mu;
      id_k.add(std::abs(r.k + 4 * r.nu1 * r.nu2 * m2) / std::max(1.0, std::abs(r.k)), u, v);
      const double Kscale = std::max({1.0, std::abs(r.nu1 * r.nu2), r.lambda * r.lambda, m2});
      id_K.add(std::abs(r.K - r.epsilon * (r.nu1 * r.nu2 - r.lambda * r.lambda + m2)) / Kscale, u, v);

      try {
        const TangentFrame t = tangent_frame(s, u, v);
        const NormalFrame n = normal_frame(s, u, v);
        const auto g = gram({t.X, t.Y, n.b, n.l});
        const double eps = n.epsilon;
        const double target[4] = {1.0, 1.0, eps, -eps};
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(g[i][j] - (i == j ? target[i] : 0.0)));
        gram_check.add(worst, u, v);
      } catch (const Error& e) {
        gram_check.fail(e.what(), u, v);
      }

      if (property) {
        try {
          property->add(std::abs(family_property_value(*family, s, u, v) - family_property(*family).target), u, v);
        } catch (const Error& e) {
          property->fail(e.what(), u, v);
        }
      }

      if (!fits) {
        for (auto& a : oracle) ++a.skipped;
        continue;
      }
      try {
        const InvariantRecord o = oracle_invariants(s, u, v, opt.oracle_step);
        for (std::size_t i = 0; i < std::size(kEight); ++i)
          oracle[i].add(std::abs(o.*kEight[i].field - r.*kEight[i].field), u, v);
        if (r.epsilon < 0) {
          ++eps_minus;
          const double literal = mu_without_epsilon_factor(s, u, v);
          if (std::abs(o.mu - literal) > opt.tol && std::abs(o.mu + literal) <= opt.tol) ++mu_flipped;
        }
      } catch (const Error& e) {
        for (auto& a : oracle) a.fail(e.what(), u, v);
      }
    }
  }

  VerificationReport report;
  for (auto& a : oracle) report.checks.push_back(a.finish());
  report.checks.push_back(formulas.finish());
  for (Accumulator* a : {&id_gamma, &id_nu, &id_varkappa, &id_k, &id_K, &gram_check})
    report.checks.push_back(a->finish());
  if (property) report.checks.push_back(property->finish());
  if (residual) report.checks.push_back(residual->finish());
  if (mu_flipped)
    report.discrepancies.push_back(
        "mu without the epsilon factor has the opposite sign to the oracle at " + std::to_string(mu_flipped) +
        " of " + std::to_string(eps_minus) + " points with <H, H> < 0; reported mu includes the factor");
  return report;
}

SurfaceMesh build_mesh(const MeridianSurface& s, const std::vector<double>& us,
                       const std::vector<double>& vs, const std::vector<std::string>& names) {
  using Field = std::function<std::optional<double>(double, double, const PointScalars&,
                                                    const std::optional<InvariantRecord>&)>;
  const auto lookup = [&s](const std::string& name) -> Field {
    if (name == "K")
      return [&s](double u, double, const PointScalars&, const auto&) { return gauss_curvature(s, u); };
    // |<H, H>|^{1/2}; unlike mean_curvature this is also defined where kappa = 0.
    if (name == "H_norm")
      return [](double, double, const PointScalars& ps, const auto&) {
        return std::sqrt(std::abs(ps.discriminant)) / (2.0 * std::abs(ps.f * ps.fp));
      };
    if (name == "k")
      return [&s](double u, double v, const PointScalars&, const auto&) { return invariant_k(s, u, v); };
    const auto frame = [](double InvariantRecord::*m) -> Field {
      return [m](double, double, const PointScalars&,
                 const std::optional<InvariantRecord>& r) -> std::optional<double> {
        if (!r) return std::nullopt;
        return (*r).*m;
      };
    };
    if (name == "lambda") return frame(&InvariantRecord::lambda);
    if (name == "beta1") return frame(&InvariantRecord::beta1);
    if (name == "beta2") return frame(&InvariantRecord::beta2);
    throw SpecError("unknown mesh field '" + name + "' (known: K, H_norm, k, lambda, beta1, beta2)");
  };

  SurfaceMesh mesh;
  mesh.nu = us.size();
  mesh.nv = vs.size();
  mesh.field_names = names;
  std::vector<Field> fns;
  for (const std::string& n : names) fns.push_back(lookup(n));
  mesh.fields.assign(names.size(), {});
  for (double u : us)
    for (double v : vs) {
      mesh.vertices.push_back(embed(s, u, v));
      if (fns.empty()) continue;
      const PointScalars ps = point_scalars(s, u, v);
      std::optional<InvariantRecord> r;
      if (classify(ps) == PointCase::General) r = eight_invariants(s, u, v);
      for (std::size_t i = 0; i < fns.size(); ++i) mesh.fields[i].push_back(fns[i](u, v, ps, r));
    }
  return mesh;
}

}  // namespace meridian::harness
