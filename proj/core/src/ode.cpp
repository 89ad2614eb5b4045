#include "meridian/ode.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "meridian/errors.hpp"
#include "meridian/format.hpp"

namespace meridian {

namespace {

std::size_t bracket(const std::vector<double>& x, double t) {
  auto it = std::upper_bound(x.begin(), x.end(), t);
  std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  return std::min(i, x.size() - 2);
}

}  // namespace

double hermite(const std::vector<double>& x, const std::vector<double>& y,
               const std::vector<double>& dy, double t) {
  if (x.size() == 1) return y.front();
  t = std::clamp(t, x.front(), x.back());
  const std::size_t i = bracket(x, t);
  const double h = x[i + 1] - x[i];
  const double s = (t - x[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y[i] + h10 * h * dy[i] + h01 * y[i + 1] + h11 * h * dy[i + 1];
}

ScalarJet hermite5(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& dy, const std::vector<double>& ddy, double t) {
  if (x.size() == 1) return {y.front(), dy.front(), ddy.front(), 0.0};
  t = std::clamp(t, x.front(), x.back());
  const std::size_t i = bracket(x, t);
  const double h = x[i + 1] - x[i];
  const ScalarJet s{(t - x[i]) / h, 1.0 / h, 0.0, 0.0};
  const ScalarJet s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  const ScalarJet h0 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
  const ScalarJet h1 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
  const ScalarJet h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
  const ScalarJet g0 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
  const ScalarJet g1 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
  const ScalarJet g2 = 0.5 * s3 - s4 + 0.5 * s5;
  return y[i] * h0 + (h * dy[i]) * h1 + (h * h * ddy[i]) * h2 + y[i + 1] * g0 +
         (h * dy[i + 1]) * g1 + (h * h * ddy[i + 1]) * g2;
}

std::vector<double> step_nodes(Interval range, double step) {
  if (!(step > 0.0)) throw SpecError("integration step must be positive");
  if (!(range.hi > range.lo)) throw SpecError("integration range must satisfy lo < hi");
  const double n_real = range.length() / step;
  auto n = static_cast<std::size_t>(std::ceil(n_real - 1e-9));
  n = std::max<std::size_t>(n, 1);
  std::vector<double> nodes(n + 1);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = range.lo + static_cast<double>(i) * step;
  nodes[n] = range.hi;
  return nodes;
}

namespace {

class AutonomousProfile final : public JetFunction {
 public:
  AutonomousProfile(FunctionRef y, std::vector<double> u, std::vector<double> f,
                    std::vector<double> slope)
      : y_(std::move(y)), u_(std::move(u)), f_(std::move(f)), slope_(std::move(slope)) {}

  ScalarJet jet(double t) const override {
    const double span = u_.back() - u_.front();
    const double slack = 1e-12 * std::max(1.0, span);
    if (!(t >= u_.front() - slack && t <= u_.back() + slack))
      throw DomainError("outside the integrated range of the profile", t);
    const double f = hermite(u_, f_, slope_, t);
    const ScalarJet y = jet_eval(*y_, f);
    return {f, y.value, y.d1 * y.value, (y.d2 * y.value + y.d1 * y.d1) * y.value};
  }

  std::string describe() const override { return "ode[f' = " + y_->describe() + "]"; }

 private:
  FunctionRef y_;
  std::vector<double> u_, f_, slope_;
};

bool usable_slope(double y, double sign) {
  return std::isfinite(y) && y * sign > 0.0 && std::abs(y) >= kMinSlope;
}

}  // namespace

AutonomousSolution integrate_autonomous(FunctionRef y, double f0, Interval u_range, double step) {
  if (!y) throw SpecError("integrate_autonomous needs a right-hand side");
  const std::vector<double> nodes = step_nodes(u_range, step);

  double y0 = 0.0;
  try {
    y0 = jet_eval(*y, f0).value;
  } catch (const DomainError& e) {
    throw ProfileInvariantError(std::string("y is undefined at f0: ") + e.what());
  }
  if (!(std::abs(y0) >= kMinSlope) || !std::isfinite(y0))
    throw ProfileInvariantError("y(f0) = " + format_real(y0) + ": f' would vanish");
  if (!(f0 >= kPositivityFloor)) throw ProfileInvariantError("f0 must be positive");
  const double sign = y0 > 0.0 ? 1.0 : -1.0;

  AutonomousSolution sol;
  std::vector<double> slope;
  sol.u.push_back(nodes.front());
  sol.f.push_back(f0);
  slope.push_back(y0);

  const auto rhs = [&](const std::array<double, 1>& s) {
    return std::array<double, 1>{jet_eval(*y, s[0]).value};
  };

  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double h = nodes[i] - nodes[i - 1];
    double next = 0.0, ynext = 0.0;
    try {
      next = rk4_step<1>(rhs, {sol.f.back()}, h)[0];
      if (!(next >= kPositivityFloor) || !std::isfinite(next)) {
        sol.truncated = true;
        sol.reason = "f would stop being positive";
        break;
      }
      ynext = jet_eval(*y, next).value;
    } catch (const DomainError& e) {
      sol.truncated = true;
      sol.reason = std::string("y leaves its domain: ") + e.what();
      break;
    }
    if (!usable_slope(ynext, sign)) {
      sol.truncated = true;
      sol.reason = "y approaches zero: f' would vanish";
      break;
    }
    sol.u.push_back(nodes[i]);
    sol.f.push_back(next);
    slope.push_back(ynext);
  }
  if (sol.u.size() < 2)
    throw ProfileInvariantError("integration could not take a single step: " + sol.reason);

  sol.realized = {sol.u.front(), sol.u.back()};
  sol.profile = std::make_shared<AutonomousProfile>(std::move(y), sol.u, sol.f, slope);
  return sol;
}

namespace {

// phi'' from the constant-curvature equation, in jet arithmetic so that its
// first derivative (phi''') comes out of the same evaluation.
ScalarJet directrix_rhs(double b, const ScalarJet& phi, const ScalarJet& dphi) {
  const ScalarJet speed2 = dphi * dphi + phi * phi;
  return (b * pow(speed2, 1.5) + 2.0 * dphi * dphi + phi * phi) / phi;
}

class DirectrixIvp final : public JetFunction {
 public:
  DirectrixIvp(double b, std::vector<double> v, std::vector<double> phi, std::vector<double> dphi,
               std::vector<double> ddphi)
      : b_(b), v_(std::move(v)), phi_(std::move(phi)), dphi_(std::move(dphi)), ddphi_(std::move(ddphi)) {}

  ScalarJet jet(double t) const override {
    const double span = v_.back() - v_.front();
    const double slack = 1e-12 * std::max(1.0, span);
    if (!(t >= v_.front() - slack && t <= v_.back() + slack))
      throw DomainError("outside the integrated range of the directrix", t);
    const ScalarJet q = hermite5(v_, phi_, dphi_, ddphi_, t);
    const ScalarJet r = directrix_rhs(b_, ScalarJet{q.value, q.d1, 0.0, 0.0},
                                      ScalarJet{q.d1, q.d2, 0.0, 0.0});
    return {q.value, q.d1, r.value, r.d1};
  }

  std::string describe() const override {
    return "ivp[kappa = " + format_real(b_) + "]";
  }

 private:
  double b_;
  std::vector<double> v_, phi_, dphi_, ddphi_;
};

}  // namespace

DirectrixSolution constant_kappa_directrix(double b, Interval v_range, double step) {
  if (b == 0.0 || !std::isfinite(b)) throw SpecError("directrix curvature b must be nonzero");
  if (b < 0.0) {
    const double p = -1.0 / b;
    auto phi = std::make_shared<LambdaFunction>(
        [p](const ScalarJet&) { return ScalarJet::constant(p); }, format_real(p));
    return {Directrix(phi, v_range), v_range, false, {}};
  }

  if (!(step > 0.0)) throw SpecError("integration step must be positive");
  if (!(v_range.hi > v_range.lo)) throw SpecError("directrix range must satisfy lo < hi");
  const auto rhs = [b](const std::array<double, 2>& s) {
    const double dd = directrix_rhs(b, ScalarJet::constant(s[0]), ScalarJet::constant(s[1])).value;
    return std::array<double, 2>{s[1], dd};
  };

  std::vector<double> v{v_range.lo}, phi{1.0}, dphi{0.0};
  std::vector<double> ddphi{rhs({1.0, 0.0})[1]};
  bool truncated = false;
  std::string reason;
  while (v.back() < v_range.hi) {
    const double p = phi.back(), dp = dphi.back();
    const double flatness = p * p / (p * p + dp * dp);
    double h = step * flatness;
    const double at = v.back() + h >= v_range.hi - 1e-12 * step ? v_range.hi : v.back() + h;
    h = at - v.back();
    const auto next = rk4_step<2>(rhs, {p, dp}, h);
    const double speed2 = next[0] * next[0] + next[1] * next[1];
    if (!std::isfinite(next[0]) || !std::isfinite(next[1]) || !(next[0] > 0.0) ||
        !(speed2 >= kDegenerateSpeed2) || std::abs(next[1]) > kDirectrixSlopeCap) {
      truncated = true;
      reason = "directrix approaches a vertical tangent (|phi'| > " +
               format_real(kDirectrixSlopeCap) + ")";
      break;
    }
    v.push_back(at);
    phi.push_back(next[0]);
    dphi.push_back(next[1]);
    ddphi.push_back(rhs(next)[1]);
  }
  if (v.size() < 2) throw SpecError("constant-curvature directrix could not take a single step");
  const Interval realized{v.front(), v.back()};
  auto fn = std::make_shared<DirectrixIvp>(b, std::move(v), std::move(phi), std::move(dphi),
                                           std::move(ddphi));
  return {Directrix(std::move(fn), realized), realized, truncated, std::move(reason)};
}

}  // namespace meridian
