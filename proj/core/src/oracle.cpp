#include "meridian/oracle.hpp"

#include <cmath>
#include <functional>

namespace meridian {

namespace {

using Field = std::function<Vec4(double, double)>;

void require_neighbourhood(const MeridianSurface& s, double u, double v, double h) {
  if (!(h > 0.0)) throw DomainError("oracle step must be positive", h);
  const Interval du = s.domain_u(), dv = s.domain_v();
  if (u - 2.0 * h < du.lo || u + 2.0 * h > du.hi)
    throw DomainError("oracle step too large: u neighbourhood leaves the domain", u);
  if (v - 2.0 * h < dv.lo || v + 2.0 * h > dv.hi)
    throw DomainError("oracle step too large: v neighbourhood leaves the domain", v);
}

struct Partials {
  Vec4 du;
  Vec4 dv;
};

Partials central(const Field& w, double u, double v, double h) {
  return {(w(u + h, v) - w(u - h, v)) / (2.0 * h), (w(u, v + h) - w(u, v - h)) / (2.0 * h)};
}

// Parameter-space representation of tangent vectors through the
// numerically differentiated embedding.
class Directions {
 public:
  Directions(const MeridianSurface& s, double u, double v, double h) {
    const Partials z = central([&s](double a, double b) { return embed(s, a, b); }, u, v, h);
    zu_ = z.du;
    zv_ = z.dv;
    e_ = minkowski_dot(zu_, zu_);
    f_ = minkowski_dot(zu_, zv_);
    g_ = minkowski_dot(zv_, zv_);
  }

  // D_t W = a dW/du + c dW/dv with t = a z_u + c z_v.
  Vec4 derivative(const Vec4& t, const Partials& w) const {
    const double ru = minkowski_dot(t, zu_);
    const double rv = minkowski_dot(t, zv_);
    const double det = e_ * g_ - f_ * f_;
    const double a = (g_ * ru - f_ * rv) / det;
    const double c = (e_ * rv - f_ * ru) / det;
    return a * w.du + c * w.dv;
  }

 private:
  Vec4 zu_, zv_;
  double e_ = 0.0, f_ = 0.0, g_ = 0.0;
};

struct GeometricFields {
  Vec4 x, y, b, l;
  int epsilon = 1;
};

GeometricFields geometric_fields(const MeridianSurface& s, double u, double v, double tol) {
  const TangentFrame t = tangent_frame(s, u, v);
  const NormalFrame n = normal_frame(s, u, v, tol);
  return {t.xdir, t.ydir, n.b, n.l, n.epsilon};
}

struct OracleCore {
  GeometricFields at;
  Vec4 dxx, dyy, dxy, dxb, dyb;
};

template <typename Sample>
struct Stencil {
  Sample up, um, vp, vm;

  template <typename Eval>
  Stencil(Eval&& eval, double u, double v, double h)
      : up(eval(u + h, v)), um(eval(u - h, v)), vp(eval(u, v + h)), vm(eval(u, v - h)), h_(h) {}

  Partials partials(Vec4 Sample::*member) const {
    return {(up.*member - um.*member) / (2.0 * h_), (vp.*member - vm.*member) / (2.0 * h_)};
  }

 private:
  double h_;
};

OracleCore oracle_core(const MeridianSurface& s, double u, double v, double h, double tol) {
  require_neighbourhood(s, u, v, h);
  const Directions dir(s, u, v, h);
  const Stencil<GeometricFields> st(
      [&](double a, double b) { return geometric_fields(s, a, b, tol); }, u, v, h);
  OracleCore c;
  c.at = geometric_fields(s, u, v, tol);
  const Partials px = st.partials(&GeometricFields::x);
  const Partials py = st.partials(&GeometricFields::y);
  const Partials pb = st.partials(&GeometricFields::b);
  c.dxx = dir.derivative(c.at.x, px);
  c.dyy = dir.derivative(c.at.y, py);
  c.dxy = dir.derivative(c.at.x, py);
  c.dxb = dir.derivative(c.at.x, pb);
  c.dyb = dir.derivative(c.at.y, pb);
  return c;
}

// Normal component of w w.r.t. {b, l}: <b, b> = eps, <l, l> = -eps.
Vec4 normal_part(const Vec4& w, const GeometricFields& g) {
  const double eps = g.epsilon;
  return eps * minkowski_dot(w, g.b) * g.b - eps * minkowski_dot(w, g.l) * g.l;
}

FrameComponents components(const Vec4& w, const TangentFrame& t, const NormalPair& n) {
  return {minkowski_dot(w, t.X), minkowski_dot(w, t.Y), minkowski_dot(w, n.n1),
          minkowski_dot(w, n.n2)};
}

}  // namespace

InvariantRecord oracle_invariants(const MeridianSurface& s, double u, double v, double h,
                                  double tol) {
  const OracleCore c = oracle_core(s, u, v, h, tol);
  const GeometricFields& g = c.at;
  InvariantRecord r;
  r.epsilon = g.epsilon;
  r.nu1 = minkowski_dot(c.dxx, g.b);
  r.nu2 = minkowski_dot(c.dyy, g.b);
  r.lambda = minkowski_dot(c.dxy, g.b);
  r.mu = minkowski_dot(c.dxy, g.l);
  r.gamma1 = minkowski_dot(c.dxx, g.y);
  r.gamma2 = minkowski_dot(c.dyy, g.x);
  r.beta1 = minkowski_dot(c.dxb, g.l);
  r.beta2 = minkowski_dot(c.dyb, g.l);

  const Vec4 sxx = normal_part(c.dxx, g);
  const Vec4 syy = normal_part(c.dyy, g);
  const Vec4 sxy = normal_part(c.dxy, g);
  r.K = minkowski_dot(sxx, syy) - minkowski_dot(sxy, sxy);
  r.k = -4.0 * r.nu1 * r.nu2 * r.mu * r.mu;
  r.varkappa = (r.nu1 - r.nu2) * r.mu;

  const Vec4 H = 0.5 * (sxx + syy);
  const NormalPair n = normal_pair(s, u, v);
  r.H_n1 = minkowski_dot(H, n.n1);
  r.H_n2 = -minkowski_dot(H, n.n2);
  const double hh = minkowski_dot(H, H);
  r.H_norm = std::sqrt(std::abs(hh));
  return r;
}

OracleMeanCurvature oracle_mean_curvature(const MeridianSurface& s, double u, double v, double h,
                                          double tol) {
  const OracleCore c = oracle_core(s, u, v, h, tol);
  const GeometricFields& g = c.at;
  const Vec4 mean = 0.5 * (c.dxx + c.dyy);
  OracleMeanCurvature m;
  m.along_b = g.epsilon * minkowski_dot(mean, g.b);
  m.along_l = -g.epsilon * minkowski_dot(mean, g.l);
  m.H = m.along_b * g.b + m.along_l * g.l;
  return m;
}

FrameDerivatives oracle_second_fundamental(const MeridianSurface& s, double u, double v,
                                           double h) {
  require_neighbourhood(s, u, v, h);
  const Directions dir(s, u, v, h);
  const TangentFrame t = tangent_frame(s, u, v);
  const NormalPair n = normal_pair(s, u, v);

  struct Basis {
    Vec4 X, Y, n1, n2;
  };
  const Stencil<Basis> st(
      [&](double a, double b) {
        const TangentFrame tf = tangent_frame(s, a, b);
        const NormalPair np = normal_pair(s, a, b);
        return Basis{tf.X, tf.Y, np.n1, np.n2};
      },
      u, v, h);
  const Partials pX = st.partials(&Basis::X);
  const Partials pY = st.partials(&Basis::Y);
  const Partials pn1 = st.partials(&Basis::n1);
  const Partials pn2 = st.partials(&Basis::n2);

  FrameDerivatives d;
  d.XX = components(dir.derivative(t.X, pX), t, n);
  d.XY = components(dir.derivative(t.X, pY), t, n);
  d.YX = components(dir.derivative(t.Y, pX), t, n);
  d.YY = components(dir.derivative(t.Y, pY), t, n);
  d.Xn1 = components(dir.derivative(t.X, pn1), t, n);
  d.Yn1 = components(dir.derivative(t.Y, pn1), t, n);
  d.Xn2 = components(dir.derivative(t.X, pn2), t, n);
  d.Yn2 = components(dir.derivative(t.Y, pn2), t, n);
  return d;
}

}  // namespace meridian
