#include "meridian/quadrature.hpp"

#include <cmath>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  std::size_t max_intervals;
  std::size_t intervals = 0;

  double recurse(double a, double b, double fa, double fm, double fb, double whole,
                 double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= 64 || !(lm > a && rm < b)) {
      if (++intervals > max_intervals)
        throw QuadratureError("adaptive Simpson exceeded its subdivision cap");
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tolerance, std::size_t max_intervals) {
  if (a == b) return {0.0, 0};
  Simpson s{f, max_intervals};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = s.recurse(a, b, fa, fm, fb, whole, tolerance, 0);
  if (!std::isfinite(value)) throw QuadratureError("adaptive Simpson produced a non-finite value");
  return {value, s.intervals};
}

}  // namespace meridian
