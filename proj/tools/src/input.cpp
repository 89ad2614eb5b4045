#include <charconv>
#include <cmath>
#include <sstream>

#include "meridian/expression.hpp"
#include "meridian/format.hpp"
#include "meridian/harness.hpp"
#include "meridian/ode.hpp"

namespace meridian::harness {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  std::string_view sv = text;
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  double x = 0.0;
  const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), x);
  if (sv.empty() || res.ec != std::errc() || res.ptr != sv.data() + sv.size() || !std::isfinite(x))
    throw SpecError("invalid number '" + std::string(text) + "' in " + std::string(what));
  return x;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.emplace_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3)
    throw SpecError("invalid range '" + std::string(text) + "' (expected start:end[:step])");
  Range r;
  r.lo = parse_real(parts[0], "range");
  r.hi = parse_real(parts[1], "range");
  if (!(r.hi > r.lo)) throw SpecError("range '" + std::string(text) + "' must satisfy start < end");
  if (parts.size() == 3) {
    r.step = parse_real(parts[2], "range");
    if (!(*r.step > 0.0)) throw SpecError("range step in '" + std::string(text) + "' must be positive");
  }
  return r;
}

GridSize parse_grid(std::string_view text) {
  const auto parts = split(text, 'x');
  const auto count = [&](const std::string& s) {
    std::size_t n = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || n < 1)
      throw SpecError("invalid grid '" + std::string(text) + "' (expected <nu>x<nv>)");
    return n;
  };
  if (parts.size() != 2) throw SpecError("invalid grid '" + std::string(text) + "' (expected <nu>x<nv>)");
  return {count(parts[0]), count(parts[1])};
}

std::vector<double> sample_points(const Range& r, std::optional<std::size_t> n) {
  std::vector<double> out;
  if (n) {
    if (*n == 1) return {r.lo};
    for (std::size_t i = 0; i < *n; ++i)
      out.push_back(i + 1 == *n ? r.hi : r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(*n - 1));
    return out;
  }
  const double step = r.step.value_or((r.hi - r.lo) / 10.0);
  const double slack = 1e-9 * step;
  for (std::size_t i = 0;; ++i) {
    const double t = r.lo + static_cast<double>(i) * step;
    if (t > r.hi + slack) break;
    out.push_back(std::min(t, r.hi));
  }
  if (out.back() < r.hi - slack) out.push_back(r.hi);
  return out;
}

SurfaceInput parse_surface_input(std::string_view text) {
  std::vector<std::string> toks = tokens(text);
  if (toks.empty()) throw SpecError("empty spec");
  SurfaceInput in;
  if (toks.front() == "surface") {
    bool have_f = false, have_phi = false, have_g0 = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      const auto eq = t.find('=');
      const std::string key = eq == std::string::npos ? t : t.substr(0, eq);
      const std::string value = eq == std::string::npos ? "" : t.substr(eq + 1);
      bool* seen = key == "f" ? &have_f : key == "phi" ? &have_phi : key == "g0" ? &have_g0 : nullptr;
      if (!seen || eq == std::string::npos) throw SpecError("unexpected token '" + t + "' in surface spec");
      if (*seen) throw SpecError("key '" + key + "' given twice");
      *seen = true;
      if (key == "f") in.f = value;
      if (key == "phi") in.phi = value;
      if (key == "g0") in.g0 = parse_real(value, "g0");
    }
    if (!have_f) throw SpecError("surface needs key 'f'");
    if (!have_phi) throw SpecError("surface needs key 'phi'");
    // Fail early on bad expressions.
    Expression::parse(in.f);
    Expression::parse(in.phi);
    in.text = "surface f=" + in.f + " phi=" + in.phi + " g0=" + format_real(in.g0);
    return in;
  }

  std::string rest;
  for (const std::string& t : toks) {
    if (t.rfind("phi=", 0) == 0) {
      if (in.phi_override) throw SpecError("key 'phi' given twice");
      in.phi_override = t.substr(4);
      Expression::parse(*in.phi_override);
      continue;
    }
    rest += t + " ";
  }
  in.family = parse_family_spec(rest);
  in.text = to_text(*in.family);
  if (in.phi_override) in.text += " phi=" + *in.phi_override;
  return in;
}

BuiltSurface build_surface(const SurfaceInput& in, Interval u_range, Interval v_range, double f0) {
  if (!in.family) {
    return {MeridianSurface(ProfileCurve(Expression::parse(in.f), u_range, in.g0),
                            Directrix(Expression::parse(in.phi), v_range)),
            std::nullopt};
  }
  const double b = required_kappa(*in.family);
  std::optional<Directrix> directrix;
  if (in.phi_override)
    directrix.emplace(Expression::parse(*in.phi_override), v_range);
  else if (std::isnan(b))
    directrix.emplace(Expression::parse("1"), v_range);
  else
    directrix.emplace(constant_kappa_directrix(b, v_range).directrix);
  GeneratedSurface g = generate(*in.family, f0, u_range, *directrix);
  MeridianSurface s = g.surface;
  return {std::move(s), std::move(g)};
}

}  // namespace meridian::harness
