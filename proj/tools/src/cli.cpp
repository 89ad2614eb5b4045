#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "meridian/format.hpp"
#include "meridian/harness.hpp"
#include "meridian/invariants.hpp"
#include "meridian/profile.hpp"

namespace meridian::harness {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kDefaultV = "0:6.283185307179586";

struct Options {
  std::string spec;
  double f0 = 1.0;
  std::string u, v = kDefaultV;
  std::string grid;
  std::string fields;
  double tol = 1e-6;
  double oracle_step = 1e-4;
  std::string out;
  std::string format;
  std::string projection = "none";
};

Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json range_json(Interval r) { return Json::array({real(r.lo), real(r.hi)}); }

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw SpecError("cannot open '" + path + "' for writing");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* os_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw SpecError("cannot open '" + path + "' for writing");
  f << text;
}

std::string csv_cell(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw SpecError("unsupported --format '" + format + "'");
}

struct Prepared {
  SurfaceInput input;
  BuiltSurface built;
};

Prepared prepare(const Options& o) {
  SurfaceInput in = parse_surface_input(o.spec);
  if (o.u.empty()) throw SpecError("--u is required");
  const Range u = parse_range(o.u), v = parse_range(o.v);
  BuiltSurface b = build_surface(in, {u.lo, u.hi}, {v.lo, v.hi}, o.f0);
  return {std::move(in), std::move(b)};
}

// Sample points over the surface's (possibly realized) domain, keeping the
// requested step.
std::pair<std::vector<double>, std::vector<double>> grid_points(const Options& o, const MeridianSurface& s) {
  const Range ru = parse_range(o.u), rv = parse_range(o.v);
  std::optional<std::size_t> nu, nv;
  if (!o.grid.empty()) {
    const GridSize g = parse_grid(o.grid);
    nu = g.nu;
    nv = g.nv;
  } else {
    if (!ru.step) nu = 10;
    if (!rv.step) nv = 10;
  }
  const Interval du = s.domain_u(), dv = s.domain_v();
  return {sample_points({du.lo, du.hi, ru.step}, nu), sample_points({dv.lo, dv.hi, rv.step}, nv)};
}

Json spec_echo(const Prepared& p, const Options& o) {
  Json j;
  j["spec"] = p.input.text;
  j["f0"] = real(o.f0);
  j["realized_range"] = {{"u", range_json(p.built.surface.domain_u())},
                         {"v", range_json(p.built.surface.domain_v())}};
  if (p.built.generated) {
    const GeneratedSurface& g = *p.built.generated;
    j["requested_range"] = range_json(g.requested);
    j["truncated"] = g.truncated;
    j["reason"] = g.reason;
    j["source"] = to_string(g.source);
    j["step"] = real(g.step);
    j["error_estimate"] = real(g.error_estimate);
  }
  return j;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"csv", "json"});
  const Prepared p = prepare(o);
  if (!p.input.family) throw SpecError("family needs a family spec, not a surface");
  const GeneratedSurface& g = *p.built.generated;
  const ProfileCurve& profile = g.surface.profile();

  const Range ru = parse_range(o.u);
  std::vector<double> us;
  for (double u : sample_points(ru, ru.step ? std::nullopt : std::optional<std::size_t>(11)))
    if (g.realized.contains(u)) us.push_back(std::clamp(u, g.realized.lo, g.realized.hi));

  Json echo = spec_echo(p, o);
  if (format == "csv") {
    Sink sink(o.out, out);
    sink.os() << "u,f,f',f'',g\n";
    for (double u : us) {
      const ScalarJet f = profile.f_jet(u);
      sink.os() << format_real(u) << ',' << format_real(f.value) << ',' << format_real(f.d1) << ','
                << format_real(f.d2) << ',' << format_real(g_from_f(profile, u)) << '\n';
    }
    if (!o.out.empty()) {
      std::filesystem::path side(o.out);
      side.replace_extension(side.extension() == ".json" ? ".spec.json" : ".json");
      write_file(side.string(), echo.dump(2) + "\n");
    }
  } else {
    Json cols = {{"u", Json::array()}, {"f", Json::array()}, {"f'", Json::array()},
                 {"f''", Json::array()}, {"g", Json::array()}};
    for (double u : us) {
      const ScalarJet f = profile.f_jet(u);
      cols["u"].push_back(real(u));
      cols["f"].push_back(real(f.value));
      cols["f'"].push_back(real(f.d1));
      cols["f''"].push_back(real(f.d2));
      cols["g"].push_back(real(g_from_f(profile, u)));
    }
    echo["fields"] = cols;
    Sink(o.out, out).os() << echo.dump(2) << '\n';
  }
  if (g.truncated) {
    err << "truncated: realized u-range [" << format_real(g.realized.lo) << ", "
        << format_real(g.realized.hi) << "]: " << g.reason << '\n';
    return kTruncated;
  }
  return kOk;
}

constexpr const char* kInvariantColumns[] = {"gamma1", "gamma2", "nu1", "nu2", "lambda", "mu",
                                             "beta1", "beta2", "K", "k", "varkappa", "H_norm",
                                             "epsilon"};

// Values of kInvariantColumns at a General point; empty elsewhere.
std::vector<std::optional<double>> invariant_row(const MeridianSurface& s, double u, double v,
                                                 PointCase& c) {
  c = classify_point(s, u, v);
  if (c != PointCase::General) return std::vector<std::optional<double>>(std::size(kInvariantColumns));
  const InvariantRecord r = eight_invariants(s, u, v);
  return {r.gamma1, r.gamma2, r.nu1, r.nu2, r.lambda, r.mu, r.beta1, r.beta2,
          r.K,      r.k,      r.varkappa, r.H_norm, static_cast<double>(r.epsilon)};
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"csv", "json"});
  const Prepared p = prepare(o);
  const MeridianSurface& s = p.built.surface;
  const auto [us, vs] = grid_points(o, s);
  Sink sink(o.out, out);
  if (format == "csv") {
    sink.os() << "u,v";
    for (const char* c : kInvariantColumns) sink.os() << ',' << c;
    sink.os() << ",case\n";
    for (double u : us)
      for (double v : vs) {
        PointCase c;
        const auto row = invariant_row(s, u, v, c);
        sink.os() << format_real(u) << ',' << format_real(v);
        for (const auto& x : row) sink.os() << ',' << csv_cell(x);
        sink.os() << ',' << to_string(c) << '\n';
      }
    return kOk;
  }
  Json j = spec_echo(p, o);
  j["grid"] = {{"nu", us.size()}, {"nv", vs.size()}, {"u", us}, {"v", vs}};
  Json fields = Json::object();
  for (const char* c : kInvariantColumns) fields[c] = Json::array();
  fields["case"] = Json::array();
  for (double u : us)
    for (double v : vs) {
      PointCase c;
      const auto row = invariant_row(s, u, v, c);
      for (std::size_t i = 0; i < row.size(); ++i)
        fields[kInvariantColumns[i]].push_back(row[i] ? real(*row[i]) : Json(nullptr));
      fields["case"].push_back(std::string(to_string(c)));
    }
  j["fields"] = fields;
  sink.os() << j.dump(2) << '\n';
  return kOk;
}

// Cell centres keep every point a full oracle stencil away from the edges.
std::vector<double> cell_centres(Interval r, std::size_t n) {
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(r.lo + r.length() * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
  return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const Prepared p = prepare(o);
  const MeridianSurface& s = p.built.surface;
  std::vector<double> us, vs;
  const Range ru = parse_range(o.u), rv = parse_range(o.v);
  if (o.grid.empty() && ru.step && rv.step) {
    std::tie(us, vs) = grid_points(o, s);
  } else {
    const GridSize g = o.grid.empty() ? GridSize{8, 8} : parse_grid(o.grid);
    us = cell_centres(s.domain_u(), g.nu);
    vs = cell_centres(s.domain_v(), g.nv);
  }
  VerifyOptions vo;
  vo.tol = o.tol;
  vo.oracle_step = o.oracle_step;
  const VerificationReport rep = verify_surface(p.built, p.input.family, us, vs, vo);

  Json j = spec_echo(p, o);
  j["grid"] = {{"nu", us.size()}, {"nv", vs.size()}};
  Json checks = Json::array();
  for (const CheckRecord& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"points", c.points},
                      {"max_abs_error", real(c.max_abs_error)},
                      {"tolerance", real(c.tolerance)},
                      {"pass", c.pass},
                      {"worst", {{"u", real(c.worst_u)}, {"v", real(c.worst_v)}}},
                      {"note", c.note}});
  j["checks"] = checks;
  j["discrepancies"] = rep.discrepancies;
  j["pass"] = rep.pass();

  if (format == "json") {
    Sink(o.out, out).os() << j.dump(2) << '\n';
  } else {
    if (!o.out.empty()) write_file(o.out, j.dump(2) + "\n");
    out << "spec: " << p.input.text << '\n';
    for (const CheckRecord& c : rep.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": max " << format_real(c.max_abs_error)
          << " (tol " << format_real(c.tolerance) << ", " << c.points << " points";
      if (c.points) out << ", worst at u=" << format_real(c.worst_u) << " v=" << format_real(c.worst_v);
      out << ')';
      if (!c.note.empty()) out << " [" << c.note << ']';
      out << '\n';
    }
    for (const std::string& d : rep.discrepancies) out << "note: " << d << '\n';
    out << (rep.pass() ? "overall: PASS" : "overall: FAIL") << '\n';
  }
  return rep.pass() ? kOk : kVerifyFailed;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "csv"});
  if (o.projection != "none" && o.projection != "drop-e4")
    throw SpecError("unknown projection '" + o.projection + "' (expected none or drop-e4)");
  const Prepared p = prepare(o);
  const auto [us, vs] = grid_points(o, p.built.surface);
  std::vector<std::string> names;
  if (!o.fields.empty()) {
    std::stringstream in(o.fields);
    for (std::string f; std::getline(in, f, ',');)
      if (!f.empty()) names.push_back(f);
  }
  const SurfaceMesh m = build_mesh(p.built.surface, us, vs, names);
  const std::size_t dims = o.projection == "drop-e4" ? 3 : 4;
  Sink sink(o.out, out);

  if (format == "csv") {
    sink.os() << "u,v,x1,x2,x3";
    if (dims == 4) sink.os() << ",x4";
    for (const std::string& n : names) sink.os() << ',' << n;
    sink.os() << '\n';
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
      sink.os() << format_real(us[i / m.nv]) << ',' << format_real(vs[i % m.nv]);
      for (std::size_t k = 0; k < dims; ++k) sink.os() << ',' << format_real(m.vertices[i][k]);
      for (const auto& f : m.fields) sink.os() << ',' << csv_cell(f[i]);
      sink.os() << '\n';
    }
    return kOk;
  }
  Json j = spec_echo(p, o);
  j["grid"] = {{"nu", m.nu}, {"nv", m.nv}, {"u", us}, {"v", vs}};
  j["projection"] = o.projection;
  Json verts = Json::array();
  for (const Vec4& x : m.vertices) {
    Json row = Json::array();
    for (std::size_t k = 0; k < dims; ++k) row.push_back(real(x[k]));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  Json fields = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) {
    Json a = Json::array();
    for (const auto& x : m.fields[i]) a.push_back(x ? real(*x) : Json(nullptr));
    fields[names[i]] = a;
  }
  j["fields"] = fields;
  sink.os() << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meridian surfaces of parabolic type in Minkowski 4-space", "meridian"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&o](CLI::App* c) {
    c->add_option("--spec", o.spec, "family or surface spec")->required();
    c->add_option("--f0", o.f0, "initial value f(u0) for ODE families");
    c->add_option("--u", o.u, "u range start:end[:step]")->required();
    c->add_option("--v", o.v, "v range start:end[:step]");
    c->add_option("--out", o.out, "output path");
    c->add_option("--format", o.format, "output format");
  };
  CLI::App* family = app.add_subcommand("family", "generate a family profile");
  common(family);
  CLI::App* inv = app.add_subcommand("invariants", "tabulate invariants on a grid");
  common(inv);
  inv->add_option("--grid", o.grid, "<nu>x<nv>");
  CLI::App* verify = app.add_subcommand("verify", "check closed forms against the oracle");
  common(verify);
  verify->add_option("--grid", o.grid, "<nu>x<nv>");
  verify->add_option("--tol", o.tol, "oracle tolerance");
  verify->add_option("--oracle-step", o.oracle_step, "finite-difference step");
  CLI::App* mesh = app.add_subcommand("mesh", "export a surface mesh");
  common(mesh);
  mesh->add_option("--grid", o.grid, "<nu>x<nv>");
  mesh->add_option("--fields", o.fields, "comma list of K,H_norm,k,lambda,beta1,beta2");
  mesh->add_option("--projection", o.projection, "none or drop-e4");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  }

  try {
    if (*family) return cmd_family(o, out, err);
    if (*inv) return cmd_invariants(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_mesh(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  }
}

}  // namespace meridian::harness
