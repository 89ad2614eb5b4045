#pragma once

// Library behind the `meridian` command-line tool. Every command is a pure
// function of its options; `run` adds argument parsing and exit codes so
// tests can drive the tool in-process.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "meridian/families.hpp"
#include "meridian/surface.hpp"

namespace meridian::harness {

enum ExitCode : int { kOk = 0, kSpecError = 1, kTruncated = 2, kVerifyFailed = 3 };

// `start:end` or `start:end:step`.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> step;
};
Range parse_range(std::string_view text);

struct GridSize {
  std::size_t nu = 0;
  std::size_t nv = 0;
};
GridSize parse_grid(std::string_view text);  // "<nu>x<nv>"

// Inclusive sample points: n evenly spaced values, or every step from lo
// while <= hi (with hi appended when the last step falls short).
std::vector<double> sample_points(const Range& r, std::optional<std::size_t> n);

// What --spec describes. Either
//   surface f=<expr in u> phi=<expr in v> [g0=<real>]
// or a family spec (see parse_family_spec) with an optional trailing
// phi=<expr in v> that replaces the default directrix. Expressions must not
// contain spaces.
struct SurfaceInput {
  std::string text;  // canonical echo
  std::optional<FamilySpec> family;
  std::string f, phi;  // surface form only
  std::optional<std::string> phi_override;
  double g0 = 0.0;
};
SurfaceInput parse_surface_input(std::string_view text);

struct BuiltSurface {
  MeridianSurface surface;
  std::optional<GeneratedSurface> generated;
};

// For families without an explicit phi the directrix is phi = 1 when no
// curvature is required, otherwise constant_kappa_directrix(b, v_range).
// The u-range of the result is the realized range for families.
BuiltSurface build_surface(const SurfaceInput& in, Interval u_range, Interval v_range, double f0);

struct CheckRecord {
  std::string name;
  std::size_t points = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  double worst_u = 0.0, worst_v = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string spec;
  std::vector<CheckRecord> checks;
  // Observations that are not pass/fail checks, e.g. where the epsilon-free
  // form of mu disagrees in sign with the oracle.
  std::vector<std::string> discrepancies;
  bool pass() const;
};

struct VerifyOptions {
  double tol = 1e-6;
  double identity_tol = 1e-9;
  double oracle_step = 1e-4;
};

// Runs the oracle comparison, derivative formulas, identity suite, frame
// Gram check and, for family specs, the defining-property and residual
// checks at the points u x v. Non-General points are skipped.
VerificationReport verify_surface(const BuiltSurface& s, const std::optional<FamilySpec>& family,
                                  const std::vector<double>& u, const std::vector<double>& v,
                                  const VerifyOptions& options);

inline constexpr const char* kMeshFieldNames[] = {"K", "H_norm", "k", "lambda", "beta1", "beta2"};

struct SurfaceMesh {
  std::size_t nu = 0, nv = 0;
  std::vector<Vec4> vertices;  // ordered by (u index, v index)
  std::vector<std::string> field_names;
  std::vector<std::vector<std::optional<double>>> fields;  // one per name, nu*nv entries
};
SurfaceMesh build_mesh(const MeridianSurface& s, const std::vector<double>& u,
                       const std::vector<double>& v, const std::vector<std::string>& fields);

// Argument vector excludes the program name. Output files go where --out
// says; everything else goes to out / err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meridian::harness
