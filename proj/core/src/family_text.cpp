#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "meridian/families.hpp"
#include "meridian/format.hpp"

namespace meridian {

namespace {

std::string sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }
std::string unit_text(Sign s) { return s == Sign::Plus ? "+1" : "-1"; }

struct Fields {
  std::string kind;
  std::map<std::string, std::string> values;
  std::vector<std::string> order;
};

Fields split(std::string_view text) {
  std::istringstream in{std::string(text)};
  Fields out;
  if (!(in >> out.kind)) throw SpecError("empty family spec");
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw SpecError("expected key=value, got '" + token + "'");
    std::string key = token.substr(0, eq);
    if (out.values.count(key)) throw SpecError("key '" + key + "' given twice");
    out.values[key] = token.substr(eq + 1);
    out.order.push_back(std::move(key));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(Fields fields) : f_(std::move(fields)) {}

  double real(const std::string& key) {
    if (!present(key)) return std::numeric_limits<double>::quiet_NaN();
    const std::string& s = take(key);
    std::string_view sv = s;
    if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
    double x = 0.0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), x);
    if (sv.empty() || res.ec != std::errc() || res.ptr != sv.data() + sv.size() ||
        !std::isfinite(x))
      throw SpecError("invalid number '" + s + "' for key '" + key + "'");
    return x;
  }

  Sign sign(const std::string& key) {
    if (!present(key)) return Sign::Plus;
    const std::string& s = take(key);
    if (s == "+" || s == "+1" || s == "1") return Sign::Plus;
    if (s == "-" || s == "-1") return Sign::Minus;
    throw SpecError("invalid sign '" + s + "' for key '" + key + "' (expected + or -)");
  }

  void check_unknown() const {
    for (const std::string& k : f_.order)
      if (!used_.count(k)) throw SpecError("unknown key '" + k + "' for " + f_.kind);
  }

  // Missing keys are read as NaN (reals) or + (signs) so that a bad value
  // given for another key is still reported by validate(). A NaN can only
  // come from a missing key, so a "must be finite" failure means "missing".
  void finish(const FamilySpec& spec) const {
    check_unknown();
    try {
      validate(spec);
    } catch (const SpecError& e) {
      if (missing_.empty() || std::string_view(e.what()).find("must be finite") == std::string_view::npos)
        throw;
    }
    if (!missing_.empty()) throw SpecError(f_.kind + " needs key '" + missing_.front() + "'");
  }

 private:
  bool present(const std::string& key) {
    if (f_.values.count(key)) return true;
    missing_.push_back(key);
    return false;
  }

  const std::string& take(const std::string& key) {
    used_[key] = true;
    return f_.values.at(key);
  }

  Fields f_;
  std::map<std::string, bool> used_;
  std::vector<std::string> missing_;
};

}  // namespace

std::string to_text(const FamilySpec& spec) {
  const auto r = [](double x) { return format_real(x); };
  const std::string head = family_name(spec) + " ";
  if (const auto* s = std::get_if<ConstantGauss>(&spec))
    return head + "K=" + r(s->K) + " alpha=" + r(s->alpha) + " beta=" + r(s->beta);
  if (const auto* s = std::get_if<ConstantMean>(&spec))
    return head + "a=" + r(s->a) + " b=" + r(s->b) + " C=" + r(s->C) +
           " epsilon=" + unit_text(s->epsilon) + " branch=" + sign_text(s->branch);
  if (const auto* s = std::get_if<ConstantK>(&spec))
    return head + "a=" + r(s->a) + " b=" + r(s->b) + " c=" + r(s->c) +
           " branch=" + sign_text(s->branch);
  if (const auto* s = std::get_if<Chen>(&spec))
    return head + "b=" + r(s->b) + " c=" + r(s->c) + " exponent=" + unit_text(s->exponent);
  if (const auto* s = std::get_if<ParallelA>(&spec))
    return head + "c=" + r(s->c) + " d=" + r(s->d) + " a=" + r(s->a) +
           " sign=" + sign_text(s->sign);
  const auto& s = std::get<ParallelB>(spec);
  return head + "a=" + r(s.a) + " c=" + r(s.c) + " b=" + r(s.b);
}

FamilySpec parse_family_spec(std::string_view text) {
  Fields fields = split(text);
  const std::string kind = fields.kind;
  Reader in(std::move(fields));
  FamilySpec spec;
  if (kind == "constant-gauss") {
    ConstantGauss s;
    s.K = in.real("K");
    s.alpha = in.real("alpha");
    s.beta = in.real("beta");
    spec = s;
  } else if (kind == "constant-mean") {
    ConstantMean s;
    s.a = in.real("a");
    s.b = in.real("b");
    s.C = in.real("C");
    s.epsilon = in.sign("epsilon");
    s.branch = in.sign("branch");
    spec = s;
  } else if (kind == "constant-k") {
    ConstantK s;
    s.a = in.real("a");
    s.b = in.real("b");
    s.c = in.real("c");
    s.branch = in.sign("branch");
    spec = s;
  } else if (kind == "chen") {
    Chen s;
    s.b = in.real("b");
    s.c = in.real("c");
    s.exponent = in.sign("exponent");
    spec = s;
  } else if (kind == "parallel-a") {
    ParallelA s;
    s.c = in.real("c");
    s.d = in.real("d");
    s.a = in.real("a");
    s.sign = in.sign("sign");
    spec = s;
  } else if (kind == "parallel-b") {
    ParallelB s;
    s.a = in.real("a");
    s.c = in.real("c");
    s.b = in.real("b");
    spec = s;
  } else {
    throw SpecError("unknown family '" + kind + "'");
  }
  in.finish(spec);
  return spec;
}

}  // namespace meridian
