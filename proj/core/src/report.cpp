#include "kbound/report.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"

#include <json.hpp>

#include <sstream>

namespace kbound {

namespace {

using Json = nlohmann::ordered_json;

std::string direction_name(Direction d) { return d == Direction::Maximize ? "max" : "min"; }

// The isolating interval, widened to contain the decimal approximation when
// it falls just outside.
IsolInterval reported_interval(const AlgebraicNumber& a, const std::string& approx) {
  Rational t = parse_decimal(approx);
  IsolInterval iv = a.interval;
  if (a.rational_value && iv.is_degenerate() && t == iv.lo) return iv;
  iv.lo = std::min(iv.lo, t);
  iv.hi = std::max(iv.hi, t);
  return iv;
}

Rational original_value(const OptimizationResult& r, const Rational& v) { return r.negated ? Rational(-v) : v; }

// Original coordinates of a witness found over the squared variables.
std::vector<std::pair<std::string, Rational>> original_witness(const OptimizationResult& r,
                                                               const std::map<std::string, Rational>& w) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& [name, value] : w) {
    auto it = std::find_if(r.squared.begin(), r.squared.end(), [&](const auto& m) { return m.second == name; });
    if (it == r.squared.end()) {
      out.emplace_back(name, value);
    } else {
      out.emplace_back(it->first, value * value);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json value_json(const AlgebraicNumber& a, int digits) {
  Json v;
  std::string approx = algnum_approx(a, digits);
  IsolInterval iv = reported_interval(a, approx);
  v["approx"] = approx;
  v["interval"] = Json::array({to_string(iv.lo), to_string(iv.hi)});
  v["defining_polynomial"] = to_string(a.defpoly);
  if (a.rational_value) v["exact_rational"] = to_string(*a.rational_value);
  return v;
}

Json trace_json(const OptimizationResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.trace.steps) {
    Json j;
    j["variable"] = s.variable;
    j["input_degree"] = s.input.degree(s.variable);
    j["input_total_degree"] = s.input.total_degree();
    j["resultant_total_degree"] = s.resultant.total_degree();
    Json degrees = Json::object();
    for (const auto& v : s.result.variables()) degrees[v] = s.result.degree(v);
    j["result_degrees"] = degrees;
    j["powerfree_degree_drop"] = s.resultant.total_degree() - s.result.total_degree();
    j["deflation"] = s.deflation;
    j["squarefree_retry"] = s.squarefree_retry;
    if (s.shear) j["shear"] = {{"variable", s.shear->first}, {"lambda", s.shear->second}};
    steps.push_back(j);
  }
  Json decisions = Json::array();
  for (const auto& d : r.decisions) {
    Json j;
    j["stage"] = d.stage;
    j["value"] = to_string(original_value(r, d.value));
    j["verdict"] = to_string(d.verdict.kind);
    if (d.verdict.witness) {
      Json w = Json::object();
      for (const auto& [name, value] : original_witness(r, *d.verdict.witness)) w[name] = to_string(value);
      j["witness"] = w;
    }
    if (d.verdict.reason) j["reason"] = *d.verdict.reason;
    decisions.push_back(j);
  }
  Json t;
  t["steps"] = steps;
  t["final_degree"] = r.trace.final.total_degree();
  t["decisions"] = decisions;
  return t;
}

std::string emit_json(const OptimizationResult& r, const ReportOptions& o) {
  Json j;
  j["status"] = to_string(r.status);
  j["parameter"] = r.param;
  j["direction"] = direction_name(r.direction);
  j["value"] = r.status == Status::Found ? value_json(*r.optimum, o.digits) : Json::object();
  j["method"] = r.method;
  if (r.monotonicity) j["monotonicity"] = to_string(r.monotonicity->kind);
  Json cand;
  cand["text"] = to_string(r.candidate_poly);
  cand["degree"] = r.candidate_poly.is_zero() ? 0 : r.candidate_poly.total_degree();
  cand["real_roots"] = r.candidates.size();
  j["candidate_polynomial"] = cand;
  Json ledger = Json::array();
  for (const auto& c : r.candidates) {
    Json e;
    e["interval"] = Json::array({to_string(c.root.interval.lo), to_string(c.root.interval.hi)});
    e["approx"] = algnum_approx(c.root, o.digits);
    if (c.root.rational_value) e["exact_rational"] = to_string(*c.root.rational_value);
    e["verdict"] = to_string(c.fate);
    e["reason"] = c.reason;
    ledger.push_back(e);
  }
  j["candidates"] = ledger;
  j["caveats"] = r.caveats;
  Json subs = Json::array();
  for (const auto& [orig, fresh] : r.squared) subs.push_back({{"variable", orig}, {"square_of", fresh}});
  j["substitutions"] = subs;
  if (o.trace) j["trace"] = trace_json(r);
  return j.dump(2) + "\n";
}

std::string interval_text(const IsolInterval& iv) {
  if (iv.is_degenerate()) return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
  return "(" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")";
}

std::string emit_text(const OptimizationResult& r, const ReportOptions& o) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n";
  if (r.status == Status::Found) {
    const AlgebraicNumber& a = *r.optimum;
    std::string approx = algnum_approx(a, o.digits);
    os << r.param << "_" << direction_name(r.direction) << " = " << approx << "\n";
    if (a.rational_value) os << "  exact: " << to_string(*a.rational_value) << "\n";
    os << "  interval: " << interval_text(reported_interval(a, approx)) << "\n";
    os << "  defining polynomial: " << to_string(a.defpoly) << "\n";
  }
  if (!r.method.empty()) os << "method: " << r.method << "\n";
  if (r.monotonicity) os << "monotonicity in " << r.param << ": " << to_string(r.monotonicity->kind) << "\n";
  if (!r.candidate_poly.is_zero()) {
    os << "candidate polynomial: degree " << r.candidate_poly.total_degree() << ", " << r.candidates.size()
       << " real roots\n";
  }
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    os << "  " << (i + 1) << ". " << interval_text(c.root.interval) << " ~ " << algnum_approx(c.root, o.digits) << "  "
       << to_string(c.fate) << ": " << c.reason << "\n";
  }
  if (r.caveats.empty()) {
    os << "caveats: none\n";
  } else {
    os << "caveats:\n";
    for (const auto& c : r.caveats) os << "  - " << c << "\n";
  }
  if (o.trace) os << render_trace(r);
  return os.str();
}

}  // namespace

Rational parse_decimal(const std::string& s) {
  std::string digits;
  bool neg = false;
  std::size_t frac = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (i == 0 && c == '-') {
      neg = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac;
    } else {
      throw UsageError("not a decimal number: " + s);
    }
  }
  if (digits.empty()) throw UsageError("not a decimal number: " + s);
  Rational q = make_rational(Integer(digits), pow(Integer(10), frac));
  return neg ? Rational(-q) : q;
}

std::string render_trace(const OptimizationResult& r) {
  std::ostringstream os;
  os << "trace:\n";
  for (const auto& s : r.trace.steps) {
    os << "  eliminate " << s.variable << ": input degree " << s.input.degree(s.variable) << " (total "
       << s.input.total_degree() << "), resultant total degree " << s.resultant.total_degree() << ", result";
    for (const auto& v : s.result.variables()) os << " " << v << "^" << s.result.degree(v);
    os << ", powerfree drop " << (s.resultant.total_degree() - s.result.total_degree());
    if (s.deflation > 1) os << ", deflation " << s.deflation;
    if (s.squarefree_retry) os << ", squarefree retry";
    if (s.shear) os << ", shear " << s.variable << " -> " << s.variable << " + " << s.shear->second << "*" << s.shear->first;
    os << "\n";
  }
  if (!r.trace.final.is_zero()) os << "  candidate degree " << r.trace.final.total_degree() << "\n";
  for (const auto& d : r.decisions) {
    os << "  " << d.stage << " at " << r.param << " = " << to_string(original_value(r, d.value)) << ": "
       << to_string(d.verdict.kind);
    if (d.verdict.witness) {
      os << " at";
      for (const auto& [name, value] : original_witness(r, *d.verdict.witness)) os << " " << name << "=" << to_string(value);
    }
    if (d.verdict.reason) os << " (" << *d.verdict.reason << ")";
    os << "\n";
  }
  return os.str();
}

std::string emit_result(const OptimizationResult& r, const ReportOptions& options) {
  return options.format == ReportFormat::Json ? emit_json(r, options) : emit_text(r, options);
}

}  // namespace kbound
