#include "kbound/parser.hpp"
#include "kbound/report.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"
#include "oracles.hpp"
#include "paper_examples.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace kbound;
using namespace kbound::examples;

namespace {

const MultiPoly a = v("a");
const MultiPoly b = v("b");
const MultiPoly k = v("k");

Rational R(long p, long q = 1) { return make_rational(p, q); }

std::string problem(const std::string& objective, const std::string& vars = "a:nonneg, b:nonneg") {
  return "direction: max\nparameter: k\nobjective: " + objective + "\nvars: " + vars + "\n";
}

ParseError parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError(0, 0, "");
}

const std::string kEx1Text = R"(# Example 1
direction: max
parameter: k
objective: a^3 + b^3 + c^3 + k*(a^2*b + b^2*c + c^2*a) - (k + 1)*(a*b^2 + b*c^2 + c*a^2)
vars: a:nonneg, b:nonneg, c:nonneg
)";

const std::string kEx3Text = R"(direction: max
parameter: k
objective: a^2*b^4 - k*a*b^3 + sqrt(a^2 + b^4)*a*b^3 + b^3 + a
vars: a:nonneg, b:nonneg
)";

const OptimizationResult& ex1_result() {
  static const OptimizationResult r = solve(parse_problem(kEx1Text));
  return r;
}

bool approx_inside(const nlohmann::ordered_json& j) {
  Rational t = parse_decimal(j["approx"].get<std::string>());
  Rational lo(j["interval"][0].get<std::string>());
  Rational hi(j["interval"][1].get<std::string>());
  lo.canonicalize();
  hi.canonicalize();
  return lo <= t && t <= hi;
}

}  // namespace

TEST_CASE("Example 1 objective parses to the stated polynomial") {
  ProblemSpec s = parse_problem(kEx1Text);
  CHECK(s.param == "k");
  CHECK(s.direction == Direction::Maximize);
  CHECK(s.objective.num_terms() == 12);
  CHECK(s.objective == ex1_spec().objective);
  REQUIRE(s.var_domains.size() == 3);
  CHECK(s.var_domains[2].name == "c");
  CHECK(s.var_domains[2].domain == Domain::Nonneg);
  CHECK(s.sections.empty());
}

TEST_CASE("sqrt introduces a section carried through preprocessing") {
  ProblemSpec s = parse_problem(kEx3Text);
  REQUIRE(s.sections.size() == 1);
  CHECK(s.sections[0].aux == "u");
  CHECK(s.sections[0].radicand == a * a + pow(b, 4));
  CHECK(s.objective == ex3_spec().objective);
  ProblemSpec p = preprocess(s);
  CHECK(p.sections[0].radicand == ex3_radicand());
  CHECK(p.objective == ex3_F());
}

TEST_CASE("repeated radicands share one aux variable and aux names avoid clashes") {
  ProblemSpec s = parse_problem(problem("sqrt(a^2 + 1)*k + sqrt(a^2+1) - u", "a:real, u:real"));
  REQUIRE(s.sections.size() == 1);
  CHECK(s.sections[0].aux == "u2");
  CHECK(s.objective == v("u2") * k + v("u2") - v("u"));
  ProblemSpec t = parse_problem(problem("sqrt(a^2 + 1)*k + sqrt(b^2 + 1)"));
  REQUIRE(t.sections.size() == 2);
  CHECK(t.sections[1].aux == "u2");
}

TEST_CASE("operator precedence") {
  CHECK(parse_polynomial("-k^2") == -(k * k));
  CHECK(parse_polynomial("-2^2") == MultiPoly(-4));
  CHECK(parse_polynomial("2*-3") == MultiPoly(-6));
  CHECK(parse_polynomial("a - b - k") == a - b - k);
  CHECK(parse_polynomial("a + b*k^2") == a + b * k * k);
  CHECK(parse_polynomial("(a + b)^2") == pow(a + b, 2));
  CHECK(parse_polynomial("6/4*a") == MultiPoly(R(3, 2)) * a);
  CHECK(parse_polynomial("a/2/3") == MultiPoly(R(1, 6)) * a);
  CHECK(parse_polynomial("-3/4*a^2") == MultiPoly(R(-3, 4)) * a * a);
  CHECK(parse_polynomial("a^0") == MultiPoly(1));
  CHECK(parse_polynomial("  a *  b ") == a * b);
}

TEST_CASE("dangling exponent operator") {
  ParseError e = parse_error(problem("k^"));
  CHECK(e.line() == 3);
  CHECK(e.column() == 13);
  CHECK_THROWS_AS(parse_polynomial("k^"), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  struct Case {
    std::string objective;
    int column;
    std::string fragment;
  };
  const Case cases[] = {
      {"1.5*k", 12, "decimal"},
      {"2k", 13, "implicit multiplication"},
      {"2 k", 14, "implicit multiplication"},
      {"(a)(k)", 15, "implicit multiplication"},
      {"k/a", 13, "non-constant"},
      {"k/0", 13, "division by zero"},
      {"k + sqrt(k)", 16, "parameter"},
      {"k + sqrt(sqrt(a))", 16, "nested"},
      {"k + q", 16, "unknown identifier"},
      {"k +", 14, "dangling"},
      {"(k + a", 12, "unclosed"},
      {"k^a", 14, "exponent"},
      {"k^2^3", 15, "chained"},
      {"k $ a", 14, "unexpected character"},
      {"a", 12, "does not depend"},
  };
  for (const auto& c : cases) {
    ParseError e = parse_error(problem(c.objective));
    CAPTURE(c.objective);
    CHECK(e.line() == 3);
    CHECK(e.column() == c.column);
    CHECK(e.message().find(c.fragment) != std::string::npos);
  }
}

TEST_CASE("problem file structure errors") {
  CHECK(parse_error("parameter: k\nobjective: k\n").message().find("vars") != std::string::npos);
  CHECK(parse_error("parameter: k\nvars: a:real\n").message().find("objective") != std::string::npos);
  ParseError dup = parse_error("parameter: k\nparameter: j\nobjective: k\nvars: a:real\n");
  CHECK(dup.line() == 2);
  ParseError key = parse_error("  bogus: 1\n");
  CHECK(key.line() == 1);
  CHECK(key.column() == 3);
  ParseError dom = parse_error("parameter: k\nobjective: k*a\nvars: a:positive\n");
  CHECK(dom.line() == 3);
  CHECK(dom.column() == 9);
  CHECK(parse_error("parameter: k\nobjective: k*a\nvars: a:real, a:real\n").message().find("twice") !=
        std::string::npos);
  CHECK(parse_error("parameter: k\nobjective: k\nvars: k:real\n").message().find("parameter") != std::string::npos);
  CHECK(parse_error("direction: up\nparameter: k\nobjective: k\nvars: a:real\n").line() == 1);
  CHECK(parse_error("parameter: k j\nobjective: k\nvars: a:real\n").line() == 1);
  CHECK(parse_error("no colon here\n").message().find("key") != std::string::npos);
}

TEST_CASE("comments, blank lines and defaults") {
  ProblemSpec s = parse_problem("\n# header\nparameter: k   # trailing\n\nobjective: k - a^2\r\nvars: a : real\n");
  CHECK(s.direction == Direction::Maximize);
  CHECK(s.objective == k - a * a);
  CHECK(s.var_domains[0].domain == Domain::Real);
  CHECK(parse_problem("direction: min\nparameter: k\nobjective: k\nvars: a:real\n").direction == Direction::Minimize);
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> den(1, 9);
  const std::vector<std::string> vars{"a", "b", "k", "x2"};
  for (int trial = 0; trial < 300; ++trial) {
    MultiPoly p = oracle::random_poly(rng, vars, 5, -20, 20, 0.4);
    p *= make_rational(1, den(rng));
    MultiPoly q = parse_polynomial(to_string(p));
    CHECK(q == p);
    CHECK(to_string(q) == to_string(p));
  }
  CHECK(parse_polynomial(to_string(MultiPoly())) == MultiPoly());
}

TEST_CASE("parse_decimal") {
  CHECK(parse_decimal("2.484435332") == R(2484435332, 1000000000));
  CHECK(parse_decimal("-0.5") == R(-1, 2));
  CHECK(parse_decimal("12") == R(12));
  CHECK_THROWS_AS(parse_decimal("1e5"), UsageError);
  CHECK_THROWS_AS(parse_decimal(""), UsageError);
}

TEST_CASE("JSON report of Example 1") {
  const OptimizationResult& r = ex1_result();
  ReportOptions o;
  o.format = ReportFormat::Json;
  o.digits = 9;
  auto j = nlohmann::ordered_json::parse(emit_result(r, o));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"status", "parameter", "direction", "value", "method", "monotonicity",
                                         "candidate_polynomial", "candidates", "caveats", "substitutions"});
  CHECK(j["status"] == "found");
  CHECK(j["value"]["approx"] == "2.484435332");
  CHECK(j["value"]["interval"] == nlohmann::ordered_json::array({"159/64", "319/128"}));
  CHECK_FALSE(j["value"].contains("exact_rational"));
  CHECK(approx_inside(j["value"]));
  MultiPoly def = parse_polynomial(j["value"]["defining_polynomial"].get<std::string>());
  CHECK(def == r.optimum->defpoly);
  CHECK(squarefree_part(def) == def);
  CHECK(j["candidate_polynomial"]["degree"] == 12);
  REQUIRE(j["candidates"].size() == 4);
  const std::set<std::string> names{"chosen", "feasible-not-max", "failed", "ignored-below-transition", "undecided"};
  int chosen = 0;
  for (const auto& c : j["candidates"]) {
    CHECK(names.count(c["verdict"].get<std::string>()) == 1);
    chosen += c["verdict"] == "chosen";
  }
  CHECK(chosen == 1);
  CHECK(j["candidates"][2]["verdict"] == "chosen");
  CHECK(j["candidates"][0]["verdict"] == "ignored-below-transition");
  CHECK(j["candidates"][1]["verdict"] == "ignored-below-transition");
  CHECK(j["candidates"][3]["verdict"] == "failed");
  CHECK(j["caveats"].empty());
  CHECK(j["substitutions"][0]["variable"] == "a");
  CHECK(j["substitutions"][0]["square_of"] == "x");
}

TEST_CASE("JSON trace lists steps and decisions") {
  ReportOptions o;
  o.format = ReportFormat::Json;
  o.trace = true;
  auto j = nlohmann::ordered_json::parse(emit_result(ex1_result(), o));
  REQUIRE(j.contains("trace"));
  const auto& steps = j["trace"]["steps"];
  REQUIRE(steps.size() == 2);
  CHECK(steps[0]["variable"] == "x");
  CHECK(steps[1]["variable"] == "y");
  CHECK(steps[1]["result_degrees"]["k"] == 12);
  CHECK(j["trace"]["final_degree"] == 12);
  bool witness_seen = false;
  for (const auto& d : j["trace"]["decisions"]) {
    if (!d.contains("witness")) continue;
    witness_seen = true;
    std::map<std::string, Rational> pt{{"k", Rational(d["value"].get<std::string>())}};
    pt["k"].canonicalize();
    for (const auto& [name, value] : d["witness"].items()) {
      Rational q(value.get<std::string>());
      q.canonicalize();
      pt[name] = q;
    }
    for (const char* name : {"a", "b", "c"}) pt.emplace(name, Rational(0));
    CHECK(eval_at(ex1_spec().objective, pt) < 0);
  }
  CHECK(witness_seen);
}

TEST_CASE("JSON output is deterministic") {
  ReportOptions o;
  o.format = ReportFormat::Json;
  o.trace = true;
  std::string first = emit_result(solve(parse_problem(kEx1Text)), o);
  std::string second = emit_result(solve(parse_problem(kEx1Text)), o);
  CHECK(first == second);
}

TEST_CASE("unbounded and undecided reports") {
  ReportOptions o;
  o.format = ReportFormat::Json;
  OptimizationResult unb = solve(parse_problem(problem("a^2 + k", "a:real")));
  REQUIRE(unb.status == Status::Unbounded);
  auto j = nlohmann::ordered_json::parse(emit_result(unb, o));
  CHECK(j["status"] == "unbounded");
  CHECK(j["value"].empty());

  OptimizationResult und = solve(parse_problem(problem("-(a^2 + 1)*(k^2 - 2)^2", "a:real")));
  REQUIRE(und.status == Status::Undecided);
  auto u = nlohmann::ordered_json::parse(emit_result(und, o));
  CHECK(u["status"] == "undecided");
  CHECK_FALSE(u["caveats"].empty());
}

TEST_CASE("approximations lie inside the reported intervals") {
  ReportOptions o;
  o.format = ReportFormat::Json;
  for (int digits : {1, 3, 10, 25}) {
    o.digits = digits;
    auto j = nlohmann::ordered_json::parse(emit_result(ex1_result(), o));
    CHECK(approx_inside(j["value"]));
  }
  OptimizationResult third = solve(parse_problem(problem("1 - 3*k + a^2", "a:real")));
  REQUIRE(third.status == Status::Found);
  o.digits = 4;
  auto j = nlohmann::ordered_json::parse(emit_result(third, o));
  CHECK(j["value"]["exact_rational"] == "1/3");
  CHECK(j["value"]["approx"] == "0.3333");
  CHECK(approx_inside(j["value"]));
}

TEST_CASE("text report mirrors the ledger") {
  ReportOptions o;
  o.digits = 9;
  o.trace = true;
  std::string text = emit_result(ex1_result(), o);
  CHECK(text.find("status: found") != std::string::npos);
  CHECK(text.find("k_max = 2.484435332") != std::string::npos);
  CHECK(text.find("(159/64, 319/128)") != std::string::npos);
  CHECK(text.find("chosen") != std::string::npos);
  CHECK(text.find("eliminate x") != std::string::npos);
  CHECK(text.find("caveats: none") != std::string::npos);
}
