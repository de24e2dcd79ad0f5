#include "kbound/optimizer.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kbound {

namespace {

const Rational kVerifyWidth = make_rational(1, 128);

const char* const kFreshPool[] = {"x", "y", "z", "w", "v", "s", "t"};

std::string fresh_name(std::set<std::string>& taken) {
  for (const char* c : kFreshPool) {
    if (taken.insert(c).second) return c;
  }
  for (int i = 1;; ++i) {
    std::string name = "x" + std::to_string(i);
    if (taken.insert(name).second) return name;
  }
}

std::vector<std::string> real_vars(const ProblemSpec& spec) {
  std::vector<std::string> out;
  for (const auto& d : spec.var_domains) out.push_back(d.name);
  return out;
}

bool is_declared(const ProblemSpec& spec, const std::string& v) {
  return std::any_of(spec.var_domains.begin(), spec.var_domains.end(),
                     [&](const VarDomain& d) { return d.name == v; });
}

bool is_aux(const ProblemSpec& spec, const std::string& v) {
  return std::any_of(spec.sections.begin(), spec.sections.end(),
                     [&](const SectionSpec& s) { return s.aux == v; });
}

void validate(const ProblemSpec& spec) {
  if (spec.param.empty()) throw UsageError("no parameter given");
  if (!spec.objective.depends_on(spec.param)) {
    throw UsageError("objective does not depend on the parameter " + spec.param);
  }
  std::set<std::string> seen;
  for (const auto& d : spec.var_domains) {
    if (d.name == spec.param) throw UsageError("parameter " + spec.param + " is also declared as a variable");
    if (is_aux(spec, d.name)) throw UsageError("variable " + d.name + " clashes with a radical");
    if (!seen.insert(d.name).second) throw UsageError("variable " + d.name + " declared twice");
  }
  for (const auto& v : spec.objective.variables()) {
    if (v != spec.param && !is_aux(spec, v) && !is_declared(spec, v)) {
      throw UsageError("variable " + v + " has no declared domain");
    }
  }
  for (const auto& s : spec.sections) {
    for (const auto& v : s.radicand.variables()) {
      if (!is_declared(spec, v)) throw UsageError("radicand variable " + v + " has no declared domain");
    }
  }
}

MultiPoly negate_param(const MultiPoly& p, const std::string& param) {
  return substitute(p, param, -MultiPoly::variable(param));
}

// The root -alpha of p(-k).
AlgebraicNumber negate_root(const AlgebraicNumber& a, const std::string& param) {
  MultiPoly q = normalize(negate_param(a.defpoly, param));
  return make_algebraic(q, {-a.interval.hi, -a.interval.lo});
}


// Values in reasons and caveats are given in the original orientation.
std::string describe(const ProblemSpec& spec, const Rational& q) { return to_string(spec.negated ? Rational(-q) : q); }

class Classifier {
 public:
  Classifier(const ProblemSpec& spec, const CandidateSet& cs, OptimizationResult& out)
      : spec_(spec), cs_(cs), out_(out) {}

  std::string describe(const Rational& q) const { return kbound::describe(spec_, q); }

  Verdict test(const std::string& stage, const Rational& value) {
    Verdict v = check_rational_candidate(spec_, value);
    out_.decisions.push_back({stage, value, v});
    if (v.is_undecided()) out_.caveats.push_back("decision at " + spec_.param + " = " + describe(value) + " undecided: " + *v.reason);
    return v;
  }

  void mark(std::size_t i, Fate fate, std::string reason) {
    out_.candidates[i].fate = fate;
    out_.candidates[i].reason = std::move(reason);
  }

  // Refines an irrational choice and tests just below and just above it.
  // Rational choices were already checked exactly.
  bool choose(std::size_t i, std::string reason) {
    AlgebraicNumber root = cs_.roots[i];
    if (!root.rational_value) {
      root = refine_to_width(root, kVerifyWidth);
      if (!root.rational_value) {
        Verdict below = test("verify-feasible", root.interval.lo);
        Verdict above = test("verify-infeasible", root.interval.hi);
        if (!below.is_holds() || !above.is_fails()) {
          if (!below.is_undecided() && !above.is_undecided()) {
            out_.caveats.push_back("endpoint verification around the chosen root disagrees with the cell verdicts");
          }
          mark(i, Fate::Undecided, "endpoint verification failed");
          return false;
        }
        out_.bracket = root.interval;
      }
    }
    mark(i, Fate::Chosen, std::move(reason));
    out_.candidates[i].root = root;
    out_.status = Status::Found;
    out_.optimum = root;
    return true;
  }

  void require_unique(std::size_t i) {
    const Rational& lo = cs_.samples[i];
    const Rational& hi = cs_.samples[i + 1];
    if (count_roots_in(cs_.candidate_poly, lo, hi) != 1) {
      throw std::logic_error("candidate bracket (" + describe(lo) + ", " + describe(hi) + ") does not isolate one root");
    }
    out_.bracket = IsolInterval{lo, hi};
  }

 private:
  const ProblemSpec& spec_;
  const CandidateSet& cs_;
  OptimizationResult& out_;
};

OptimizationResult start(const ProblemSpec& spec, const CandidateSet& cs, const char* method) {
  OptimizationResult out;
  out.param = spec.param;
  out.method = method;
  out.candidate_poly = cs.candidate_poly;
  out.trace = cs.trace;
  out.negated = spec.negated;
  out.squared = spec.squared;
  for (const auto& r : cs.roots) out.candidates.push_back({r, Fate::Undecided, "not examined"});
  return out;
}

void to_original(OptimizationResult& r, const std::string& param) {
  if (!r.negated) return;
  r.candidate_poly = normalize(negate_param(r.candidate_poly, param));
  if (r.optimum) r.optimum = negate_root(*r.optimum, param);
  for (auto& c : r.candidates) c.root = negate_root(c.root, param);
  std::reverse(r.candidates.begin(), r.candidates.end());
  if (r.bracket) r.bracket = IsolInterval{-r.bracket->hi, -r.bracket->lo};
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Found:
      return "found";
    case Status::Unbounded:
      return "unbounded";
    case Status::Infeasible:
      return "infeasible";
    case Status::Undecided:
      return "undecided";
  }
  return "undecided";
}

std::string to_string(Fate f) {
  switch (f) {
    case Fate::Chosen:
      return "chosen";
    case Fate::FeasibleNotMax:
      return "feasible-not-max";
    case Fate::Failed:
      return "failed";
    case Fate::IgnoredBelowTransition:
      return "ignored-below-transition";
    case Fate::Undecided:
      return "undecided";
  }
  return "undecided";
}

ProblemSpec preprocess(const ProblemSpec& spec) {
  validate(spec);
  ProblemSpec out = spec;
  std::set<std::string> taken{spec.param};
  for (const auto& d : spec.var_domains) taken.insert(d.name);
  for (const auto& s : spec.sections) taken.insert(s.aux);
  for (const auto& v : spec.objective.variables()) taken.insert(v);
  for (auto& d : out.var_domains) {
    if (d.domain != Domain::Nonneg) continue;
    std::string fresh = fresh_name(taken);
    MultiPoly sq = pow(MultiPoly::variable(fresh), 2);
    out.objective = substitute(out.objective, d.name, sq);
    for (auto& s : out.sections) s.radicand = substitute(s.radicand, d.name, sq);
    out.squared.emplace_back(d.name, fresh);
    d.name = fresh;
    d.domain = Domain::Real;
  }
  if (out.direction == Direction::Minimize) {
    out.objective = negate_param(out.objective, out.param);
    out.direction = Direction::Maximize;
    out.negated = !out.negated;
  }
  return out;
}

CandidateSet candidate_set(const ProblemSpec& spec, const std::vector<std::string>& elim_order) {
  std::vector<std::string> order = elim_order.empty() ? real_vars(spec) : elim_order;
  CandidateSet cs;
  MultiPoly p = spec.objective;
  if (!spec.sections.empty()) {
    std::vector<SideEquation> eqs;
    for (const auto& s : spec.sections) {
      MultiPoly u = MultiPoly::variable(s.aux);
      eqs.push_back({s.aux, u * u - s.radicand});
    }
    p = radical_eliminate(p, eqs, spec.param, &cs.trace);
  }
  try {
    ProjectionTrace rest = successive_projection(p, order, spec.param);
    for (auto& s : rest.steps) cs.trace.steps.push_back(std::move(s));
    cs.trace.final = rest.final;
  } catch (const ProjectionCollapse& e) {
    ProjectionTrace partial = cs.trace;
    for (const auto& s : e.partial().steps) partial.steps.push_back(s);
    partial.final = e.partial().final;
    throw ProjectionCollapse(e.what(), partial);
  }
  cs.candidate_poly = normalize(cs.trace.final);
  auto intervals = isolate_real_roots(cs.candidate_poly);
  for (const auto& iv : intervals) cs.roots.push_back(make_algebraic(cs.candidate_poly, iv));
  cs.samples = sample_between(intervals);
  return cs;
}

Verdict check_rational_candidate(const ProblemSpec& spec, const Rational& value) {
  return endpoint_test(spec.objective, spec.param, value, real_vars(spec), spec.sections);
}

Boundedness probe_unbounded(const ProblemSpec& spec, const CandidateSet& cs) {
  Verdict v = check_rational_candidate(spec, cs.samples.back());
  if (v.is_holds()) return Boundedness::Unbounded;
  if (v.is_fails()) return Boundedness::Bounded;
  return Boundedness::Undecided;
}

OptimizationResult solve_monotone(const ProblemSpec& spec, const CandidateSet& cs) {
  OptimizationResult out = start(spec, cs, "monotone");
  Classifier c(spec, cs, out);
  const std::size_t m = cs.roots.size();
  Verdict bottom = c.test("monotone", cs.samples.front());
  if (bottom.is_undecided()) return out;
  if (bottom.is_fails()) {
    // Down-closed feasible set failing below every critical value.
    for (std::size_t i = 0; i < m; ++i) c.mark(i, Fate::Failed, "sample " + describe(spec, cs.samples.front()) + " past every root on the feasible side fails");
    out.status = Status::Infeasible;
    return out;
  }
  if (m == 0) throw std::logic_error("no candidate roots but the samples disagree");
  std::size_t lo = 0;
  std::size_t hi = m;  // samples[hi] fails
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    Verdict v = c.test("monotone", cs.samples[mid]);
    if (v.is_undecided()) return out;
    if (v.is_holds()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  c.require_unique(lo);
  const std::string below = describe(spec, cs.samples[lo]);
  const std::string above = describe(spec, cs.samples[hi]);
  if (cs.roots[lo].rational_value) {
    Verdict exact = c.test("rational-root", *cs.roots[lo].rational_value);
    if (!exact.is_holds()) {
      if (exact.is_fails()) out.caveats.push_back("rational root " + describe(spec, *cs.roots[lo].rational_value) + " fails although the adjacent feasible cell holds");
      c.mark(lo, Fate::Undecided, "exact check did not hold");
      return out;
    }
  }
  for (std::size_t i = 0; i < lo; ++i) c.mark(i, Fate::FeasibleNotMax, "feasible side of holding sample " + below);
  for (std::size_t i = hi; i < m; ++i) c.mark(i, Fate::Failed, "beyond failing sample " + above);
  c.choose(lo, "sample " + below + " holds and sample " + above + " fails");
  return out;
}

OptimizationResult solve_scan(const ProblemSpec& spec, const CandidateSet& cs) {
  OptimizationResult out = start(spec, cs, "scan");
  Classifier c(spec, cs, out);
  const bool affine = spec.objective.degree(spec.param) <= 1;
  if (!affine) out.caveats.push_back("maximal verified candidate");
  const std::size_t m = cs.roots.size();
  bool irrational_unresolved = false;
  for (std::size_t j = m; j-- > 0;) {
    const std::string above = describe(spec, cs.samples[j + 1]);
    Verdict below = c.test("scan", cs.samples[j]);
    if (below.is_undecided()) {
      for (std::size_t i = 0; i <= j; ++i) c.mark(i, Fate::Undecided, "sample " + describe(spec, cs.samples[j]) + " undecided");
      return out;
    }
    if (below.is_holds()) {
      c.require_unique(j);
      if (cs.roots[j].rational_value) {
        Verdict exact = c.test("rational-root", *cs.roots[j].rational_value);
        if (!exact.is_holds()) {
          if (exact.is_fails()) out.caveats.push_back("rational root " + describe(spec, *cs.roots[j].rational_value) + " fails although the adjacent feasible cell holds");
          c.mark(j, Fate::Undecided, "exact check did not hold");
          return out;
        }
      }
      for (std::size_t i = 0; i < j; ++i) c.mark(i, Fate::IgnoredBelowTransition, "feasible side of the chosen root");
      if (affine) {
        for (std::size_t i = j + 1; i < m; ++i) {
          if (out.candidates[i].fate == Fate::Undecided) c.mark(i, Fate::Failed, "excluded by convexity: sample " + above + " fails");
        }
      }
      c.choose(j, "cell sample " + describe(spec, cs.samples[j]) + " holds and " + above + " fails");
      return out;
    }
    if (cs.roots[j].rational_value) {
      const Rational r = *cs.roots[j].rational_value;
      Verdict exact = c.test("rational-root", r);
      if (exact.is_undecided()) {
        for (std::size_t i = 0; i <= j; ++i) c.mark(i, Fate::Undecided, "exact check at " + describe(spec, r) + " undecided");
        return out;
      }
      if (exact.is_holds()) {
        out.bracket = IsolInterval{r, r};
        for (std::size_t i = 0; i < j; ++i) c.mark(i, Fate::IgnoredBelowTransition, "feasible side of the chosen root");
        c.choose(j, "exact check holds; cells on both sides fail");
        return out;
      }
      c.mark(j, Fate::Failed, "exact check fails");
      continue;
    }
    irrational_unresolved = true;
    c.mark(j, Fate::Undecided, "cells on both sides fail; an isolated feasible point is not excluded");
  }
  if (!irrational_unresolved) {
    out.status = Status::Infeasible;
    return out;
  }
  out.caveats.push_back("possible isolated feasible point");
  return out;
}

namespace {

OptimizationResult solve_preprocessed(const ProblemSpec& input, const SolveOptions& options) {
  ProblemSpec spec = preprocess(input);
  std::vector<std::string> order;
  for (const auto& v : options.elim_order) {
    auto it = std::find_if(spec.squared.begin(), spec.squared.end(), [&](const auto& m) { return m.first == v; });
    order.push_back(it == spec.squared.end() ? v : it->second);
  }
  OptimizationResult out;
  out.negated = spec.negated;
  out.squared = spec.squared;
  CandidateSet cs;
  try {
    cs = candidate_set(spec, order);
  } catch (const ProjectionCollapse& e) {
    out.trace = e.partial();
    out.caveats.push_back(std::string("projection collapsed: ") + e.what());
    return out;
  }
  out.candidate_poly = cs.candidate_poly;
  out.trace = cs.trace;
  for (const auto& r : cs.roots) out.candidates.push_back({r, Fate::Undecided, "not examined"});

  Verdict top = check_rational_candidate(spec, cs.samples.back());
  out.decisions.push_back({"probe-unbounded", cs.samples.back(), top});
  if (top.is_undecided()) {
    out.caveats.push_back("top cell undecided: " + *top.reason);
    to_original(out, spec.param);
    return out;
  }
  if (top.is_holds()) {
    for (auto& c : out.candidates) {
      c.fate = Fate::IgnoredBelowTransition;
      c.reason = "outermost sample " + describe(spec, cs.samples.back()) + " holds";
    }
    out.status = Status::Unbounded;
    to_original(out, spec.param);
    return out;
  }

  MonotonicityResult mono;
  if (options.mode != SolveMode::Scan) {
    mono = monotonicity_class(spec.objective, spec.param, real_vars(spec), spec.sections);
  }
  OptimizationResult r;
  if (options.mode == SolveMode::Scan) {
    r = solve_scan(spec, cs);
  } else if (mono.kind == Monotonicity::Decreasing) {
    r = solve_monotone(spec, cs);
  } else if (mono.kind == Monotonicity::Increasing) {
    // Up-closed feasible set whose top cell fails.
    r = start(spec, cs, "monotone");
    for (auto& c : r.candidates) {
      c.fate = Fate::Failed;
      c.reason = "feasible set is monotone and outermost sample " + describe(spec, cs.samples.back()) + " fails";
    }
    r.status = Status::Infeasible;
  } else if (options.mode == SolveMode::Monotone) {
    r = start(spec, cs, "monotone");
    r.caveats.push_back("monotone mode requested but the objective is not monotone in " + spec.param);
  } else {
    r = solve_scan(spec, cs);
  }
  if (options.mode != SolveMode::Scan) {
    r.monotonicity = mono;
    if (mono.caveat) r.caveats.insert(r.caveats.begin(), *mono.caveat);
  }
  r.decisions.insert(r.decisions.begin(), out.decisions.begin(), out.decisions.end());
  if (r.status == Status::Found && algnum_sign_at(*r.optimum, r.candidate_poly) != 0) {
    throw std::logic_error("optimum is not a root of the candidate polynomial");
  }
  if (r.status == Status::Undecided && r.caveats.empty()) r.caveats.push_back("a sub-decision was undecided");
  to_original(r, spec.param);
  return r;
}

}  // namespace

OptimizationResult solve(const ProblemSpec& spec, const SolveOptions& options) {
  OptimizationResult r = solve_preprocessed(spec, options);
  r.param = spec.param;
  r.direction = spec.direction;
  return r;
}

}  // namespace kbound
