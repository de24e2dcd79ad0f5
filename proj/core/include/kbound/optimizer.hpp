#pragma once

// End-to-end driver: preprocess the problem, project to a univariate
// candidate polynomial in the parameter, classify its real roots and
// assemble the exact optimum.

#include "kbound/decide.hpp"
#include "kbound/multipoly.hpp"
#include "kbound/projection.hpp"
#include "kbound/realroots.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kbound {

enum class Direction { Maximize, Minimize };
enum class Domain { Real, Nonneg };

struct VarDomain {
  std::string name;
  Domain domain = Domain::Real;
};

// Find the extreme k with objective(k, x) >= 0 for all admissible x.
struct ProblemSpec {
  MultiPoly objective;
  std::string param;
  Direction direction = Direction::Maximize;
  std::vector<VarDomain> var_domains;  // declaration order is the default elimination order
  std::vector<SectionSpec> sections;

  // Filled by preprocess.
  bool negated = false;                                      // k was replaced by -k
  std::vector<std::pair<std::string, std::string>> squared;  // original -> fresh, original = fresh^2
};

// Nonneg variables become fresh variables squared and minimize becomes
// maximize under k -> -k. Throws UsageError on an ill-formed spec.
ProblemSpec preprocess(const ProblemSpec& spec);

struct CandidateSet {
  MultiPoly candidate_poly;  // squarefree, univariate in the parameter
  std::vector<AlgebraicNumber> roots;
  std::vector<Rational> samples;  // one below, one between each pair, one above
  ProjectionTrace trace;
};

// Radical elimination, successive projection along `elim_order` (default:
// declaration order), isolation and sampling. Expects a preprocessed spec.
// Throws ProjectionCollapse.
CandidateSet candidate_set(const ProblemSpec& spec, const std::vector<std::string>& elim_order = {});

enum class Boundedness { Bounded, Unbounded, Undecided };
Boundedness probe_unbounded(const ProblemSpec& spec, const CandidateSet& cs);

// Endpoint test at an exact rational value of the parameter.
Verdict check_rational_candidate(const ProblemSpec& spec, const Rational& value);

enum class Status { Found, Unbounded, Infeasible, Undecided };
std::string to_string(Status s);

enum class Fate { Chosen, FeasibleNotMax, Failed, IgnoredBelowTransition, Undecided };
std::string to_string(Fate f);

struct CandidateEntry {
  AlgebraicNumber root;
  Fate fate = Fate::Undecided;
  std::string reason;
};

struct DecisionRecord {
  std::string stage;
  Rational value;
  Verdict verdict;
};

struct OptimizationResult {
  std::string param;
  Direction direction = Direction::Maximize;
  Status status = Status::Undecided;
  std::optional<AlgebraicNumber> optimum;
  MultiPoly candidate_poly;
  std::vector<CandidateEntry> candidates;  // ascending in the parameter
  std::vector<std::string> caveats;
  std::string method;                      // "monotone" or "scan", empty before classification
  std::optional<MonotonicityResult> monotonicity;
  std::optional<IsolInterval> bracket;     // holding and failing samples around the optimum
  ProjectionTrace trace;
  std::vector<DecisionRecord> decisions;   // in the preprocessed orientation
  std::vector<std::pair<std::string, std::string>> squared;
  bool negated = false;
};

// Both expect a preprocessed spec and a candidate set whose top sample fails.
OptimizationResult solve_monotone(const ProblemSpec& spec, const CandidateSet& cs);
OptimizationResult solve_scan(const ProblemSpec& spec, const CandidateSet& cs);

enum class SolveMode { Auto, Monotone, Scan };

struct SolveOptions {
  SolveMode mode = SolveMode::Auto;
  std::vector<std::string> elim_order;  // original or preprocessed names; empty means declaration order
};

// Full pipeline. Values in the result are in the original orientation of
// the parameter. Projection collapse and undecidable sub-steps give status
// Undecided with caveats.
OptimizationResult solve(const ProblemSpec& spec, const SolveOptions& options = {});

}  // namespace kbound
