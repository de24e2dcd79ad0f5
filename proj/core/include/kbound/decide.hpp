#pragma once

// Universal nonnegativity by open-cell sampling, its variant over a radical
// section, monotonicity in the parameter and rational endpoint tests.

#include "kbound/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kbound {

enum class VerdictKind { HoldsForAll, FailsWitness, Undecided };

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::optional<std::map<std::string, Rational>> witness;
  std::optional<std::string> reason;

  static Verdict holds() { return {VerdictKind::HoldsForAll, std::nullopt, std::nullopt}; }
  static Verdict fails(std::map<std::string, Rational> w) { return {VerdictKind::FailsWitness, std::move(w), std::nullopt}; }
  static Verdict undecided(std::string why) { return {VerdictKind::Undecided, std::nullopt, std::move(why)}; }

  bool is_holds() const { return kind == VerdictKind::HoldsForAll; }
  bool is_fails() const { return kind == VerdictKind::FailsWitness; }
  bool is_undecided() const { return kind == VerdictKind::Undecided; }
};

std::string to_string(VerdictKind k);

// u stands for the nonnegative square root of radicand.
struct SectionSpec {
  std::string aux;
  MultiPoly radicand;
};

// Decides p >= 0 on all of R^n. `vars` fixes the elimination order (first
// eliminated first) and must cover the variables of p.
Verdict nonneg_forall(const MultiPoly& p, const std::vector<std::string>& vars);

// Decides g(x, +sqrt(r(x))) >= 0 for all real x. Throws UsageError when the
// radicand is not globally nonnegative.
Verdict nonneg_forall_section(const MultiPoly& g, const SectionSpec& section, const std::vector<std::string>& vars);

// Dispatches on the sections g actually involves; more than one is Undecided.
Verdict nonneg_forall_sections(const MultiPoly& g, const std::vector<SectionSpec>& sections,
                               const std::vector<std::string>& vars);

enum class Monotonicity { Decreasing, Increasing, Indefinite };
std::string to_string(Monotonicity m);

struct MonotonicityResult {
  Monotonicity kind = Monotonicity::Indefinite;
  std::optional<std::string> caveat;  // set when an inner decision was Undecided
};

MonotonicityResult monotonicity_class(const MultiPoly& F, const std::string& param, const std::vector<std::string>& vars,
                                      const std::vector<SectionSpec>& sections = {});

Verdict endpoint_test(const MultiPoly& F, const std::string& param, const Rational& value,
                      const std::vector<std::string>& vars, const std::vector<SectionSpec>& sections = {});

// Exact sign of g(point, +sqrt(r(point))).
int section_sign_at(const MultiPoly& g, const SectionSpec& section, const std::map<std::string, Rational>& point);

}  // namespace kbound
