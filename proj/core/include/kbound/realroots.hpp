#pragma once

// Real roots of univariate polynomials: isolation, Sturm counting,
// refinement and exact sign evaluation at real algebraic numbers.

#include "kbound/multipoly.hpp"
#include "kbound/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kbound {

struct IsolInterval {
  Rational lo;
  Rational hi;
  bool is_degenerate() const { return lo == hi; }
  friend bool operator==(const IsolInterval& a, const IsolInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// A real root of `defpoly` (squarefree, univariate) isolated by `interval`.
// Non-degenerate intervals satisfy defpoly(lo) * defpoly(hi) < 0.
// rational_value is set exactly when the root is rational.
struct AlgebraicNumber {
  MultiPoly defpoly;
  IsolInterval interval;
  std::optional<Rational> rational_value;

  ZPoly zpoly() const;
};

// Intervals for the distinct real roots of a squarefree univariate p, sorted
// and pairwise disjoint. Rational roots met exactly come back degenerate.
// Throws UsageError when p is zero, multivariate or not squarefree.
std::vector<IsolInterval> isolate_real_roots(const MultiPoly& p);
std::vector<IsolInterval> isolate_real_roots(const ZPoly& p);

// isolate_real_roots packaged as algebraic numbers.
std::vector<AlgebraicNumber> real_roots(const MultiPoly& p);

// Validates the isolation and fills rational_value.
AlgebraicNumber make_algebraic(const MultiPoly& defpoly, const IsolInterval& interval);

// Sturm sequence of p: p, p', then negated pseudo-remainders with positive
// scaling so the sign pattern is that of the true Sturm sequence.
class SturmSequence {
 public:
  explicit SturmSequence(const ZPoly& p);
  int variations_at(const Rational& x) const;
  // Distinct roots in (a, b); p(a) and p(b) must be nonzero.
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<ZPoly> seq_;
};

// Distinct real roots of p in the open interval (a, b). Requires a < b and
// p(a) != 0 != p(b).
int count_roots_in(const MultiPoly& p, const Rational& a, const Rational& b);
int count_roots_in(const ZPoly& p, const Rational& a, const Rational& b);

AlgebraicNumber refine_to_width(const AlgebraicNumber& a, const Rational& width);

// The rational of least denominator in the open interval (a, b), choosing
// the one closest to the midpoint among those (the smaller on a tie).
Rational simplest_between(const Rational& a, const Rational& b);

// One rational below all intervals, one in each gap, one above all.
std::vector<Rational> sample_between(const std::vector<IsolInterval>& intervals);

// Exact sign of q at the root. q must be univariate in the variable of the
// defining polynomial (or constant).
int algnum_sign_at(const AlgebraicNumber& a, const MultiPoly& q);

// Decimal rendering with `digits` fractional digits and error below 10^-digits.
std::string algnum_approx(const AlgebraicNumber& a, int digits);

// Interval containing q over [lo, hi], by Horner with rational intervals.
IsolInterval interval_eval(const ZPoly& q, const IsolInterval& x);

}  // namespace kbound
