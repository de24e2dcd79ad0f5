#pragma once

// Operations on MultiPoly: calculus, substitution, exact division, gcd,
// squarefree parts, resultants and the powerfree factor filter.
//
// "Equal up to a nonzero rational constant" is the equality used by the
// projection contracts; `normalize` returns the canonical representative
// (integer coefficients with gcd 1, positive leading coefficient in the
// decreasing lexicographic term order).

#include "kbound/multipoly.hpp"
#include "kbound/zpoly.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kbound {

MultiPoly pow(const MultiPoly& p, long e);

MultiPoly derivative(const MultiPoly& p, std::string_view v);

MultiPoly substitute(const MultiPoly& p, std::string_view v, const MultiPoly& replacement);
MultiPoly substitute(const MultiPoly& p, std::string_view v, const Rational& value);
// Simultaneous substitution of rational values.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, Rational>& point);

// Exact value; every variable of p must be assigned.
Rational eval_at(const MultiPoly& p, const std::map<std::string, Rational>& point);

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Canonical representative of the class of p modulo nonzero constants.
MultiPoly normalize(const MultiPoly& p);
// p = scale * normalize(p).
Rational normalization_scale(const MultiPoly& p);
bool equal_up_to_constant(const MultiPoly& a, const MultiPoly& b);

// Leading coefficient and degree in v.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();
struct LeadingCoeff {
  MultiPoly coeff;
  int degree;  // kDegreeOfZero for the zero polynomial
};
LeadingCoeff leading_coeff_and_degree(const MultiPoly& p, std::string_view v);

// Recursive view of p as a polynomial in main_var with coefficients in the
// remaining variables.
struct UniView {
  MultiPoly poly;
  std::string main_var;
  std::vector<MultiPoly> coeffs;  // coeffs[i] multiplies main_var^i
};
UniView univariate_view(const MultiPoly& p, std::string_view main_var);
MultiPoly reassemble(const UniView& view);

// Integer-primitive image of a polynomial univariate in v (or constant).
ZPoly to_zpoly(const MultiPoly& p, std::string_view v);
MultiPoly from_zpoly(const ZPoly& p, const std::string& v);

// Normalized gcd; gcd(0, 0) = 0 and gcd(p, 0) = normalize(p).
MultiPoly multivar_gcd(const MultiPoly& a, const MultiPoly& b);

// p / gcd(p, dp/dv_1, ..., dp/dv_n), normalized. p != 0.
MultiPoly squarefree_part(const MultiPoly& p);
// p / gcd(p, dp/dv): the squarefree part of the primitive part of p as a
// polynomial in v. Factors free of v are dropped.
MultiPoly squarefree_part_wrt(const MultiPoly& p, std::string_view v);

// p divided by the gcd of its coefficients as a polynomial in `vset`.
MultiPoly primitive_part_wrt(const MultiPoly& p, const std::vector<std::string>& vset);

// squarefree_part(primitive_part_wrt(p, vset)). Throws DegenerateProjection
// when nothing depending on vset survives.
MultiPoly powerfree(const MultiPoly& p, const std::vector<std::string>& vset);

// Exact resultant with respect to v. Multivariate inputs go through
// evaluation/interpolation over the other variables with the subresultant
// PRS at the univariate leaves.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view v);
// Same value, computed by the subresultant PRS directly over the recursive
// coefficient ring. Kept as an independent route for cross-checks.
MultiPoly resultant_prs(const MultiPoly& a, const MultiPoly& b, std::string_view v);

// gcd of the exponents of v over all terms of p (0 when v is absent).
unsigned exponent_gcd(const MultiPoly& p, std::string_view v);
// Replaces v^(d*i) by v^i; d must divide every exponent of v.
MultiPoly deflate_variable(const MultiPoly& p, std::string_view v, unsigned d);

}  // namespace kbound
