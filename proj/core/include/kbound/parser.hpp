#pragma once

// Problem files and polynomial expressions.
//
//   # comment
//   direction: max|min
//   parameter: k
//   objective: <expr>
//   vars: a:nonneg, b:nonneg, y:real
//
// Expressions use + - * / ^, parentheses, integer and p/q literals and
// sqrt(<expr>). ^ binds tighter than unary minus, which binds tighter than
// * and /. Multiplication must be explicit, divisors must be nonzero
// constants and exponents nonnegative integers. Each distinct sqrt radicand
// becomes an aux variable u, u2, ... constrained by a SectionSpec.

#include "kbound/multipoly.hpp"
#include "kbound/optimizer.hpp"

#include <string_view>

namespace kbound {

// Throws ParseError with 1-based line and column.
ProblemSpec parse_problem(std::string_view text);

// A single expression without sqrt; every identifier becomes a variable.
MultiPoly parse_polynomial(std::string_view text);

}  // namespace kbound
