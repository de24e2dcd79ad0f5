#pragma once

#include "kbound/numbers.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kbound {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: the variable list is sorted by name and contains exactly
/// the variables occurring with positive degree; terms are sorted in
/// decreasing lexicographic order of exponent vectors and carry nonzero
/// coefficients. Two values compare equal iff they are equal as polynomials.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exps;
    Rational coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(const std::string& name);
  // Builds and canonicalizes; exponent vectors index into `vars`.
  static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Value of a constant polynomial (0 for zero).
  Rational constant_value() const;
  bool depends_on(std::string_view v) const;
  // -1 when v does not occur (including the zero polynomial).
  int var_index(std::string_view v) const;
  // Degree in v; 0 when absent, -1 for the zero polynomial.
  int degree(std::string_view v) const;
  int total_degree() const;
  const Term& leading_term() const { return terms_.front(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void canonicalize();
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

// Canonical text: decreasing lex term order, explicit '*', '^' exponents,
// rational coefficients written p/q. Parseable by the problem grammar.
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace kbound
