#pragma once

// Dense univariate polynomials over the integers. This is the workhorse for
// root isolation, univariate gcd/resultant, and the evaluation leaves of the
// multivariate resultant.

#include "kbound/numbers.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace kbound {

class ZPoly {
 public:
  ZPoly() = default;
  // Coefficients from low to high degree; trailing zeros are trimmed.
  explicit ZPoly(std::vector<Integer> coeffs);

  static ZPoly constant(const Integer& c);
  static ZPoly monomial(const Integer& c, unsigned degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of x^i (zero beyond the degree).
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& lc() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const Integer& s);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const ZPoly& p);

ZPoly derivative(const ZPoly& p);

// lc(b)^(deg a - deg b + 1) * a mod b. Requires b != 0.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

// Returns a / b when b divides a exactly over Z, nullopt otherwise.
std::optional<ZPoly> try_div_exact(const ZPoly& a, const ZPoly& b);
// Throws std::domain_error when the division is not exact.
ZPoly div_exact(const ZPoly& a, const ZPoly& b);
ZPoly div_exact(const ZPoly& a, const Integer& c);

// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const ZPoly& p);
// p / content(p) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// Exact resultant via the subresultant PRS.
Integer resultant(const ZPoly& a, const ZPoly& b);
// Primitive squarefree part, positive leading coefficient. p != 0.
ZPoly squarefree_part(const ZPoly& p);
bool is_squarefree(const ZPoly& p);

Rational eval(const ZPoly& p, const Rational& x);
Integer eval(const ZPoly& p, const Integer& x);
int sign_at(const ZPoly& p, const Rational& x);

// p(x + a)
ZPoly taylor_shift(const ZPoly& p, const Integer& a);
// p(c * x)
ZPoly scale_variable(const ZPoly& p, const Integer& c);
// p(-x)
ZPoly negate_variable(const ZPoly& p);
// x^deg(p) * p(1/x)
ZPoly reverse(const ZPoly& p);

// Sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const ZPoly& p);

// Exact division by the primitive linear factor of a rational root.
ZPoly deflate_root(const ZPoly& p, const Rational& r);

}  // namespace kbound
