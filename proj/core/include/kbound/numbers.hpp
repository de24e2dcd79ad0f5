#pragma once

// Exact integer and rational scalars, backed by GMP.

#include <gmpxx.h>

#include <string>

namespace kbound {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Canonicalized n/d; d must be nonzero.
Rational make_rational(const Integer& n, const Integer& d);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

Integer pow(const Integer& base, unsigned long e);
Rational pow(const Rational& base, unsigned long e);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace kbound
