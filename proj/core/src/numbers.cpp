#include "kbound/numbers.hpp"

#include <stdexcept>

namespace kbound {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& base, unsigned long e) {
  Integer n = pow(base.get_num(), e);
  Integer d = pow(base.get_den(), e);
  Rational r;
  r.get_num() = n;
  r.get_den() = d;
  // gcd(n, d) = 1 already holds, and d > 0.
  return r;
}

}  // namespace kbound
