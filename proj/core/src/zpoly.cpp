#include "kbound/zpoly.hpp"

#include "kbound/detail/prs.hpp"

#include <algorithm>
#include <stdexcept>

namespace kbound {

namespace {

struct IntegerOps {
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  bool is_zero(const Integer& z) const { return z == 0; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  Integer sub(const Integer& a, const Integer& b) const { return a - b; }
  Integer neg(const Integer& a) const { return -a; }
  Integer div_exact(const Integer& a, const Integer& b) const {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

}  // namespace

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const Integer& c) { return ZPoly(std::vector<Integer>{c}); }

ZPoly ZPoly::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> v(degree + 1U, Integer(0));
  v[degree] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Integer& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ZPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Integer a = abs(c);
    if (i == 0 || a != 1) os << a << (i > 0 ? "*" : "");
    if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os;
}

ZPoly derivative(const ZPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Integer> r(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(r));
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  return ZPoly(detail::pseudo_remainder(a.coeffs(), b.coeffs(), IntegerOps{}));
}

std::optional<ZPoly> try_div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return ZPoly{};
  const int n = b.degree();
  int m = a.degree();
  if (m < n) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(m - n + 1));
  const Integer& lcb = b.lc();
  for (int e = m; e >= n; --e) {
    Integer& lead = r[static_cast<std::size_t>(e)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), lead.get_mpz_t(), lcb.get_mpz_t());
    for (int j = 0; j <= n; ++j) {
      mpz_submul(r[static_cast<std::size_t>(e - n + j)].get_mpz_t(), qc.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(e - n)] = std::move(qc);
  }
  for (int i = 0; i < n; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return ZPoly(std::move(q));
}

ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
  auto q = try_div_exact(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *q;
}

ZPoly div_exact(const ZPoly& a, const Integer& c) {
  std::vector<Integer> r = a.coeffs();
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return ZPoly(std::move(r));
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.lc() < 0) c = -c;
  if (c == 1) return p;
  return div_exact(p, c);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return ZPoly::constant(1);
  ZPoly u = primitive_part(a);
  ZPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  // Primitive PRS.
  while (true) {
    ZPoly r = pseudo_remainder(u, v);
    if (r.is_zero()) return v;
    if (r.degree() == 0) return ZPoly::constant(1);
    u = std::move(v);
    v = primitive_part(r);
  }
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Integer ca = content(a);
  Integer cb = content(b);
  ZPoly pa = div_exact(a, ca);
  ZPoly pb = div_exact(b, cb);
  Integer core = detail::subresultant_resultant(pa.coeffs(), pb.coeffs(), IntegerOps{});
  return core * pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  ZPoly pp = primitive_part(p);
  if (pp.degree() <= 0) return ZPoly::constant(1);
  ZPoly g = gcd(pp, derivative(pp));
  if (g.degree() == 0) return pp;
  return primitive_part(div_exact(pp, g));
}

bool is_squarefree(const ZPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

Rational eval(const ZPoly& p, const Rational& x) {
  // Homogenized Horner: sum c_i n^i d^(deg-i), divided by d^deg.
  if (p.is_zero()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = p.lc();
  Integer dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= n;
    dpow *= d;
    mpz_addmul(acc.get_mpz_t(), p.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), dpow.get_mpz_t());
  }
  return make_rational(acc, dpow);
}

Integer eval(const ZPoly& p, const Integer& x) {
  if (p.is_zero()) return 0;
  Integer acc = p.lc();
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= x;
    acc += p.coeffs()[static_cast<std::size_t>(i)];
  }
  return acc;
}

int sign_at(const ZPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = p.lc();
  Integer dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= n;
    dpow *= d;
    mpz_addmul(acc.get_mpz_t(), p.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), dpow.get_mpz_t());
  }
  return sgn(acc);
}

ZPoly taylor_shift(const ZPoly& p, const Integer& a) {
  if (p.degree() <= 0 || a == 0) return p;
  std::vector<Integer> c = p.coeffs();
  const int n = p.degree();
  if (a == 1) {
    for (int i = 0; i < n; ++i) {
      for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j + 1)];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = n - 1; j >= i; --j) {
        mpz_addmul(c[static_cast<std::size_t>(j)].get_mpz_t(), c[static_cast<std::size_t>(j + 1)].get_mpz_t(),
                   a.get_mpz_t());
      }
    }
  }
  return ZPoly(std::move(c));
}

ZPoly scale_variable(const ZPoly& p, const Integer& c) {
  std::vector<Integer> r = p.coeffs();
  Integer f = 1;
  for (auto& x : r) {
    x *= f;
    f *= c;
  }
  return ZPoly(std::move(r));
}

ZPoly negate_variable(const ZPoly& p) {
  std::vector<Integer> r = p.coeffs();
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return ZPoly(std::move(r));
}

ZPoly reverse(const ZPoly& p) {
  std::vector<Integer> r = p.coeffs();
  std::reverse(r.begin(), r.end());
  return ZPoly(std::move(r));
}

int sign_variations(const ZPoly& p) {
  int last = 0;
  int v = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

ZPoly deflate_root(const ZPoly& p, const Rational& r) {
  ZPoly lin(std::vector<Integer>{-r.get_num(), r.get_den()});
  return div_exact(p, lin);
}

}  // namespace kbound
