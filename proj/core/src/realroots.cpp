#include "kbound/realroots.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"

#include <algorithm>

namespace kbound {

namespace {

std::string univariate_var(const MultiPoly& p) {
  if (p.variables().size() > 1) throw UsageError("expected a univariate polynomial, got " + to_string(p));
  return p.variables().empty() ? std::string() : p.variables()[0];
}

ZPoly zpoly_of(const MultiPoly& p) {
  if (p.is_zero()) return {};
  return to_zpoly(p, univariate_var(p));
}

// Smallest e >= 0 with 2^e above the Cauchy bound 1 + max |a_i / a_n|.
unsigned long cauchy_exponent(const ZPoly& p) {
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeffs()[static_cast<std::size_t>(i)])));
  Integer bound = m / abs(p.lc()) + 2;  // > 1 + max ratio
  unsigned long e = 0;
  Integer pw = 1;
  while (pw < bound) {
    pw *= 2;
    ++e;
  }
  return e;
}

// 2^n q(t / 2) for q of degree n.
ZPoly halve(const ZPoly& q) {
  std::vector<Integer> c = q.coeffs();
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i < n; ++i) mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), n - i);
  return ZPoly(std::move(c));
}

// Sign variations of (t + 1)^n q(1 / (t + 1)), a bound on the roots in (0, 1).
int descartes_unit(const ZPoly& q) { return sign_variations(taylor_shift(reverse(q), Integer(1))); }

ZPoly divide_by_t(const ZPoly& q) {
  std::vector<Integer> c(q.coeffs().begin() + 1, q.coeffs().end());
  return ZPoly(std::move(c));
}

struct VcaContext {
  Rational scale;  // roots of q in (0, 1) map to scale * (c + t) / 2^k
  std::vector<IsolInterval> out;
};

Rational unit_point(const VcaContext& ctx, const Integer& num, unsigned long k) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return ctx.scale * make_rational(num, den);
}

void vca(VcaContext& ctx, const ZPoly& q, const Integer& c, unsigned long k) {
  if (q.degree() <= 0) return;
  int v = descartes_unit(q);
  if (v == 0) return;
  if (v == 1) {
    ctx.out.push_back({unit_point(ctx, c, k), unit_point(ctx, c + 1, k)});
    return;
  }
  ZPoly left = halve(q);
  ZPoly right = taylor_shift(left, Integer(1));
  bool mid_root = right.coeffs().front() == 0;
  if (mid_root) {
    right = divide_by_t(right);
    left = div_exact(left, ZPoly(std::vector<Integer>{Integer(-1), Integer(1)}));
  }
  vca(ctx, left, 2 * c, k + 1);
  if (mid_root) {
    Rational m = unit_point(ctx, 2 * c + 1, k + 1);
    ctx.out.push_back({m, m});
  }
  vca(ctx, right, 2 * c + 1, k + 1);
}

std::vector<IsolInterval> positive_roots(const ZPoly& p) {
  unsigned long e = cauchy_exponent(p);
  Integer b = 1;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e);
  VcaContext ctx{Rational(b), {}};
  vca(ctx, scale_variable(p, b), Integer(0), 0);
  return std::move(ctx.out);
}

// Halves a non-degenerate isolating interval of the squarefree q, keeping
// the root. Returns a degenerate interval when the midpoint is the root.
IsolInterval bisect(const ZPoly& q, const IsolInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = sign_at(q, mid);
  if (sm == 0) return {mid, mid};
  if (sm == sign_at(q, iv.lo)) return {mid, iv.hi};
  return {iv.lo, mid};
}

// The root of q in the open interval when it is rational. A rational root
// n/d has d | lc(q), and two such numbers differ by at least 1/lc^2, so once
// the interval is narrower the simplest rational inside is the only one.
std::optional<Rational> rational_root_in(const ZPoly& q, IsolInterval iv) {
  Rational s = simplest_between(iv.lo, iv.hi);
  if (sign_at(q, s) == 0) return s;
  Integer l = abs(q.lc());
  Rational width = make_rational(Integer(1), l * l);
  while (iv.hi - iv.lo >= width) {
    iv = bisect(q, iv);
    if (iv.is_degenerate()) return iv.lo;
  }
  s = simplest_between(iv.lo, iv.hi);
  if (sign_at(q, s) == 0) return s;
  return std::nullopt;
}

}  // namespace

ZPoly AlgebraicNumber::zpoly() const { return zpoly_of(defpoly); }

std::vector<IsolInterval> isolate_real_roots(const ZPoly& p0) {
  if (p0.is_zero()) throw UsageError("root isolation of the zero polynomial");
  if (!is_squarefree(p0)) throw UsageError("root isolation requires a squarefree polynomial");
  std::vector<IsolInterval> roots;
  if (p0.degree() <= 0) return roots;
  ZPoly p = p0;
  bool zero_root = p.coeffs().front() == 0;
  if (zero_root) p = divide_by_t(p);
  if (p.degree() > 0) {
    auto neg = positive_roots(negate_variable(p));
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) roots.push_back({-it->hi, -it->lo});
  }
  if (zero_root) roots.push_back({Rational(0), Rational(0)});
  if (p.degree() > 0) {
    auto pos = positive_roots(p);
    roots.insert(roots.end(), pos.begin(), pos.end());
  }

  // Divide out the rational roots so endpoint roots can be moved off.
  ZPoly reduced = p0;
  for (const auto& iv : roots) {
    if (iv.is_degenerate()) reduced = deflate_root(reduced, iv.lo);
  }
  for (auto& iv : roots) {
    while (!iv.is_degenerate() && (sign_at(p0, iv.lo) == 0 || sign_at(p0, iv.hi) == 0)) {
      iv = bisect(reduced, iv);
    }
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].hi >= roots[i + 1].lo) {
      IsolInterval& a = roots[i];
      IsolInterval& b = roots[i + 1];
      bool split_a = !a.is_degenerate() && (b.is_degenerate() || a.hi - a.lo >= b.hi - b.lo);
      if (split_a) {
        a = bisect(reduced, a);
      } else {
        b = bisect(reduced, b);
      }
    }
  }
  return roots;
}

std::vector<IsolInterval> isolate_real_roots(const MultiPoly& p) {
  if (p.is_zero()) throw UsageError("root isolation of the zero polynomial");
  univariate_var(p);
  return isolate_real_roots(zpoly_of(p));
}

AlgebraicNumber make_algebraic(const MultiPoly& defpoly, const IsolInterval& interval) {
  if (interval.lo > interval.hi) throw UsageError("isolating interval with lo > hi");
  AlgebraicNumber a{normalize(defpoly), interval, std::nullopt};
  ZPoly z = a.zpoly();
  if (z.degree() <= 0) throw UsageError("defining polynomial must have positive degree");
  if (interval.is_degenerate()) {
    if (sign_at(z, interval.lo) != 0) throw UsageError("degenerate interval is not a root");
    a.rational_value = interval.lo;
  } else if (sign_at(z, interval.lo) * sign_at(z, interval.hi) >= 0) {
    throw UsageError("interval does not bracket a sign change");
  } else {
    a.rational_value = rational_root_in(z, interval);
  }
  return a;
}

std::vector<AlgebraicNumber> real_roots(const MultiPoly& p) {
  std::vector<AlgebraicNumber> out;
  MultiPoly n = normalize(p);
  for (const auto& iv : isolate_real_roots(n)) out.push_back(make_algebraic(n, iv));
  return out;
}

SturmSequence::SturmSequence(const ZPoly& p) {
  if (p.degree() <= 0) {
    seq_.push_back(p);
    return;
  }
  seq_.push_back(primitive_part(p));
  seq_.push_back(primitive_part(derivative(p)));
  while (true) {
    const ZPoly& a = seq_[seq_.size() - 2];
    const ZPoly& b = seq_.back();
    ZPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    int delta = a.degree() - b.degree();
    bool flip = b.lc() < 0 && (delta + 1) % 2 == 1;
    // prem = lc^(delta+1) * rem; the next element is -rem up to a positive factor.
    ZPoly next = flip ? r : -r;
    Integer c = content(next);
    seq_.push_back(div_exact(next, c));
    if (seq_.back().degree() == 0) break;
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int last = 0;
  int v = 0;
  for (const auto& s : seq_) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int count_roots_in(const ZPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw UsageError("root count of the zero polynomial");
  if (!(a < b)) throw UsageError("root count needs a < b");
  if (sign_at(p, a) == 0 || sign_at(p, b) == 0) throw UsageError("root count endpoint is a root");
  return SturmSequence(p).count(a, b);
}

int count_roots_in(const MultiPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw UsageError("root count of the zero polynomial");
  return count_roots_in(zpoly_of(p), a, b);
}

AlgebraicNumber refine_to_width(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw UsageError("refinement width must be positive");
  if (a.interval.is_degenerate()) return a;
  AlgebraicNumber r = a;
  ZPoly z = a.zpoly();
  while (r.interval.hi - r.interval.lo > width) {
    r.interval = bisect(z, r.interval);
    if (r.interval.is_degenerate()) {
      r.rational_value = r.interval.lo;
      break;
    }
  }
  return r;
}

namespace {

// Least-denominator rational in (a, b) with a >= 0 and b possibly infinite.
Rational stern_brocot(const Rational& a, const std::optional<Rational>& b) {
  Integer fl = floor(a);
  Rational n(fl + 1);
  if (!b || n < *b) return n;
  Rational lo_inv = Rational(1) / (*b - Rational(fl));
  std::optional<Rational> hi_inv;
  if (a != Rational(fl)) hi_inv = Rational(1) / (a - Rational(fl));
  Rational y = stern_brocot(lo_inv, hi_inv);
  return Rational(fl) + Rational(1) / y;
}

}  // namespace

Rational simplest_between(const Rational& a, const Rational& b) {
  if (!(a < b)) throw UsageError("simplest_between needs a < b");
  Integer shift = a < 0 ? Integer(-floor(a)) : Integer(0);
  Rational s = stern_brocot(a + Rational(shift), Rational(b + Rational(shift)));
  Integer d = s.get_den();
  Rational mid = (a + b) / 2;
  Integer lo_n = floor(a * Rational(d)) + 1;
  Integer hi_n = ceil(b * Rational(d)) - 1;
  Integer n = floor(mid * Rational(d) + Rational(1, 2));
  // floor(x + 1/2) rounds ties up; prefer the smaller on an exact tie.
  if (make_rational(n, d) - mid == mid - make_rational(n - 1, d)) n -= 1;
  n = std::clamp(n, lo_n, hi_n);
  return make_rational(n, d);
}

std::vector<Rational> sample_between(const std::vector<IsolInterval>& intervals) {
  if (intervals.empty()) return {Rational(0)};
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    if (intervals[i].lo > intervals[i].hi || !(intervals[i].hi < intervals[i + 1].lo)) {
      throw UsageError("sample_between needs disjoint sorted intervals");
    }
  }
  std::vector<Rational> out;
  out.emplace_back(floor(intervals.front().lo) - 1);
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    out.push_back(simplest_between(intervals[i].hi, intervals[i + 1].lo));
  }
  out.emplace_back(ceil(intervals.back().hi) + 1);
  return out;
}

IsolInterval interval_eval(const ZPoly& q, const IsolInterval& x) {
  if (q.is_zero()) return {Rational(0), Rational(0)};
  Rational lo(q.lc());
  Rational hi(q.lc());
  for (int i = q.degree() - 1; i >= 0; --i) {
    Rational p1 = lo * x.lo;
    Rational p2 = lo * x.hi;
    Rational p3 = hi * x.lo;
    Rational p4 = hi * x.hi;
    Rational c(q.coeffs()[static_cast<std::size_t>(i)]);
    lo = std::min({p1, p2, p3, p4}) + c;
    hi = std::max({p1, p2, p3, p4}) + c;
  }
  return {lo, hi};
}

int algnum_sign_at(const AlgebraicNumber& a, const MultiPoly& q) {
  if (q.is_constant()) return sign(q.constant_value());
  std::string v = univariate_var(a.defpoly);
  if (univariate_var(q) != v) throw UsageError("sign query in a different variable than the algebraic number");
  ZPoly Q = to_zpoly(q, v);
  if (a.rational_value) return sign_at(Q, *a.rational_value);
  ZPoly D = a.zpoly();
  ZPoly g = gcd(Q, D);
  if (g.degree() > 0 && sign_at(g, a.interval.lo) * sign_at(g, a.interval.hi) < 0) return 0;
  IsolInterval iv = a.interval;
  while (true) {
    IsolInterval e = interval_eval(Q, iv);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    iv = bisect(D, iv);
    if (iv.is_degenerate()) return sign_at(Q, iv.lo);
  }
}

std::string algnum_approx(const AlgebraicNumber& a, int digits) {
  if (digits <= 0) throw UsageError("digits must be positive");
  Integer ten_d = pow(Integer(10), static_cast<unsigned long>(digits));
  Rational width = make_rational(Integer(1), ten_d * 100);
  AlgebraicNumber r = refine_to_width(a, width);
  Rational mid = (r.interval.lo + r.interval.hi) / 2;
  Integer n = floor(mid * Rational(ten_d) + Rational(1, 2));
  bool neg = n < 0;
  std::string s = Integer(abs(n)).get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return neg ? "-" + s : s;
}

}  // namespace kbound
