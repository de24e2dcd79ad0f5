#pragma once

// Univariate polynomial remainder sequences over an integral domain R.
// Polynomials are dense coefficient vectors (low to high) of R; the ring is
// described by an Ops type providing:
//   R zero() const; R one() const; bool is_zero(const R&) const;
//   R mul(const R&, const R&) const; R sub(const R&, const R&) const;
//   R neg(const R&) const; R div_exact(const R&, const R&) const;

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kbound::detail {

template <class R, class Ops>
void trim(std::vector<R>& p, const Ops& ops) {
  while (!p.empty() && ops.is_zero(p.back())) p.pop_back();
}

template <class R>
int degree(const std::vector<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R, class Ops>
R power(const R& base, unsigned e, const Ops& ops) {
  R result = ops.one();
  R b = base;
  while (e > 0) {
    if (e & 1U) result = ops.mul(result, b);
    e >>= 1U;
    if (e > 0) b = ops.mul(b, b);
  }
  return result;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R, class Ops>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b, const Ops& ops) {
  const int n = degree(b);
  if (n < 0) throw std::domain_error("pseudo-remainder by zero polynomial");
  int m = degree(a);
  if (m < n) return a;
  const R& lcb = b.back();
  for (int e = m; e >= n; --e) {
    R lead = a[static_cast<std::size_t>(e)];
    for (int i = 0; i < e; ++i) a[static_cast<std::size_t>(i)] = ops.mul(a[static_cast<std::size_t>(i)], lcb);
    a[static_cast<std::size_t>(e)] = ops.zero();
    if (!ops.is_zero(lead)) {
      for (int j = 0; j < n; ++j) {
        auto idx = static_cast<std::size_t>(e - n + j);
        a[idx] = ops.sub(a[idx], ops.mul(lead, b[static_cast<std::size_t>(j)]));
      }
    }
  }
  a.resize(static_cast<std::size_t>(n));
  trim(a, ops);
  return a;
}

// Resultant by the subresultant PRS (Collins / Brown-Traub). Both inputs must
// be nonzero. All divisions below are exact in R.
template <class R, class Ops>
R subresultant_resultant(std::vector<R> a, std::vector<R> b, const Ops& ops) {
  trim(a, ops);
  trim(b, ops);
  if (a.empty() || b.empty()) return ops.zero();
  int s = 1;
  if (degree(a) < degree(b)) {
    if ((degree(a) % 2 == 1) && (degree(b) % 2 == 1)) s = -s;
    std::swap(a, b);
  }
  if (degree(b) == 0) return power(b[0], static_cast<unsigned>(degree(a)), ops);
  R g = ops.one();
  R h = ops.one();
  while (true) {
    const int da = degree(a);
    const int db = degree(b);
    const int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
    std::vector<R> r = pseudo_remainder(a, b, ops);
    if (r.empty()) return ops.zero();
    a = std::move(b);
    R divisor = ops.mul(g, power(h, static_cast<unsigned>(delta), ops));
    b.clear();
    b.reserve(r.size());
    for (auto& c : r) b.push_back(ops.div_exact(c, divisor));
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = ops.div_exact(power(g, static_cast<unsigned>(delta), ops),
                        power(h, static_cast<unsigned>(delta - 1), ops));
    }
    if (degree(b) == 0) {
      const int dA = degree(a);
      R num = power(b[0], static_cast<unsigned>(dA), ops);
      R res = dA >= 1 ? ops.div_exact(num, power(h, static_cast<unsigned>(dA - 1), ops)) : num;
      return s < 0 ? ops.neg(res) : res;
    }
  }
}

}  // namespace kbound::detail
