#include "kbound/realroots.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kbound;

namespace {

const MultiPoly k = MultiPoly::variable("k");
const MultiPoly x = MultiPoly::variable("x");
MultiPoly c(long v) { return MultiPoly(v); }
MultiPoly q(long n, long d) { return MultiPoly(make_rational(n, d)); }

MultiPoly quartic() { return pow(k, 4) + c(2) * pow(k, 3) - c(5) * k * k - c(6) * k - c(23); }

MultiPoly ex1_candidate() {
  return (k * k + k + c(1)) * (pow(k, 4) + c(2) * pow(k, 3) - q(107, 7) * k * k - q(114, 7) * k - q(89, 7)) *
         quartic() * (k * k + k + q(19, 27));
}

Rational R(long n, long d = 1) { return make_rational(n, d); }

// The interval holds exactly one root of p.
bool isolates(const MultiPoly& p, const IsolInterval& iv) {
  if (iv.is_degenerate()) return eval_at(p, {{p.variables()[0], iv.lo}}) == 0;
  return count_roots_in(p, iv.lo, iv.hi) == 1;
}

bool same_root(const MultiPoly& p, const IsolInterval& a, const IsolInterval& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) return false;
  if (lo == hi) return eval_at(p, {{p.variables()[0], lo}}) == 0;
  auto sgn_at = [&](const Rational& t) { return sign(eval_at(p, {{p.variables()[0], t}})); };
  if (sgn_at(lo) == 0 || sgn_at(hi) == 0) return true;
  return count_roots_in(p, lo, hi) == 1;
}

}  // namespace

TEST_CASE("isolation of the four-factor candidate matches the published intervals") {
  MultiPoly f2 = ex1_candidate();
  auto roots = isolate_real_roots(f2);
  REQUIRE(roots.size() == 4);
  std::vector<IsolInterval> published{{R(-597, 128), R(-149, 32)},
                                      {R(-447, 128), R(-223, 64)},
                                      {R(159, 64), R(319, 128)},
                                      {R(117, 32), R(469, 128)}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(isolates(f2, roots[i]));
    CHECK(same_root(f2, roots[i], published[i]));
  }
}

TEST_CASE("rational roots are reported as degenerate intervals") {
  MultiPoly p = (k + c(2)) * (k - c(4)) * (k * k - c(3));
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == IsolInterval{R(-2), R(-2)});
  CHECK(roots[3] == IsolInterval{R(4), R(4)});
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
  CHECK(isolate_real_roots(k * (k - c(1))).size() == 2);
}

TEST_CASE("non-squarefree or multivariate input is rejected") {
  CHECK_THROWS_AS(isolate_real_roots(pow(k - c(1), 2)), UsageError);
  CHECK_THROWS_AS(isolate_real_roots(k * x - c(1)), UsageError);
  CHECK_THROWS_AS(isolate_real_roots(MultiPoly()), UsageError);
  CHECK(isolate_real_roots(c(3)).empty());
}

TEST_CASE("sqrt 2 isolation and refinement") {
  auto roots = real_roots(x * x - c(2));
  REQUIRE(roots.size() == 2);
  auto r = refine_to_width(roots[1], R(1, 1000000));
  CHECK(r.interval.lo >= roots[1].interval.lo);
  CHECK(r.interval.hi <= roots[1].interval.hi);
  CHECK(r.interval.hi - r.interval.lo <= R(1, 1000000));
  CHECK(r.interval.lo < R(1414214, 1000000));
  CHECK(r.interval.hi > R(1414213, 1000000));
  CHECK(algnum_approx(roots[0], 8) == "-1.41421356");
  auto deg = make_algebraic(x - c(3), {R(3), R(3)});
  CHECK(refine_to_width(deg, R(1, 10)).interval == deg.interval);
}

TEST_CASE("Sturm counts") {
  CHECK(count_roots_in(quartic(), R(159, 64), R(319, 128)) == 1);
  CHECK(count_roots_in(x * x + c(1), R(-10), R(10)) == 0);
  CHECK(count_roots_in(x * x - c(2), R(-10), R(10)) == 2);
  CHECK_THROWS_AS(count_roots_in(x - c(1), R(1), R(2)), UsageError);
  CHECK_THROWS_AS(count_roots_in(x - c(1), R(2), R(1)), UsageError);
}

TEST_CASE("sign at an algebraic number") {
  auto k1 = make_algebraic(quartic(), {R(159, 64), R(319, 128)});
  CHECK(algnum_sign_at(k1, quartic()) == 0);
  CHECK(algnum_sign_at(k1, k - q(5, 2)) == -1);
  CHECK(algnum_sign_at(k1, k) == 1);
  CHECK(algnum_sign_at(k1, ex1_candidate()) == 0);
  CHECK(algnum_sign_at(k1, (k * k + k + c(1)) * (k - q(5, 2))) == -1);
  // Stable under refinement.
  auto fine = refine_to_width(k1, R(1, 1 << 30));
  CHECK(algnum_sign_at(fine, k - q(2484435, 1000000)) == algnum_sign_at(k1, k - q(2484435, 1000000)));
  CHECK(algnum_approx(k1, 9) == "2.484435332");
}

TEST_CASE("sample points") {
  auto s = sample_between({{R(0), R(0)}, {R(1), R(1)}});
  CHECK(s == std::vector<Rational>{R(-1), R(1, 2), R(2)});
  CHECK(sample_between({}) == std::vector<Rational>{R(0)});
  auto roots = isolate_real_roots(ex1_candidate());
  auto t = sample_between(roots);
  REQUIRE(t.size() == 5);
  CHECK(t.back() > R(469, 128));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(t[i] < roots[i].lo);
    CHECK(t[i + 1] > roots[i].hi);
  }
  CHECK_THROWS_AS(sample_between({{R(0), R(2)}, {R(1), R(3)}}), UsageError);
  CHECK(simplest_between(R(1, 3), R(2, 3)) == R(1, 2));
  CHECK(simplest_between(R(-7, 2), R(7, 2)) == R(0));
  CHECK(simplest_between(R(3, 10), R(4, 10)) == R(1, 3));
  CHECK(simplest_between(R(-4, 10), R(-3, 10)) == R(-1, 3));
  CHECK(simplest_between(R(0), R(1)) == R(1, 2));
}

TEST_CASE("isolation finds exactly the roots of random products of rational linear factors") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> rs;
    int n = count(rng);
    while (static_cast<int>(rs.size()) < n) {
      Rational r = make_rational(num(rng), den(rng));
      if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
    }
    std::sort(rs.begin(), rs.end());
    MultiPoly p(1);
    for (const auto& r : rs) p = p * (x - MultiPoly(r));
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(roots[i].lo <= rs[i]);
      CHECK(rs[i] <= roots[i].hi);
    }
  }
}

TEST_CASE("Sturm count agrees with isolation on random squarefree polynomials") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> deg(1, 7);
  int checked = 0;
  while (checked < 200) {
    auto dense = oracle::random_dense(rng, deg(rng), -6, 6);
    MultiPoly p = squarefree_part(oracle::dense_to_poly(dense, "x"));
    if (p.is_constant()) continue;
    ++checked;
    auto roots = isolate_real_roots(p);
    ZPoly z = to_zpoly(p, "x");
    Rational bound(64);
    CHECK(count_roots_in(p, -bound, bound) == static_cast<int>(roots.size()));
    for (const auto& iv : roots) {
      if (iv.is_degenerate()) {
        CHECK(sign_at(z, iv.lo) == 0);
      } else {
        CHECK(sign_at(z, iv.lo) * sign_at(z, iv.hi) < 0);
        CHECK(count_roots_in(p, iv.lo, iv.hi) == 1);
      }
    }
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
  }
}
