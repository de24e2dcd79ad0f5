#include "kbound/zpoly.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace kbound;

namespace {

ZPoly Z(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

std::vector<Rational> to_dense(const ZPoly& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

ZPoly from_dense(const std::vector<Rational>& c) {
  std::vector<Integer> v;
  for (const auto& x : c) v.push_back(x.get_num());
  return ZPoly(std::move(v));
}

}  // namespace

TEST_CASE("zpoly arithmetic and trimming") {
  ZPoly a = Z({1, 1});   // x + 1
  ZPoly b = Z({-1, 1});  // x - 1
  CHECK(a * b == Z({-1, 0, 1}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(Z({0, 0, 0}).is_zero());
  CHECK(derivative(Z({1, 2, 3})) == Z({2, 6}));
}

TEST_CASE("zpoly gcd and exact division") {
  ZPoly p = Z({-1, 0, 1}) * Z({2, 1});
  ZPoly q = Z({-1, 0, 1}) * Z({3, 1});
  CHECK(gcd(p, q) == Z({-1, 0, 1}));
  CHECK(gcd(Z({1, 0, 1}), Z({-1, 0, 1})) == Z({1}));
  CHECK(*try_div_exact(p, Z({2, 1})) == Z({-1, 0, 1}));
  CHECK_FALSE(try_div_exact(p, Z({5, 1})).has_value());
}

TEST_CASE("zpoly resultant small cases") {
  // res(x^2 + 1, x^2 - 1) = 4
  CHECK(resultant(Z({1, 0, 1}), Z({-1, 0, 1})) == 4);
  CHECK(resultant(Z({-1, 0, 1}), Z({1, 1})) == 0);
  CHECK(resultant(Z({2, 0, 6}), Z({3, 3})) == oracle::sylvester_resultant(to_dense(Z({2, 0, 6})), to_dense(Z({3, 3}))));
}

TEST_CASE("zpoly resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_dense(rng, deg(rng), -5, 5);
    auto b = oracle::random_dense(rng, deg(rng), -5, 5);
    CHECK(Rational(resultant(from_dense(a), from_dense(b))) == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("zpoly squarefree part") {
  ZPoly p = Z({-1, 1}) * Z({-1, 1}) * Z({2, 1});
  CHECK(squarefree_part(p) == Z({-2, 1, 1}));
  CHECK(squarefree_part(squarefree_part(p)) == squarefree_part(p));
  CHECK(is_squarefree(Z({-2, 1, 1})));
  CHECK_FALSE(is_squarefree(p));
}

TEST_CASE("zpoly evaluation and transforms") {
  ZPoly p = Z({-2, 0, 1});
  CHECK(eval(p, Rational(3, 2)) == Rational(1, 4));
  CHECK(sign_at(p, Rational(1)) == -1);
  CHECK(taylor_shift(p, Integer(1)) == Z({-1, 2, 1}));
  CHECK(scale_variable(p, Integer(2)) == Z({-2, 0, 4}));
  CHECK(negate_variable(Z({1, 2, 3})) == Z({1, -2, 3}));
  CHECK(reverse(Z({1, 2, 3})) == Z({3, 2, 1}));
  CHECK(sign_variations(Z({1, 0, -1, 2})) == 2);
  CHECK(deflate_root(Z({-1, 0, 4}), Rational(1, 2)) == Z({1, 2}));
}
