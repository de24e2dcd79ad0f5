#include "kbound/projection.hpp"

#include "kbound/polyring.hpp"
#include "kbound/realroots.hpp"
#include "paper_examples.hpp"

#include <doctest.h>

using namespace kbound;
using namespace kbound::examples;

namespace {
const MultiPoly x = v("x");
const MultiPoly y = v("y");
const MultiPoly k = v("k");
const MultiPoly a = v("a");
const MultiPoly b = v("b");
const MultiPoly u = v("u");
}  // namespace

TEST_CASE("single projection steps") {
  CHECK(project_step(x * x - k, "x", {"k"}) == k);
  CHECK(project_step(x * x - n(2) * k * x + n(1), "x", {"k"}) == k * k - n(1));
  CHECK_THROWS_AS(project_step(x * x + n(1), "x", {"k"}), DegenerateProjection);
  CHECK_THROWS_AS(project_step(k, "x", {"k"}), UsageError);
}

TEST_CASE("deflated and direct projection agree") {
  MultiPoly p = pow(x, 4) - k * x * x + y;
  ProjectionStep step;
  MultiPoly r = project_step(p, "x", {"k", "y"}, &step);
  CHECK(step.deflation == 2);
  CHECK(r == powerfree(resultant(p, derivative(p, "x"), "x"), {"k", "y"}));
  MultiPoly q = pow(x, 6) + k * pow(x, 3) - y;
  CHECK(project_step(q, "x", {"k", "y"}) == powerfree(resultant(q, derivative(q, "x"), "x"), {"k", "y"}));
}

TEST_CASE("zero resultant is retried on the squarefree part") {
  MultiPoly p = pow(x - k, 2) * (x + n(1)) * (k + n(3));
  ProjectionStep step;
  MultiPoly r = project_step(p, "x", {"k"}, &step);
  CHECK(step.squarefree_retry);
  CHECK(r == normalize((k + n(1)) * (k + n(3))));
}

TEST_CASE("radical elimination") {
  CHECK(radical_eliminate(u * k, {{"u", u * u - x * x}}, "k") == normalize(x * k));
  CHECK(radical_eliminate(x + k, {}, "k") == x + k);
  ProjectionTrace t;
  MultiPoly f0 = radical_eliminate(ex3_F(), {{"u", u * u - ex3_radicand()}}, "k", &t);
  REQUIRE(t.steps.size() == 1);
  CHECK(f0.degree("k") == 2);
  CHECK(f0.degree("x") == 8);
  CHECK(f0.degree("y") == 20);
  CHECK_FALSE(f0.depends_on("u"));
}

TEST_CASE("radical elimination of a bare section variable") {
  // p = u, h = u^2 - x^2: resultant -x^2, squarefree x.
  MultiPoly r = resultant(u, u * u - x * x, "u");
  CHECK(r == -(x * x));
  CHECK(powerfree(r, r.variables()) == x);
}

TEST_CASE("decider projection sets") {
  auto s1 = decider_projection({x * x - n(2) * k * x + n(1)}, "x", {"k"});
  CHECK(s1 == std::vector<MultiPoly>{k * k - n(1)});
  auto s2 = decider_projection({x - a, x - b}, "x", {"a", "b"});
  CHECK(std::find(s2.begin(), s2.end(), normalize(a - b)) != s2.end());
  auto s3 = decider_projection({(k + n(1)) * x * x + n(1)}, "x", {"k"});
  CHECK(std::find(s3.begin(), s3.end(), k + n(1)) != s3.end());
  for (const auto& p : s2) CHECK_FALSE(p.depends_on("x"));
  CHECK(decider_projection({x * x + n(1)}, "x", {}).empty());
}

TEST_CASE("successive projection of the first example reproduces the published candidate") {
  ProjectionTrace t = successive_projection(ex1_F(), {"x", "y", "z"}, "k");
  CHECK(t.final.degree("k") == 12);
  CHECK(equal_up_to_constant(t.final, ex1_f2()));
  for (const auto& s : t.steps) CHECK(squarefree_part(s.result) == s.result);
  auto roots = isolate_real_roots(t.final);
  REQUIRE(roots.size() == 4);
  auto published = ex1_intervals();
  for (std::size_t i = 0; i < 4; ++i) CHECK(brackets_same_root(t.final, published[i], roots[i]));
}

TEST_CASE("successive projection of the second example reproduces the published candidate") {
  ProjectionTrace t = successive_projection(ex2_F(), {"x", "y", "z"}, "k");
  CHECK(t.final.degree("k") == 16);
  CHECK(equal_up_to_constant(t.final, ex2_f2()));
  auto roots = isolate_real_roots(t.final);
  REQUIRE(roots.size() == 12);
  auto published = ex2_intervals();
  for (std::size_t i = 0; i < 12; ++i) CHECK(brackets_same_root(t.final, published[i], roots[i]));
}

TEST_CASE("projection collapse carries the partial trace") {
  MultiPoly p = pow(n(2) * x + k, 2) * (y * y + n(1));
  try {
    successive_projection(p, {"y", "x"}, "k");
    FAIL("expected a projection collapse");
  } catch (const ProjectionCollapse& e) {
    CHECK(e.partial().final.depends_on("x"));
  }
  CHECK_THROWS_AS(successive_projection(x * x + y, {"x"}, "k"), UsageError);
}
