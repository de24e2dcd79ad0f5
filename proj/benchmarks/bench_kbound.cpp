#include "kbound/decide.hpp"
#include "kbound/optimizer.hpp"
#include "kbound/parser.hpp"
#include "kbound/polyring.hpp"
#include "kbound/realroots.hpp"

#include <benchmark/benchmark.h>

using namespace kbound;

namespace {

const char* kEx1 =
    "parameter: k\n"
    "objective: a^3 + b^3 + c^3 + k*(a^2*b + b^2*c + c^2*a) - (k + 1)*(a*b^2 + b*c^2 + c*a^2)\n"
    "vars: a:nonneg, b:nonneg, c:nonneg\n";

const char* kEx2 =
    "parameter: k\n"
    "objective: 2*(a^3 + b^3 + c^3) + 3*k*a*b*c - (k + 2)*(a^2*b + b^2*c + c^2*a)\n"
    "vars: a:nonneg, b:nonneg, c:nonneg\n";

const char* kEx3 =
    "parameter: k\n"
    "objective: a^2*b^4 - k*a*b^3 + sqrt(a^2 + b^4)*a*b^3 + b^3 + a\n"
    "vars: a:nonneg, b:nonneg\n";

// x^n - n*x*y^(n-1) + y^n + k*x*y, eliminated in x.
void BM_Resultant(benchmark::State& state) {
  const long deg = state.range(0);
  MultiPoly p = parse_polynomial("x^" + std::to_string(deg) + " - " + std::to_string(deg) + "*x*y^" +
                                 std::to_string(deg - 1) + " + y^" + std::to_string(deg) + " + k*x*y");
  MultiPoly dp = derivative(p, "x");
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, dp, "x"));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// Linear factors with roots 16/i^2, slightly perturbed.
void BM_Isolation(benchmark::State& state) {
  const long n = state.range(0);
  MultiPoly k = MultiPoly::variable("k");
  MultiPoly p(1);
  for (long i = 1; i <= n; ++i) p = p * (MultiPoly(make_rational(i * i, 16)) * k - MultiPoly(1));
  p = p + MultiPoly(make_rational(1, 1000));
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(p));
}
BENCHMARK(BM_Isolation)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DeciderMotzkin(benchmark::State& state) {
  MultiPoly p = parse_polynomial("x^4*y^2 + x^2*y^4 - 3*x^2*y^2 + 1");
  for (auto _ : state) benchmark::DoNotOptimize(nonneg_forall(p, {"x", "y"}));
}
BENCHMARK(BM_DeciderMotzkin)->Unit(benchmark::kMillisecond);

void BM_Projection(benchmark::State& state) {
  ProblemSpec spec = preprocess(parse_problem(kEx1));
  for (auto _ : state) benchmark::DoNotOptimize(candidate_set(spec));
}
BENCHMARK(BM_Projection)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state, const char* problem) {
  ProblemSpec spec = parse_problem(problem);
  for (auto _ : state) benchmark::DoNotOptimize(solve(spec));
}
BENCHMARK_CAPTURE(BM_Solve, ex1, kEx1)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK_CAPTURE(BM_Solve, ex2, kEx2)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK_CAPTURE(BM_Solve, ex3, kEx3)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
