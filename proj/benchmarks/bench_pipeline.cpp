#include <benchmark/benchmark.h>

#include <vector>

#include "fixtures.hpp"
#include "painleve/classify/classify.hpp"
#include "random_expr.hpp"

using namespace painleve;

static void BM_Normalize(benchmark::State& state) {
  testing::RandomExpr gen(7);
  std::vector<expr::Expr> exprs;
  for (int i = 0; i < 32; ++i) exprs.push_back(gen(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const auto& e : exprs) benchmark::DoNotOptimize(expr::normalize(e));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(exprs.size()));
}
BENCHMARK(BM_Normalize)->Arg(3)->Arg(4)->Arg(5);

static void BM_Gcd(benchmark::State& state) {
  auto poly = [](const char* s) { return expr::to_rational_function(expr::parse(s)).numerator(); };
  auto a = poly("(x^3*y + 2*x*y^2 - 7*y + 3)*(x^2 - y^3 + x*y + 1)*(x*y^4 - 5*x + 2)");
  auto b = poly("(x^3*y + 2*x*y^2 - 7*y + 3)*(x^2 - y^3 + x*y + 1)*(y^2*x^3 + x - 9*y)");
  for (auto _ : state) benchmark::DoNotOptimize(state.range(0) ? expr::gcd(a, b) : expr::gcd_prs(a, b));
  state.SetLabel(state.range(0) ? "heuristic" : "prs");
}
BENCHMARK(BM_Gcd)->Arg(1)->Arg(0);

static void BM_Tower(benchmark::State& state) {
  std::vector<ode::OdeCubic> eqs{fixtures::shifted(), fixtures::radical(), fixtures::painleve_four()};
  const auto& e = eqs.at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariants::compute_invariants(e));
  state.SetLabel(e.label);
}
BENCHMARK(BM_Tower)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  auto src = fixtures::ince("1");
  auto dst = fixtures::radical("4");
  ode::PointTransform t{expr::parse("x/2^(2/3)"), expr::parse("-2*y^3"), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_transform(src, dst, t));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMicrosecond);

static void BM_TestP34(benchmark::State& state) {
  auto e = fixtures::rogers_b();
  for (auto _ : state) benchmark::DoNotOptimize(classify::test_p34(e));
}
BENCHMARK(BM_TestP34)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
