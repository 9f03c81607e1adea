#include <benchmark/benchmark.h>

#include <whanoi/engine.hpp>
#include <whanoi/models.hpp>
#include <whanoi/oracle.hpp>

namespace {

using namespace whanoi;

void BM_DpSolveConstant(benchmark::State& state) {
  const auto w = models::lower(models::ConstantNonuniform{Cost(7)});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine::dp_solve(w, n));
}
BENCHMARK(BM_DpSolveConstant)->Arg(16)->Arg(64)->Arg(256);

void BM_DpSolveRational(benchmark::State& state) {
  const auto w = models::lower(models::Geometric{Cost(Rational(1, 3)), Cost(Rational(5, 2))});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine::dp_solve(w, n));
}
BENCHMARK(BM_DpSolveRational)->Arg(16)->Arg(64);

void BM_Dijkstra(benchmark::State& state) {
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const State from = State::perfect(n, Peg{0});
  const State to = State::perfect(n, Peg{2});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::dijkstra(w, n, from, to));
  state.SetComplexityN(static_cast<long>(state_count(n)));
}
BENCHMARK(BM_Dijkstra)->DenseRange(4, 9)->Complexity();

void BM_CountShortestPaths(benchmark::State& state) {
  const auto w = WeightTable::constant(Cost(1), Cost(2), Cost(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::count_shortest_paths(w, n, State::perfect(n, Peg{0}), State::perfect(n, Peg{1})));
  }
}
BENCHMARK(BM_CountShortestPaths)->Arg(6)->Arg(8);

void BM_PlanStream(benchmark::State& state) {
  const auto w = WeightTable::constant(Cost(1), Cost(5), Cost(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto stream = engine::stream_plan(w, n, Peg{0}, Peg{2}, engine::TiePolicy::OneLdm);
    std::size_t moves = 0;
    while (stream.next()) ++moves;
    benchmark::DoNotOptimize(moves);
  }
}
BENCHMARK(BM_PlanStream)->Arg(10)->Arg(14);

void BM_ClosedForms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const models::ModelSpec model = models::PolynomialCosts{models::Polynomial::shifted_power(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(models::closed_form(model, n));
}
BENCHMARK(BM_ClosedForms)->Arg(64)->Arg(1024);

void BM_ConstantNonuniformClosed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(models::constant_nonuniform_closed(Rational(7), n));
}
BENCHMARK(BM_ConstantNonuniformClosed)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
