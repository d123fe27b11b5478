#include <benchmark/benchmark.h>

#include "ainf/algebra.hpp"
#include "ainf/diagrams.hpp"

namespace {

using namespace ainf;

std::shared_ptr<const AInfAlgebra> unit_only_products() {
  const Ring z = Ring::integers();
  GradedBasis b({{"1", 0}, {"x", 1}, {"y", 0}}, "1");
  MultiMap m2(z, Arity::plain(2), Codomain::Algebra, 0);
  for (Letter a = 0; a < 3; ++a) {
    m2.add({0, a}, a, Scalar::one(z));
    if (a) m2.add({a, 0}, a, Scalar::one(z));
  }
  return std::make_shared<const AInfAlgebra>(z, b, std::map<int, MultiMap>{{2, m2}});
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagrams::enumerate_all(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DSquared(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagrams::check_d_squared(n));
}
BENCHMARK(BM_DSquared)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagrams::homology_ranks(n));
}
BENCHMARK(BM_Homology)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CheckRelations(benchmark::State& state) {
  const auto alg = unit_only_products();
  CheckOptions o;
  o.bound = static_cast<int>(state.range(0));
  o.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(*alg, o));
}
BENCHMARK(BM_CheckRelations)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
