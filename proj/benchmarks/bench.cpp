#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "neutro/fixtures.hpp"
#include "neutro/matrix.hpp"
#include "neutro/subgraph_space.hpp"
#include "neutro/subset_vertex.hpp"
#include "neutro/walks.hpp"

namespace {

neutro::Graph random_graph(std::size_t n, double edge_prob, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(edge_prob);
  std::bernoulli_distribution indet(0.3);
  neutro::Graph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("v" + std::to_string(i),
                 indet(rng) ? neutro::Kind::Indeterminate : neutro::Kind::Real);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) {
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(j),
                   indet(rng) ? neutro::Kind::Indeterminate
                              : neutro::Kind::Real);
      }
    }
  }
  return g;
}

void BM_adjacency_power(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 1);
  const auto a = neutro::adjacency(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neutro::pow(a, 8));
  }
}
BENCHMARK(BM_adjacency_power)->Arg(8)->Arg(16)->Arg(32);

void BM_count_subgraphs(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neutro::count_subgraphs(g));
  }
}
BENCHMARK(BM_count_subgraphs)->Arg(12)->Arg(16)->Arg(20);

void BM_build_subset_graph(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        neutro::build_type_one(g, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_build_subset_graph)->Arg(6)->Arg(8)->Arg(10);

void BM_circuit_census(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neutro::enumerate_circuits(g, 12));
  }
}
BENCHMARK(BM_circuit_census)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
