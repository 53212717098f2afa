// Serial reference vs OpenMP kernels on power graphs of growing order.

#include <benchmark/benchmark.h>

#include <vector>

#include "powerspectra/kernels.hpp"
#include "powerspectra/powergraph.hpp"

namespace ps = powerspectra;
namespace kn = powerspectra::kernels;

namespace {

ps::GroupSpec dihedral_of_order(std::int64_t order) { return ps::GroupSpec::dihedral(static_cast<std::uint32_t>(order / 2)); }

template <bool Parallel>
void BM_PowerGraphAdjacency(benchmark::State& state) {
  const auto g = dihedral_of_order(state.range(0));
  const auto ord = ps::canonical_ordering(g);
  for (auto _ : state) {
    auto m = Parallel ? kn::power_graph_adjacency(g, ord.vertices) : kn::serial::power_graph_adjacency(g, ord.vertices);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void BM_DiameterCheck(benchmark::State& state) {
  const auto adj = ps::build_definitional(dihedral_of_order(state.range(0)));
  for (auto _ : state) {
    bool ok = Parallel ? kn::diameter_at_most_two(adj) : kn::serial::diameter_at_most_two(adj);
    benchmark::DoNotOptimize(ok);
  }
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
  const auto adj = ps::build_definitional(dihedral_of_order(state.range(0)));
  std::vector<double> x(adj.dim(), 1.0);
  std::vector<double> y(adj.dim());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kn::matvec(adj, x, y);
    } else {
      kn::serial::matvec(adj, x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Parallel>
void BM_Jacobi(benchmark::State& state) {
  const ps::RealMatrix m(ps::distance_matrix(ps::build_definitional(dihedral_of_order(state.range(0)))));
  for (auto _ : state) {
    auto out = Parallel ? kn::jacobi_eigenvalues(m, 1e-12, 64) : kn::serial::jacobi_eigenvalues(m, 1e-12, 64);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_PowerGraphAdjacency<false>)->Name("adjacency/serial")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_PowerGraphAdjacency<true>)->Name("adjacency/omp")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_DiameterCheck<false>)->Name("diameter/serial")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_DiameterCheck<true>)->Name("diameter/omp")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_Matvec<false>)->Name("matvec/serial")->RangeMultiplier(2)->Range(64, 2048);
BENCHMARK(BM_Matvec<true>)->Name("matvec/omp")->RangeMultiplier(2)->Range(64, 2048);
BENCHMARK(BM_Jacobi<false>)->Name("jacobi/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Jacobi<true>)->Name("jacobi/omp")->RangeMultiplier(2)->Range(32, 256);

BENCHMARK_MAIN();
