#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "latmax/cdim2.hpp"
#include "latmax/convex_geometry.hpp"
#include "latmax/sublattice.hpp"

using namespace latmax;

namespace {

std::vector<int> random_perm(std::size_t m, std::uint64_t seed) {
	std::vector<int> p(m);
	std::iota(p.begin(), p.end(), 1);
	std::mt19937_64 rng(seed);
	std::shuffle(p.begin(), p.end(), rng);
	return p;
}

void BM_FastComplements(benchmark::State& state) {
	const auto m = static_cast<std::size_t>(state.range(0));
	const auto phi = random_perm(m, 7);
	OpCounter last;
	for(auto _ : state) {
		FastResult r = fast_complements(m, phi);
		benchmark::DoNotOptimize(r.complements.data());
		last = r.ops;
	}
	state.SetComplexityN(state.range(0));
	state.counters["cmp_per_m"] = static_cast<double>(last.comparisons) / static_cast<double>(m);
	state.counters["set_ops"] = static_cast<double>(last.set_ops);
}
BENCHMARK(BM_FastComplements)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_BuildGeometry(benchmark::State& state) {
	const auto m = static_cast<std::size_t>(state.range(0));
	const auto phi = random_perm(m, 7);
	for(auto _ : state) {
		ConvexGeometry G = build_cdim2(phi, false);
		benchmark::DoNotOptimize(G.lattice().size());
	}
}
BENCHMARK(BM_BuildGeometry)->DenseRange(4, 12, 4);

void BM_Oracle(benchmark::State& state) {
	const auto m = static_cast<std::size_t>(state.range(0));
	const ConvexGeometry G = build_cdim2(random_perm(m, 7), false);
	for(auto _ : state) {
		auto comps = maximal_complements_oracle(G.lattice());
		benchmark::DoNotOptimize(comps.data());
	}
	state.counters["lattice_size"] = static_cast<double>(G.lattice().size());
}
BENCHMARK(BM_Oracle)->DenseRange(4, 10, 2);

void BM_GoldenExample(benchmark::State& state) {
	const std::vector<int> phi = {3, 6, 7, 10, 1, 8, 9, 5, 2, 4};
	for(auto _ : state) {
		auto list = materialize_all(phi, fast_complements(phi.size(), phi).complements);
		benchmark::DoNotOptimize(list.data());
	}
}
BENCHMARK(BM_GoldenExample);

}  // namespace

BENCHMARK_MAIN();
