#include "mshw/abc.hpp"
#include "mshw/model.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

double sphere(std::span<const double> p) {
	double s = 0.0;
	for (double v : p) {
		s += (v - 0.5) * (v - 0.5);
	}
	return s;
}

void BM_OptimizeSphere(benchmark::State& state) {
	mshw::AbcConfig cfg;
	cfg.max_error = 0.0;
	cfg.max_iter = static_cast<std::size_t>(state.range(0));
	std::uint64_t seed = 0;
	for (auto _ : state) {
		cfg.seed = seed++;
		benchmark::DoNotOptimize(mshw::optimize(sphere, 4, cfg).best_fitness);
	}
}
BENCHMARK(BM_OptimizeSphere)->Arg(10)->Arg(50);

void BM_OptimizeReplay(benchmark::State& state) {
	std::vector<double> x(300);
	for (std::size_t i = 0; i < x.size(); ++i) {
		x[i] = 50.0 + 0.2 * static_cast<double>(i) + 5.0 * std::sin(0.3 * static_cast<double>(i));
	}
	mshw::AbcConfig cfg;
	cfg.threads = static_cast<std::size_t>(state.range(0));
	for (auto _ : state) {
		benchmark::DoNotOptimize(mshw::optimize(
		                             [&](std::span<const double> p) {
			                             return mshw::replay_mse(x, {}, mshw::SmoothingParams::from_vector(p), 6);
		                             },
		                             2, cfg)
		                             .best_fitness);
	}
}
BENCHMARK(BM_OptimizeReplay)->Arg(1)->Arg(4)->UseRealTime();

} // namespace
