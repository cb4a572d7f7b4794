#include "mshw/model.hpp"
#include "mshw/seasonality.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

namespace {

std::vector<double> seasonal_series(std::size_t n) {
	std::mt19937_64 rng(1);
	std::normal_distribution<double> noise(0.0, 0.05);
	std::vector<double> x(n);
	for (std::size_t i = 0; i < n; ++i) {
		const double day = 1.0 + 0.4 * std::sin(2.0 * M_PI * static_cast<double>(i % 24) / 24.0);
		const double week = 1.0 + 0.2 * std::sin(2.0 * M_PI * static_cast<double>(i % 168) / 168.0);
		x[i] = (100.0 + 0.05 * static_cast<double>(i)) * day * week * (1.0 + noise(rng));
	}
	return x;
}

void BM_Step(benchmark::State& state) {
	const auto x = seasonal_series(4096);
	const auto patterns = static_cast<std::size_t>(state.range(0));
	auto s = mshw::ModelState::init_online(x[0], x[1], {0.3, 0.1, {}});
	const std::size_t cycles[] = {24, 168, 1440};
	for (std::size_t i = 0; i < patterns; ++i) {
		s.add_pattern(cycles[i], std::vector<double>(cycles[i], 1.0), 0.1);
	}
	std::size_t i = 0;
	for (auto _ : state) {
		s.step(x[i++ % x.size()]);
		benchmark::DoNotOptimize(s.forecast(15));
	}
	state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Step)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

void BM_ReplayMse(benchmark::State& state) {
	const auto x = seasonal_series(static_cast<std::size_t>(state.range(0)));
	const std::vector<mshw::PatternSeed> seeds{{24, mshw::init_seasonal_indices(x, 24)},
	                                           {168, mshw::init_seasonal_indices(x, 168)}};
	const mshw::SmoothingParams p{0.3, 0.1, {0.2, 0.1}};
	for (auto _ : state) {
		benchmark::DoNotOptimize(mshw::replay_mse(x, seeds, p, 6));
	}
	state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReplayMse)->Arg(600)->Arg(2000)->Arg(10080);

void BM_Autocorrelation(benchmark::State& state) {
	const auto x = seasonal_series(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(mshw::autocorrelation(x, 168));
	}
	state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Autocorrelation)->Arg(504)->Arg(4320)->Arg(30240);

} // namespace
