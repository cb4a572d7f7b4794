#include "mshw/ingest.hpp"

#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

namespace {

constexpr const char* kLine =
    R"(piweba3y.prodigy.com - - [01/Jul/1995:00:00:09 -0400] "GET /shuttle/countdown/ HTTP/1.0" 200 3985)";

void BM_ParseClfLine(benchmark::State& state) {
	for (auto _ : state) {
		benchmark::DoNotOptimize(mshw::parse_clf_line(kLine));
	}
	state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseClfLine);

void BM_ScanAndAggregate(benchmark::State& state) {
	std::string log;
	for (int i = 0; i < state.range(0); ++i) {
		log += kLine;
		log += '\n';
	}
	for (auto _ : state) {
		std::istringstream in(log);
		const auto scan = mshw::scan_clf(in);
		benchmark::DoNotOptimize(mshw::aggregate_per_minute(scan.timestamps).values.size());
	}
	state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanAndAggregate)->Arg(1000)->Arg(100000);

} // namespace
