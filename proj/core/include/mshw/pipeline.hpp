#pragma once

#include "mshw/abc.hpp"
#include "mshw/ingest.hpp"
#include "mshw/metrics.hpp"
#include "mshw/model.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mshw {

enum class InputFormat { clf, csv };

/// Parses "msholtwinters" (alias "proposed"), "double" or "triple".
ModelId parse_method(std::string_view name);
std::string_view method_name(ModelId id);

struct PipelineConfig {
	std::filesystem::path input_path;
	InputFormat input_format = InputFormat::csv;
	std::vector<ModelId> methods = {ModelId::proposed, ModelId::double_es, ModelId::triple_es};
	std::size_t horizon = 15;
	std::size_t warmup = 60;
	std::vector<std::size_t> expected_cycles = {1440, 10080};
	AbcConfig abc;
	double capacity_per_cpu = kDefaultCapacityPerCpu;
	DemandUnit unit = DemandUnit::requests;
	std::filesystem::path out_dir;
	std::uint64_t seed = 0;
	bool skip_zero_obs = false;
	std::size_t reopt_every = 0; // 0 disables periodic re-tuning
	double acf_threshold = 0.3;
	bool retest = false;
	double eps_floor = kDefaultEpsFloor;
	// Divide history by the already-active patterns before initializing the
	// indices of a newly detected one.
	bool deseasonalize_new_patterns = false;

	void validate() const;
};

struct DetectionEvent {
	std::size_t cycle_len = 0;
	std::size_t time = 0;
	double acf = 0.0;
};

enum class ReoptReason { warmup, detection, season_start, periodic };

std::string_view to_string(ReoptReason reason);

struct ReoptEvent {
	std::size_t time = 0;
	ReoptReason reason = ReoptReason::warmup;
	SmoothingParams params;
	double mse = 0.0;
	std::size_t evaluations = 0;
};

/// Everything one method produced over the replayed series.
struct MethodRun {
	ModelId model = ModelId::proposed;
	std::vector<ForecastRecord> records;
	std::vector<DetectionEvent> detections;
	std::vector<ReoptEvent> reoptimizations;
	/// Times t of the scored records; pair i compares the forecast issued at
	/// scored_times[i] with the observation at scored_times[i] + k.
	std::vector<std::size_t> scored_times;
	std::vector<EvalPair> pairs;
	MetricSummary metrics;
	CumulativeMetrics cumulative;
};

struct RunReport {
	std::size_t horizon = 0;
	std::size_t warmup = 0;
	std::vector<std::size_t> expected_cycles;
	std::uint64_t seed = 0;
	DemandUnit unit = DemandUnit::requests;
	std::size_t series_length = 0;
	IngestReport ingest;
	std::vector<MethodRun> runs;

	const MethodRun& run(ModelId id) const;
};

/// Loads the configured input as a demand series (CLF logs are aggregated
/// per minute; the cpu unit applies the capacity mapping).
DemandSeries load_series(const PipelineConfig& config, IngestReport& report);

/// Online replay of every configured method over an in-memory series.
RunReport run_series(std::span<const double> series, const PipelineConfig& config, IngestReport ingest = {});

/// load_series + run_series.
RunReport run_pipeline(const PipelineConfig& config);

/// Writes forecasts.csv, metrics.json and compare_{mape,pred25,rmse}.svg
/// into out_dir. Files are staged and renamed into place; on failure nothing
/// new is left behind.
void emit_outputs(const RunReport& report, const std::filesystem::path& out_dir);

nlohmann::json metrics_json(const RunReport& report);
std::string forecasts_csv(const RunReport& report);
std::string metric_chart_svg(const RunReport& report, std::string_view metric);

/// Reads back the per-method metric scalars from a metrics.json document.
std::map<ModelId, MetricSummary> read_metrics(const nlohmann::json& doc);

} // namespace mshw
