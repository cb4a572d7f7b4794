#include "mshw/pipeline.hpp"

#include "mshw/baselines.hpp"
#include "mshw/error.hpp"
#include "mshw/seasonality.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>

namespace mshw {

namespace {

constexpr double kInitialGamma = 0.1;

using ParamFitness = std::function<double(const SmoothingParams&)>;

// Runs the colony over `fitness`. Returns nullopt when the history holds no
// scorable forecast yet, in which case the caller keeps its current params.
std::optional<ReoptEvent> tune(const ParamFitness& fitness, std::size_t dim, AbcConfig abc, std::uint64_t seed,
                               std::size_t time, ReoptReason reason) {
	const std::vector<double> probe(dim, 0.5);
	try {
		fitness(SmoothingParams::from_vector(probe));
	} catch (const Error& e) {
		if (e.code() == Errc::insufficient_history) {
			return std::nullopt;
		}
		throw;
	}
	abc.seed = seed;
	const auto result =
	    optimize([&](std::span<const double> p) { return fitness(SmoothingParams::from_vector(p)); }, dim, abc);
	return ReoptEvent{time, reason, SmoothingParams::from_vector(result.best_position), result.best_fitness,
	                  result.evaluations};
}

std::vector<double> deseasonalized(std::span<const double> history, const ModelState& state) {
	std::vector<double> out(history.begin(), history.end());
	for (std::size_t p = 0; p < out.size(); ++p) {
		double m = 1.0;
		for (const auto& pattern : state.patterns()) {
			m *= pattern.indices[p % pattern.cycle_len];
		}
		out[p] /= m;
	}
	return out;
}

class OnlineRunner {
public:
	OnlineRunner(std::span<const double> x, const PipelineConfig& config, ModelId model)
	    : x_(x), config_(config), state_(ModelState::init_online(x[0], x[1], {0.5, 0.1, {}}, config.eps_floor)) {
		run_.model = model;
	}

	MethodRun run() {
		const std::size_t k = config_.horizon;
		const std::size_t warmup_len = std::min(config_.warmup, x_.size());
		apply(tune(
		    [&](const SmoothingParams& p) { return replay_mse(x_.first(warmup_len), {}, p, k, config_.eps_floor); }, 2,
		    config_.warmup, ReoptReason::warmup));
		record();

		DetectionSchedule schedule{config_.expected_cycles, {}, config_.acf_threshold, config_.retest};
		for (std::size_t t = 2; t <= x_.size(); ++t) {
			const auto history = x_.first(t);
			bool retuned = false;
			if (run_.model == ModelId::proposed) {
				retuned = detect(history, t, schedule);
			} else if (run_.model == ModelId::triple_es && !config_.expected_cycles.empty() &&
			           t == 3 * config_.expected_cycles.front()) {
				start_season(history, t);
				retuned = true;
			}
			if (!retuned && config_.reopt_every > 0 && t > config_.warmup &&
			    (t - config_.warmup) % config_.reopt_every == 0) {
				apply(tune(current_fitness(history), state_.n() + 2, t, ReoptReason::periodic));
			}
			state_.step(x_[t - 1]);
			record();
		}
		return std::move(run_);
	}

private:
	std::optional<ReoptEvent> tune(const ParamFitness& fitness, std::size_t dim, std::size_t time, ReoptReason reason) {
		return mshw::tune(fitness, dim, config_.abc, config_.seed + tunings_++, time, reason);
	}

	void apply(std::optional<ReoptEvent> event) {
		if (!event) {
			return;
		}
		state_.set_params(event->params);
		run_.reoptimizations.push_back(std::move(*event));
	}

	void record() {
		const std::size_t t = state_.t();
		run_.records.push_back({t, x_[t - 1], config_.horizon, state_.forecast(config_.horizon), run_.model});
	}

	ParamFitness current_fitness(std::span<const double> history) const {
		const std::size_t k = config_.horizon;
		if (triple_cycle_) {
			const std::size_t L = *triple_cycle_;
			return [history, L, k](const SmoothingParams& p) { return triple_replay_mse(history, L, p, k); };
		}
		const double eps = config_.eps_floor;
		return [history, seeds = seeds_, k, eps](const SmoothingParams& p) {
			return replay_mse(history, seeds, p, k, eps);
		};
	}

	bool detect(std::span<const double> history, std::size_t t, DetectionSchedule& schedule) {
		std::vector<std::size_t> active;
		for (const auto& p : state_.patterns()) {
			active.push_back(p.cycle_len);
		}
		const auto found = maybe_detect(history, t, schedule, active);
		if (!found) {
			return false;
		}
		const std::size_t L = *found;
		auto indices = config_.deseasonalize_new_patterns && state_.n() > 0
		                   ? init_seasonal_indices(deseasonalized(history, state_), L, config_.eps_floor)
		                   : init_seasonal_indices(history, L, config_.eps_floor);
		state_.add_pattern(L, indices, kInitialGamma);
		seeds_.push_back({L, std::move(indices)});
		run_.detections.push_back({L, t, autocorrelation(history, L)});
		apply(tune(current_fitness(history), state_.n() + 2, t, ReoptReason::detection));
		return true;
	}

	// Switches the triple baseline from its degenerate form to a batch
	// initialized single-season model, caught up to t - 1 observations.
	void start_season(std::span<const double> history, std::size_t t) {
		const std::size_t L = config_.expected_cycles.front();
		triple_cycle_ = L;
		auto event = tune(current_fitness(history), 3, t, ReoptReason::season_start);
		SmoothingParams params =
		    event ? event->params : SmoothingParams{state_.params().alpha, state_.params().beta, {kInitialGamma}};
		state_ = init_triple(history, L, params, config_.eps_floor);
		while (state_.t() + 1 < t) {
			state_.step(x_[state_.t()]);
		}
		if (event) {
			run_.reoptimizations.push_back(std::move(*event));
		}
	}

	std::span<const double> x_;
	const PipelineConfig& config_;
	ModelState state_;
	std::vector<PatternSeed> seeds_;
	std::optional<std::size_t> triple_cycle_;
	std::uint64_t tunings_ = 0;
	MethodRun run_;
};

void score(MethodRun& run, std::span<const double> x, const PipelineConfig& config) {
	const std::size_t k = config.horizon;
	for (const auto& r : run.records) {
		if (r.t > config.warmup && r.t + k <= x.size()) {
			run.scored_times.push_back(r.t);
			run.pairs.push_back({r.forecast, x[r.t + k - 1]});
		}
	}
	const MetricOptions opts{config.eps_floor, config.skip_zero_obs};
	run.metrics = summarize(run.pairs, opts);
	run.cumulative = cumulative(run.pairs, opts);
}

} // namespace

ModelId parse_method(std::string_view name) {
	if (name == "msholtwinters" || name == "proposed") {
		return ModelId::proposed;
	}
	if (name == "double") {
		return ModelId::double_es;
	}
	if (name == "triple") {
		return ModelId::triple_es;
	}
	throw Error(Errc::invalid_argument, "unknown method '" + std::string(name) + "'");
}

std::string_view method_name(ModelId id) {
	return id == ModelId::proposed ? "msholtwinters" : to_string(id);
}

std::string_view to_string(ReoptReason reason) {
	switch (reason) {
	case ReoptReason::warmup:
		return "warmup";
	case ReoptReason::detection:
		return "detection";
	case ReoptReason::season_start:
		return "season_start";
	case ReoptReason::periodic:
		return "periodic";
	}
	return "unknown";
}

void PipelineConfig::validate() const {
	if (horizon == 0) {
		throw Error(Errc::invalid_argument, "horizon must be at least 1");
	}
	if (warmup < 2) {
		throw Error(Errc::invalid_argument, "warmup must be at least 2 observations");
	}
	if (methods.empty()) {
		throw Error(Errc::invalid_argument, "at least one method is required");
	}
	for (std::size_t i = 0; i < methods.size(); ++i) {
		if (std::find(methods.begin(), methods.begin() + static_cast<std::ptrdiff_t>(i), methods[i]) !=
		    methods.begin() + static_cast<std::ptrdiff_t>(i)) {
			throw Error(Errc::invalid_argument, "method listed twice");
		}
	}
	DetectionSchedule{expected_cycles, {}, acf_threshold, retest}.validate();
	if (!(acf_threshold >= -1.0 && acf_threshold <= 1.0)) {
		throw Error(Errc::invalid_argument, "autocorrelation threshold must lie in [-1, 1]");
	}
	if (!(capacity_per_cpu > 0.0)) {
		throw Error(Errc::invalid_argument, "capacity per CPU must be positive");
	}
	if (!(eps_floor > 0.0)) {
		throw Error(Errc::invalid_argument, "eps_floor must be positive");
	}
	abc.validate();
}

const MethodRun& RunReport::run(ModelId id) const {
	for (const auto& r : runs) {
		if (r.model == id) {
			return r;
		}
	}
	throw Error(Errc::invalid_argument, "report has no run for method " + std::string(method_name(id)));
}

DemandSeries load_series(const PipelineConfig& config, IngestReport& report) {
	std::ifstream in(config.input_path);
	if (!in) {
		throw Error(Errc::io_error, "cannot open input " + config.input_path.string());
	}
	DemandSeries series;
	try {
		if (config.input_format == InputFormat::clf) {
			auto scan = scan_clf(in);
			report = scan.report;
			series = aggregate_per_minute(scan.timestamps);
		} else {
			series = read_demand_csv(in);
		}
	} catch (const Error& e) {
		throw Error(e.code(), config.input_path.string() + ": " + e.what());
	}
	if (config.unit == DemandUnit::cpu_units) {
		series = cpu_demand(series, config.capacity_per_cpu);
	}
	return series;
}

RunReport run_series(std::span<const double> series, const PipelineConfig& config, IngestReport ingest) {
	config.validate();
	if (series.size() <= config.warmup + config.horizon) {
		throw Error(Errc::insufficient_history,
		            "series of " + std::to_string(series.size()) + " observations is not longer than warmup + horizon");
	}
	RunReport report;
	report.horizon = config.horizon;
	report.warmup = config.warmup;
	report.expected_cycles = config.expected_cycles;
	report.seed = config.seed;
	report.unit = config.unit;
	report.series_length = series.size();
	report.ingest = ingest;
	for (ModelId id : config.methods) {
		auto run = OnlineRunner(series, config, id).run();
		score(run, series, config);
		report.runs.push_back(std::move(run));
	}
	return report;
}

RunReport run_pipeline(const PipelineConfig& config) {
	config.validate();
	IngestReport ingest;
	const auto series = load_series(config, ingest);
	return run_series(series.values, config, ingest);
}

} // namespace mshw
