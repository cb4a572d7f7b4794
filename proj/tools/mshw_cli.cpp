// mshw: replay a demand trace through the multi-seasonal Holt-Winters
// forecaster and its double/triple exponential smoothing baselines.

#include "mshw/error.hpp"
#include "mshw/ingest.hpp"
#include "mshw/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitInputError = 3;

std::vector<std::string> split(const std::string& text) {
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (!item.empty()) {
			out.push_back(item);
		}
	}
	return out;
}

std::vector<std::size_t> parse_cycles(const std::string& text) {
	std::vector<std::size_t> out;
	if (text == "none") {
		return out;
	}
	for (const auto& item : split(text)) {
		std::size_t used = 0;
		unsigned long long v = 0;
		try {
			v = std::stoull(item, &used);
		} catch (const std::exception&) {
			used = 0;
		}
		if (used != item.size()) {
			throw mshw::Error(mshw::Errc::invalid_argument, "bad cycle length '" + item + "'");
		}
		out.push_back(static_cast<std::size_t>(v));
	}
	return out;
}

std::vector<mshw::ModelId> parse_methods(const std::string& text) {
	if (text == "all") {
		return {mshw::ModelId::proposed, mshw::ModelId::double_es, mshw::ModelId::triple_es};
	}
	std::vector<mshw::ModelId> out;
	for (const auto& item : split(text)) {
		out.push_back(mshw::parse_method(item));
	}
	return out;
}

int exit_code_for(const mshw::Error& e) {
	return e.code() == mshw::Errc::invalid_argument ? kExitBadConfig : kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Multi-seasonal Holt-Winters workload forecaster"};
	app.require_subcommand(1);

	mshw::PipelineConfig config;
	std::string format = "csv";
	std::string methods = "all";
	std::string cycles = "1440,10080";
	std::string unit = "requests";

	auto* forecast = app.add_subcommand("forecast", "Replay a series and write forecasts, metrics and charts");
	forecast->add_option("--input", config.input_path, "Input trace (CLF log or minute_index,value CSV)")->required();
	forecast->add_option("--format", format, "Input format")->check(CLI::IsMember({"clf", "csv"}));
	forecast->add_option("--method", methods, "msholtwinters|double|triple, a comma list, or all");
	forecast->add_option("--horizon", config.horizon, "Forecast lead time k in periods");
	forecast->add_option("--warmup", config.warmup, "Observations before forecasts are scored");
	forecast->add_option("--cycles", cycles, "Expected seasonal cycle lengths in periods, or none");
	forecast->add_option("--capacity", config.capacity_per_cpu, "Requests per minute one CPU unit serves");
	forecast->add_option("--unit", unit, "Forecast request counts or CPU units")
	    ->check(CLI::IsMember({"requests", "cpu"}));
	forecast->add_option("--seed", config.seed, "Seed for the bee colony search");
	forecast->add_option("--out-dir", config.out_dir, "Output directory")->required();
	forecast->add_flag("--skip-zero-obs", config.skip_zero_obs, "Exclude zero observations from MAPE and PRED(25)");
	forecast->add_option("--reopt-every", config.reopt_every, "Also re-tune every N periods after warmup (0 = off)");
	forecast->add_option("--acf-threshold", config.acf_threshold, "Autocorrelation needed to accept a cycle");
	forecast->add_flag("--retest", config.retest, "Re-test rejected cycles every further cycle length");
	forecast->add_flag("--deseasonalize-new-patterns", config.deseasonalize_new_patterns,
	                   "Divide history by active patterns before initializing a newly detected one");
	forecast->add_option("--abc-ns", config.abc.ns, "Scout bees");
	forecast->add_option("--abc-nb", config.abc.nb, "Best sites");
	forecast->add_option("--abc-ne", config.abc.ne, "Elite sites");
	forecast->add_option("--abc-nre", config.abc.nre, "Foragers per elite site");
	forecast->add_option("--abc-nrb", config.abc.nrb, "Foragers per remaining best site");
	forecast->add_option("--abc-radius", config.abc.patch_radius, "Initial flower patch half-width");
	forecast->add_option("--abc-shrink", config.abc.shrink, "Patch shrink factor");
	forecast->add_option("--abc-cycles", config.abc.local_cycles, "Local search cycles per iteration");
	forecast->add_option("--abc-max-iter", config.abc.max_iter, "Maximum colony iterations");
	forecast->add_option("--abc-max-error", config.abc.max_error, "Stop when the best MSE improves by less");
	forecast->add_option("--abc-threads", config.abc.threads, "Threads for site searches");

	std::filesystem::path ingest_input;
	std::filesystem::path ingest_output;
	std::string ingest_unit = "requests";
	double ingest_capacity = mshw::kDefaultCapacityPerCpu;
	auto* ingest = app.add_subcommand("ingest", "Aggregate a CLF access log into a per-minute demand CSV");
	ingest->add_option("--input", ingest_input, "Common Log Format file")->required();
	ingest->add_option("--out", ingest_output, "Output CSV (timestamp,value)")->required();
	ingest->add_option("--unit", ingest_unit, "requests or cpu")->check(CLI::IsMember({"requests", "cpu"}));
	ingest->add_option("--capacity", ingest_capacity, "Requests per minute one CPU unit serves");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int rc = app.exit(e);
		return rc == 0 ? kExitOk : kExitBadConfig;
	}

	try {
		if (*forecast) {
			config.input_format = format == "clf" ? mshw::InputFormat::clf : mshw::InputFormat::csv;
			config.unit = unit == "cpu" ? mshw::DemandUnit::cpu_units : mshw::DemandUnit::requests;
			config.methods = parse_methods(methods);
			config.expected_cycles = parse_cycles(cycles);
			config.validate();

			const auto report = mshw::run_pipeline(config);
			mshw::emit_outputs(report, config.out_dir);
			for (const auto& run : report.runs) {
				std::cout << mshw::method_name(run.model) << ": MAPE=" << run.metrics.mape
				          << " PRED(25)=" << run.metrics.pred25 << " RMSE=" << run.metrics.rmse;
				for (const auto& d : run.detections) {
					std::cout << " cycle " << d.cycle_len << "@t=" << d.time;
				}
				std::cout << '\n';
			}
			return kExitOk;
		}

		std::ifstream in(ingest_input);
		if (!in) {
			throw mshw::Error(mshw::Errc::io_error, "cannot open input " + ingest_input.string());
		}
		const auto scan = mshw::scan_clf(in);
		auto series = mshw::aggregate_per_minute(scan.timestamps);
		if (ingest_unit == "cpu") {
			series = mshw::cpu_demand(series, ingest_capacity);
		}
		std::ofstream out(ingest_output);
		if (!out) {
			throw mshw::Error(mshw::Errc::io_error, "cannot open " + ingest_output.string() + " for writing");
		}
		mshw::write_demand_csv(out, series);
		std::cerr << "lines: " << scan.report.lines_total << " parsed: " << scan.report.lines_parsed
		          << " skipped: " << scan.report.lines_skipped << '\n';
		return kExitOk;
	} catch (const mshw::Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_code_for(e);
	}
}
