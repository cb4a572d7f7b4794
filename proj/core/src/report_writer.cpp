#include "mshw/error.hpp"
#include "mshw/pipeline.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace mshw {

namespace {

namespace fs = std::filesystem;

std::string shortest(double v) {
	char buf[64];
	auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, ptr);
}

std::string fixed(double v, int digits) {
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.*f", digits, v);
	return buf;
}

nlohmann::json params_json(const SmoothingParams& p) {
	return {{"alpha", p.alpha}, {"beta", p.beta}, {"gammas", p.gammas}};
}

constexpr std::string_view color_for(ModelId id) {
	switch (id) {
	case ModelId::proposed:
		return "#1b9e77";
	case ModelId::double_es:
		return "#d95f02";
	case ModelId::triple_es:
		return "#7570b3";
	}
	return "#000000";
}

const std::vector<double>& series_for(const MethodRun& run, std::string_view metric) {
	if (metric == "mape") {
		return run.cumulative.mape;
	}
	if (metric == "pred25") {
		return run.cumulative.pred25;
	}
	if (metric == "rmse") {
		return run.cumulative.rmse;
	}
	throw Error(Errc::invalid_argument, "unknown metric '" + std::string(metric) + "'");
}

std::string_view metric_title(std::string_view metric) {
	if (metric == "mape") {
		return "Cumulative MAPE";
	}
	if (metric == "pred25") {
		return "Cumulative PRED(25)";
	}
	return "Cumulative RMSE";
}

void write_file(const fs::path& path, const std::string& content) {
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
	}
	out << content;
	out.close();
	if (!out) {
		throw Error(Errc::io_error, "failed writing " + path.string());
	}
}

} // namespace

std::string forecasts_csv(const RunReport& report) {
	std::string out = "t,observed,forecast,model\n";
	for (const auto& run : report.runs) {
		for (const auto& r : run.records) {
			out += std::to_string(r.t);
			out += ',';
			out += shortest(r.observed);
			out += ',';
			out += shortest(r.forecast);
			out += ',';
			out += to_string(r.model);
			out += '\n';
		}
	}
	return out;
}

nlohmann::json metrics_json(const RunReport& report) {
	nlohmann::json doc;
	doc["horizon"] = report.horizon;
	doc["warmup"] = report.warmup;
	doc["expected_cycles"] = report.expected_cycles;
	doc["seed"] = report.seed;
	doc["unit"] = to_string(report.unit);
	doc["series_length"] = report.series_length;

	nlohmann::json ingest;
	ingest["lines_total"] = report.ingest.lines_total;
	ingest["lines_parsed"] = report.ingest.lines_parsed;
	ingest["lines_skipped"] = report.ingest.lines_skipped;
	ingest["first_ts"] =
	    report.ingest.first_ts ? nlohmann::json(format_utc(*report.ingest.first_ts)) : nlohmann::json(nullptr);
	ingest["last_ts"] =
	    report.ingest.last_ts ? nlohmann::json(format_utc(*report.ingest.last_ts)) : nlohmann::json(nullptr);
	doc["ingest"] = ingest;

	nlohmann::json methods = nlohmann::json::object();
	for (const auto& run : report.runs) {
		nlohmann::json m;
		m["metrics"] = {{"mape", run.metrics.mape}, {"pred25", run.metrics.pred25}, {"rmse", run.metrics.rmse}};
		m["scored_pairs"] = run.pairs.size();
		m["records"] = run.records.size();
		nlohmann::json detections = nlohmann::json::array();
		for (const auto& d : run.detections) {
			detections.push_back({{"cycle_len", d.cycle_len}, {"time", d.time}, {"acf", d.acf}});
		}
		m["detected_cycles"] = detections;
		nlohmann::json reopts = nlohmann::json::array();
		for (const auto& e : run.reoptimizations) {
			reopts.push_back({{"time", e.time},
			                  {"reason", to_string(e.reason)},
			                  {"params", params_json(e.params)},
			                  {"mse", e.mse},
			                  {"evaluations", e.evaluations}});
		}
		m["reoptimizations"] = reopts;
		m["final_params"] =
		    run.reoptimizations.empty() ? nlohmann::json(nullptr) : params_json(run.reoptimizations.back().params);
		methods[std::string(to_string(run.model))] = m;
	}
	doc["methods"] = methods;
	return doc;
}

std::map<ModelId, MetricSummary> read_metrics(const nlohmann::json& doc) {
	std::map<ModelId, MetricSummary> out;
	for (ModelId id : {ModelId::proposed, ModelId::double_es, ModelId::triple_es}) {
		const std::string key(to_string(id));
		if (!doc.contains("methods") || !doc["methods"].contains(key)) {
			continue;
		}
		const auto& m = doc["methods"][key]["metrics"];
		out[id] = {m.at("mape").get<double>(), m.at("pred25").get<double>(), m.at("rmse").get<double>()};
	}
	return out;
}

std::string metric_chart_svg(const RunReport& report, std::string_view metric) {
	constexpr double width = 800, height = 420;
	constexpr double left = 70, right = 150, top = 40, bottom = 50;
	const double plot_w = width - left - right;
	const double plot_h = height - top - bottom;

	double t_min = 0, t_max = 1, v_min = 0, v_max = 0;
	bool any = false;
	for (const auto& run : report.runs) {
		const auto& values = series_for(run, metric);
		if (values.empty()) {
			continue;
		}
		const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
		const double first_t = static_cast<double>(run.scored_times.front());
		const double last_t = static_cast<double>(run.scored_times.back());
		if (!any) {
			t_min = first_t;
			t_max = last_t;
			v_max = *hi;
			any = true;
		}
		t_min = std::min(t_min, first_t);
		t_max = std::max(t_max, last_t);
		v_min = std::min(v_min, *lo);
		v_max = std::max(v_max, *hi);
	}
	if (metric == "pred25") {
		v_min = 0.0;
		v_max = 1.0;
	}
	if (t_max <= t_min) {
		t_max = t_min + 1.0;
	}
	if (v_max <= v_min) {
		v_max = v_min + 1.0;
	}
	auto sx = [&](double t) { return left + (t - t_min) / (t_max - t_min) * plot_w; };
	auto sy = [&](double v) { return top + plot_h - (v - v_min) / (v_max - v_min) * plot_h; };

	std::ostringstream svg;
	svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
	    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
	svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	svg << "<text x=\"" << left << "\" y=\"24\" font-size=\"16\">" << metric_title(metric) << " (k = " << report.horizon
	    << ")</text>\n";
	svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
	    << top + plot_h << "\" stroke=\"black\"/>\n";
	svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
	    << "\" stroke=\"black\"/>\n";
	constexpr int ticks = 5;
	for (int i = 0; i <= ticks; ++i) {
		const double frac = static_cast<double>(i) / ticks;
		const double v = v_min + frac * (v_max - v_min);
		const double t = t_min + frac * (t_max - t_min);
		svg << "<text x=\"" << left - 8 << "\" y=\"" << fixed(sy(v) + 4, 1) << "\" text-anchor=\"end\">" << fixed(v, 3)
		    << "</text>\n";
		svg << "<text x=\"" << fixed(sx(t), 1) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
		    << fixed(t, 0) << "</text>\n";
	}
	svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">time t</text>\n";

	std::size_t legend_row = 0;
	for (const auto& run : report.runs) {
		const auto& values = series_for(run, metric);
		if (values.empty()) {
			continue;
		}
		svg << "<polyline fill=\"none\" stroke=\"" << color_for(run.model) << "\" stroke-width=\"1.5\" points=\"";
		for (std::size_t i = 0; i < values.size(); ++i) {
			if (i > 0) {
				svg << ' ';
			}
			svg << fixed(sx(static_cast<double>(run.scored_times[i])), 2) << ',' << fixed(sy(values[i]), 2);
		}
		svg << "\"/>\n";
		const double ly = top + 10 + 20 * static_cast<double>(legend_row++);
		svg << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 40 << "\" y2=\""
		    << ly << "\" stroke=\"" << color_for(run.model) << "\" stroke-width=\"2\"/>\n";
		svg << "<text x=\"" << left + plot_w + 46 << "\" y=\"" << ly + 4 << "\">" << method_name(run.model)
		    << "</text>\n";
	}
	svg << "</svg>\n";
	return svg.str();
}

void emit_outputs(const RunReport& report, const fs::path& out_dir) {
	const bool empty =
	    std::all_of(report.runs.begin(), report.runs.end(), [](const MethodRun& r) { return r.records.empty(); });
	if (empty) {
		throw Error(Errc::empty_report, "report holds no forecast records");
	}

	const std::array<std::pair<std::string, std::string>, 5> files = {{
	    {"forecasts.csv", forecasts_csv(report)},
	    {"metrics.json", metrics_json(report).dump(2) + "\n"},
	    {"compare_mape.svg", metric_chart_svg(report, "mape")},
	    {"compare_pred25.svg", metric_chart_svg(report, "pred25")},
	    {"compare_rmse.svg", metric_chart_svg(report, "rmse")},
	}};

	std::error_code ec;
	fs::create_directories(out_dir, ec);
	if (ec) {
		throw Error(Errc::io_error, "cannot create " + out_dir.string() + ": " + ec.message());
	}

	std::vector<fs::path> staged;
	try {
		for (const auto& [name, content] : files) {
			const auto tmp = out_dir / ("." + name + ".tmp");
			staged.push_back(tmp);
			write_file(tmp, content);
		}
		for (std::size_t i = 0; i < files.size(); ++i) {
			fs::rename(staged[i], out_dir / files[i].first);
		}
	} catch (const fs::filesystem_error& e) {
		for (const auto& p : staged) {
			fs::remove(p, ec);
		}
		throw Error(Errc::io_error, e.what());
	} catch (...) {
		for (const auto& p : staged) {
			fs::remove(p, ec);
		}
		throw;
	}
}

} // namespace mshw
