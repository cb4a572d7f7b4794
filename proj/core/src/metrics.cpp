#include "mshw/metrics.hpp"

#include "mshw/error.hpp"

#include <algorithm>
#include <cmath>

namespace mshw {

namespace {

void require_nonempty(std::span<const EvalPair> pairs) {
	if (pairs.empty()) {
		throw Error(Errc::empty_input, "metrics need at least one (forecast, observed) pair");
	}
}

bool counted(const EvalPair& p, const MetricOptions& opts) {
	return !(opts.skip_zero_obs && p.observed == 0.0);
}

double relative_error(const EvalPair& p, const MetricOptions& opts) {
	return std::abs(p.forecast - p.observed) / std::max(p.observed, opts.eps_floor);
}

} // namespace

double mape(std::span<const EvalPair> pairs, const MetricOptions& opts) {
	require_nonempty(pairs);
	double sum = 0.0;
	std::size_t n = 0;
	for (const auto& p : pairs) {
		if (counted(p, opts)) {
			sum += relative_error(p, opts);
			++n;
		}
	}
	if (n == 0) {
		throw Error(Errc::empty_input, "every pair has a zero observation");
	}
	return sum / static_cast<double>(n);
}

double pred25(std::span<const EvalPair> pairs, double threshold, const MetricOptions& opts) {
	require_nonempty(pairs);
	std::size_t hits = 0;
	std::size_t n = 0;
	for (const auto& p : pairs) {
		if (counted(p, opts)) {
			hits += relative_error(p, opts) < threshold ? 1 : 0;
			++n;
		}
	}
	if (n == 0) {
		throw Error(Errc::empty_input, "every pair has a zero observation");
	}
	return static_cast<double>(hits) / static_cast<double>(n);
}

double mse(std::span<const EvalPair> pairs) {
	require_nonempty(pairs);
	double sum = 0.0;
	for (const auto& p : pairs) {
		const double e = p.forecast - p.observed;
		sum += e * e;
	}
	return sum / static_cast<double>(pairs.size());
}

double rmse(std::span<const EvalPair> pairs) {
	return std::sqrt(mse(pairs));
}

MetricSummary summarize(std::span<const EvalPair> pairs, const MetricOptions& opts) {
	return {mape(pairs, opts), pred25(pairs, kPredThreshold, opts), rmse(pairs)};
}

CumulativeMetrics cumulative(std::span<const EvalPair> pairs, const MetricOptions& opts) {
	CumulativeMetrics out;
	out.mape.reserve(pairs.size());
	out.pred25.reserve(pairs.size());
	out.rmse.reserve(pairs.size());
	double abs_pct = 0.0;
	double sq = 0.0;
	std::size_t hits = 0;
	std::size_t n_rel = 0;
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		const auto& p = pairs[i];
		if (counted(p, opts)) {
			const double rel = relative_error(p, opts);
			abs_pct += rel;
			hits += rel < kPredThreshold ? 1 : 0;
			++n_rel;
		}
		const double e = p.forecast - p.observed;
		sq += e * e;
		const double n_rel_d = static_cast<double>(n_rel);
		out.mape.push_back(n_rel == 0 ? 0.0 : abs_pct / n_rel_d);
		out.pred25.push_back(n_rel == 0 ? 0.0 : static_cast<double>(hits) / n_rel_d);
		out.rmse.push_back(std::sqrt(sq / static_cast<double>(i + 1)));
	}
	return out;
}

} // namespace mshw
