#pragma once

#include "mshw/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mshw {

/// Forecast issued at some t paired with the outcome observed at t + k.
struct EvalPair {
	double forecast = 0.0;
	double observed = 0.0;
};

struct MetricOptions {
	double eps_floor = kDefaultEpsFloor; // denominator floor for zero-demand periods
	bool skip_zero_obs = false;          // drop pairs with observed == 0 from MAPE and PRED
};

inline constexpr double kPredThreshold = 0.25;

double mape(std::span<const EvalPair> pairs, const MetricOptions& opts = {});
/// Fraction of pairs whose relative error is strictly below `threshold`.
double pred25(std::span<const EvalPair> pairs, double threshold = kPredThreshold, const MetricOptions& opts = {});
double mse(std::span<const EvalPair> pairs);
double rmse(std::span<const EvalPair> pairs);

struct MetricSummary {
	double mape = 0.0;
	double pred25 = 0.0;
	double rmse = 0.0;

	bool operator==(const MetricSummary&) const = default;
};

MetricSummary summarize(std::span<const EvalPair> pairs, const MetricOptions& opts = {});

/// Running metrics: element i equals the batch metric over pairs[0..i].
struct CumulativeMetrics {
	std::vector<double> mape;
	std::vector<double> pred25;
	std::vector<double> rmse;
};

CumulativeMetrics cumulative(std::span<const EvalPair> pairs, const MetricOptions& opts = {});

} // namespace mshw
