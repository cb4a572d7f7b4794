#include "mshw/seasonality.hpp"

#include "mshw/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mshw {

void DetectionSchedule::validate() const {
	for (std::size_t i = 0; i < expected_cycles.size(); ++i) {
		if (expected_cycles[i] < 2) {
			throw Error(Errc::invalid_argument, "expected cycle lengths must be at least 2");
		}
		if (i > 0 && expected_cycles[i] <= expected_cycles[i - 1]) {
			throw Error(Errc::invalid_argument, "expected cycle lengths must be strictly increasing");
		}
	}
	for (std::size_t c : tested) {
		if (!std::binary_search(expected_cycles.begin(), expected_cycles.end(), c)) {
			throw Error(Errc::invalid_argument, "tested cycle " + std::to_string(c) + " is not a candidate");
		}
	}
}

double autocorrelation(std::span<const double> x, std::size_t lag) {
	if (lag == 0) {
		throw Error(Errc::invalid_argument, "autocorrelation lag must be at least 1");
	}
	if (lag >= x.size()) {
		throw Error(Errc::lag_too_large,
		            "lag " + std::to_string(lag) + " needs more than " + std::to_string(x.size()) + " observations");
	}
	const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
	double denom = 0.0;
	for (double v : x) {
		denom += (v - mean) * (v - mean);
	}
	if (denom == 0.0) {
		return 0.0;
	}
	double num = 0.0;
	for (std::size_t t = 0; t + lag < x.size(); ++t) {
		num += (x[t] - mean) * (x[t + lag] - mean);
	}
	return std::clamp(num / denom, -1.0, 1.0);
}

std::optional<std::size_t> maybe_detect(std::span<const double> x, std::size_t t, DetectionSchedule& schedule,
                                        std::span<const std::size_t> active) {
	if (t > x.size()) {
		throw Error(Errc::invalid_argument, "detection time exceeds the available history");
	}
	for (std::size_t cycle : schedule.expected_cycles) {
		const std::size_t first_test = 3 * cycle;
		const bool is_active = std::find(active.begin(), active.end(), cycle) != active.end();
		bool due = false;
		if (schedule.retest) {
			due = !is_active && t >= first_test && (t - first_test) % cycle == 0;
		} else {
			due = t == first_test && !schedule.tested.contains(cycle);
		}
		if (!due) {
			continue;
		}
		schedule.tested.insert(cycle);
		const double r = autocorrelation(x.first(t), cycle);
		if (r >= schedule.threshold && !is_active) {
			return cycle;
		}
	}
	return std::nullopt;
}

} // namespace mshw
