#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace mshw {

inline constexpr double kDefaultAcfThreshold = 0.3;

/// Candidate cycle lengths and which of them have already been tested.
struct DetectionSchedule {
	std::vector<std::size_t> expected_cycles; // strictly increasing, each >= 2
	std::set<std::size_t> tested;
	double threshold = kDefaultAcfThreshold;
	// Re-test a rejected candidate every further cycle_len periods.
	bool retest = false;

	void validate() const;
};

/// Biased sample autocorrelation at `lag` using the global mean and the
/// full-series denominator. A constant series yields 0.
double autocorrelation(std::span<const double> x, std::size_t lag);

/// Runs the seasonality test when t hits 3 * l' for an untested candidate l'
/// (every further l' periods when retesting is on). The candidate is marked
/// tested; it is returned when r(l') >= threshold and it is not active.
/// `x` must hold at least t observations; only the first t are used.
std::optional<std::size_t> maybe_detect(std::span<const double> x, std::size_t t, DetectionSchedule& schedule,
                                        std::span<const std::size_t> active);

} // namespace mshw
