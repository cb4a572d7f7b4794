#pragma once

#include "mshw/model.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mshw {

enum class BaselineKind { double_es, triple_es };

struct BaselineSpec {
	BaselineKind kind = BaselineKind::double_es;
	std::optional<std::size_t> cycle_len; // required (>= 2) for triple

	void validate() const;
};

/// Holt's linear method: the multi-seasonal model with no patterns.
/// One record per t = 1 .. x.size().
std::vector<ForecastRecord> run_double(std::span<const double> x, double alpha, double beta, std::size_t k);

/// Single-season multiplicative Holt-Winters state built from the first
/// three cycles of x: level and trend from init_batch, indices from
/// init_seasonal_indices. The state is positioned after 2 * cycle_len
/// observations, the span its level summarizes.
ModelState init_triple(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                       double eps_floor = kDefaultEpsFloor);

/// Triple exponential smoothing over x. Records start at t = 2 * cycle_len.
/// params.gammas must hold exactly one value.
std::vector<ForecastRecord> run_triple(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                                       std::size_t k);

/// Replay MSE of the triple baseline over x, scoring every forecast from
/// its initial state onward. Fitness for tuning the baseline.
double triple_replay_mse(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                         std::size_t k);

} // namespace mshw
