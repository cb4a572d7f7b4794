#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mshw {

inline constexpr double kDefaultEpsFloor = 1e-6;

/// Smoothing constants for level, trend and one per seasonal pattern.
/// Every component must lie in (0, 1].
struct SmoothingParams {
	double alpha = 0.5;
	double beta = 0.1;
	std::vector<double> gammas;

	void validate() const;

	/// Flattened (alpha, beta, gamma_1..gamma_n), the layout searched by the
	/// bee colony optimizer.
	std::vector<double> to_vector() const;
	static SmoothingParams from_vector(std::span<const double> values);

	bool operator==(const SmoothingParams&) const = default;
};

/// One detected cycle. indices[j] is the multiplicative factor for every
/// zero-based series position p with p % cycle_len == j.
struct SeasonalPattern {
	std::size_t cycle_len = 0;
	std::vector<double> indices;
	std::size_t gamma_slot = 0;
};

/// Cycle length plus the indices a pattern was initialized with. This is
/// what a replay needs to rebuild the model from scratch.
struct PatternSeed {
	std::size_t cycle_len = 0;
	std::vector<double> indices;
};

enum class ModelId { proposed, double_es, triple_es };

std::string_view to_string(ModelId id);

struct ForecastRecord {
	std::size_t t = 0;       // 1-based time of the last absorbed observation
	double observed = 0.0;   // raw observation at t
	std::size_t horizon = 1; // k
	double forecast = 0.0;   // clamped k-step-ahead forecast issued at t
	ModelId model = ModelId::proposed;

	bool operator==(const ForecastRecord&) const = default;
};

struct LevelTrend {
	double level = 0.0;
	double trend = 0.0;
};

/// Live multi-seasonal Holt-Winters state.
///
/// t() counts absorbed observations, so the most recent observation sits at
/// zero-based position t() - 1. Level and every seasonal index are kept at or
/// above eps_floor so the multiplicative updates stay defined on idle periods.
class ModelState {
public:
	/// Level from the first observation, trend from the first difference.
	static ModelState init_online(double x1, double x2, SmoothingParams params = {},
	                              double eps_floor = kDefaultEpsFloor);

	/// State positioned after `t` absorbed observations with the given
	/// components. Used by batch initializers.
	static ModelState from_components(double level, double trend, std::size_t t, SmoothingParams params,
	                                  double eps_floor = kDefaultEpsFloor);

	double level() const noexcept {
		return level_;
	}
	double trend() const noexcept {
		return trend_;
	}
	std::size_t t() const noexcept {
		return t_;
	}
	std::size_t n() const noexcept {
		return patterns_.size();
	}
	double eps_floor() const noexcept {
		return eps_floor_;
	}
	const SmoothingParams& params() const noexcept {
		return params_;
	}
	const std::vector<SeasonalPattern>& patterns() const noexcept {
		return patterns_;
	}

	/// Replaces all smoothing constants; gammas must match the pattern count.
	void set_params(SmoothingParams params);

	/// Combined seasonal factor M(k) for the period k steps after the last
	/// absorbed observation. 1 when no pattern is active.
	double seasonal_product(std::size_t k) const;

	/// Absorbs the next observation: level, then trend, then every seasonal
	/// index (using the freshly updated level).
	void step(double x);

	/// k-step-ahead forecast clamped at zero. k must be >= 1.
	double forecast(std::size_t k) const;
	/// Same as forecast() without the nonnegativity clamp.
	double forecast_raw(std::size_t k) const;

	/// Appends a pattern and a gamma slot. Level and trend are left as they are.
	void add_pattern(std::size_t cycle_len, std::vector<double> indices, double gamma);

	bool has_cycle(std::size_t cycle_len) const;

private:
	ModelState() = default;

	double product_at(std::size_t position) const;

	double level_ = 0.0;
	double trend_ = 0.0;
	std::vector<SeasonalPattern> patterns_;
	std::size_t t_ = 0;
	SmoothingParams params_;
	double eps_floor_ = kDefaultEpsFloor;
};

/// Level = mean of the first two cycles; trend = mean per-period change
/// between the first and second cycle.
LevelTrend init_batch(std::span<const double> x, std::size_t cycle_len);

/// Initial seasonal indices (by phase) from ratio-to-centered-moving-average
/// over the first two full cycles. Needs three full cycles of history.
/// The result is renormalized to mean 1 and floored at eps_floor.
std::vector<double> init_seasonal_indices(std::span<const double> x, std::size_t cycle_len,
                                          double eps_floor = kDefaultEpsFloor);

/// Steps `state` through x[state.t() ..] and returns the mean squared error
/// of the k-step forecasts issued at every t >= first_scored whose outcome
/// lies inside x. Throws InsufficientHistory when no such pair exists.
double replay_mse_from(ModelState state, std::span<const double> x, std::size_t k, std::size_t first_scored);

/// Fitness used by the optimizer: rebuilds the model over x from
/// init_online, with the given patterns attached from the start, and scores
/// from the largest cycle length (or from t = 2 without patterns).
double replay_mse(std::span<const double> x, std::span<const PatternSeed> patterns, const SmoothingParams& params,
                  std::size_t k, double eps_floor = kDefaultEpsFloor);

} // namespace mshw
