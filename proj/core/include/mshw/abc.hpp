#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace mshw {

// Search box for every smoothing constant. The lower bound stands in for
// the open end of (0, 1].
inline constexpr double kParamLower = 1e-4;
inline constexpr double kParamUpper = 1.0;

/// Colony sizing and patch geometry for the bee colony search.
struct AbcConfig {
	std::size_t ns = 30;          // scouts
	std::size_t nb = 10;          // best sites
	std::size_t ne = 3;           // elite sites among the best
	std::size_t nre = 7;          // foragers per elite site
	std::size_t nrb = 3;          // foragers per remaining best site
	double patch_radius = 0.1;    // initial half-width of a flower patch
	double shrink = 0.8;          // patch shrink factor on a non-improving cycle
	std::size_t local_cycles = 5; // forager rounds per site and iteration
	std::size_t max_iter = 50;
	double max_error = 1e-6; // stop once the best MSE improves by no more than this
	std::uint64_t seed = 0;
	std::size_t threads = 1; // sites searched concurrently; does not change results

	void validate() const;
};

struct Bee {
	std::vector<double> position;
	double fitness = 0.0;
};

using FitnessFn = std::function<double(std::span<const double>)>;
using AbcRng = std::mt19937_64;

struct LocalSearchResult {
	Bee best;
	double radius = 0.0;
	std::size_t evaluations = 0;
};

struct AbcResult {
	std::vector<double> best_position;
	double best_fitness = 0.0;
	std::size_t iterations = 0;
	std::size_t evaluations = 0;
	double initial_best = 0.0;
	std::vector<double> best_per_iteration;
};

/// Neighborhood search around one site. Each cycle samples `recruits`
/// positions uniformly in the box center +/- radius (clamped to the search
/// box); the best sample replaces the center only if it is strictly fitter,
/// otherwise the radius shrinks. The center itself is never re-evaluated.
LocalSearchResult local_search(const Bee& center, double radius, std::size_t recruits, std::size_t cycles,
                               double shrink, const FitnessFn& fitness, AbcRng& rng);

/// Minimizes `fitness` over [kParamLower, kParamUpper]^dim. Deterministic for
/// a given seed regardless of config.threads. Fitness must be safe to call
/// concurrently when threads > 1.
AbcResult optimize(const FitnessFn& fitness, std::size_t dim, const AbcConfig& config);

} // namespace mshw
