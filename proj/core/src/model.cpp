#include "mshw/model.hpp"

#include "mshw/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mshw {

namespace {

bool in_unit_interval(double v) {
	return v > 0.0 && v <= 1.0;
}

} // namespace

std::string_view to_string(ModelId id) {
	switch (id) {
	case ModelId::proposed:
		return "proposed";
	case ModelId::double_es:
		return "double";
	case ModelId::triple_es:
		return "triple";
	}
	return "unknown";
}

void SmoothingParams::validate() const {
	if (!in_unit_interval(alpha)) {
		throw Error(Errc::invalid_argument, "alpha must lie in (0, 1], got " + std::to_string(alpha));
	}
	if (!in_unit_interval(beta)) {
		throw Error(Errc::invalid_argument, "beta must lie in (0, 1], got " + std::to_string(beta));
	}
	for (double g : gammas) {
		if (!in_unit_interval(g)) {
			throw Error(Errc::invalid_argument, "gamma must lie in (0, 1], got " + std::to_string(g));
		}
	}
}

std::vector<double> SmoothingParams::to_vector() const {
	std::vector<double> out;
	out.reserve(2 + gammas.size());
	out.push_back(alpha);
	out.push_back(beta);
	out.insert(out.end(), gammas.begin(), gammas.end());
	return out;
}

SmoothingParams SmoothingParams::from_vector(std::span<const double> values) {
	if (values.size() < 2) {
		throw Error(Errc::invalid_argument, "parameter vector needs at least alpha and beta");
	}
	SmoothingParams p;
	p.alpha = values[0];
	p.beta = values[1];
	p.gammas.assign(values.begin() + 2, values.end());
	return p;
}

ModelState ModelState::init_online(double x1, double x2, SmoothingParams params, double eps_floor) {
	return from_components(x1, x2 - x1, 1, std::move(params), eps_floor);
}

ModelState ModelState::from_components(double level, double trend, std::size_t t, SmoothingParams params,
                                       double eps_floor) {
	if (!(eps_floor > 0.0)) {
		throw Error(Errc::invalid_argument, "eps_floor must be positive");
	}
	if (t == 0) {
		throw Error(Errc::invalid_argument, "a model state needs at least one absorbed observation");
	}
	if (!params.gammas.empty()) {
		throw Error(Errc::invalid_argument, "gammas are added together with their patterns");
	}
	params.validate();
	ModelState s;
	s.level_ = std::max(level, eps_floor);
	s.trend_ = trend;
	s.t_ = t;
	s.params_ = std::move(params);
	s.eps_floor_ = eps_floor;
	return s;
}

void ModelState::set_params(SmoothingParams params) {
	if (params.gammas.size() != patterns_.size()) {
		throw Error(Errc::invalid_argument, "expected " + std::to_string(patterns_.size()) + " gammas, got " +
		                                        std::to_string(params.gammas.size()));
	}
	params.validate();
	params_ = std::move(params);
}

double ModelState::product_at(std::size_t position) const {
	double m = 1.0;
	for (const auto& p : patterns_) {
		m *= p.indices[position % p.cycle_len];
	}
	return m;
}

double ModelState::seasonal_product(std::size_t k) const {
	return product_at(t_ - 1 + k);
}

void ModelState::step(double x) {
	x = std::max(x, eps_floor_);
	const std::size_t position = t_;
	const double m0 = product_at(position);
	const double prev_level = level_;

	level_ = params_.alpha * x / m0 + (1.0 - params_.alpha) * (prev_level + trend_);
	level_ = std::max(level_, eps_floor_);
	trend_ = params_.beta * (level_ - prev_level) + (1.0 - params_.beta) * trend_;

	for (auto& p : patterns_) {
		const double gamma = params_.gammas[p.gamma_slot];
		double& idx = p.indices[position % p.cycle_len];
		const double prev = idx;
		idx = gamma * x * prev / (level_ * m0) + (1.0 - gamma) * prev;
		idx = std::max(idx, eps_floor_);
	}
	++t_;
}

double ModelState::forecast_raw(std::size_t k) const {
	if (k == 0) {
		throw Error(Errc::invalid_argument, "forecast horizon must be at least 1");
	}
	return (level_ + static_cast<double>(k) * trend_) * seasonal_product(k);
}

double ModelState::forecast(std::size_t k) const {
	return std::max(0.0, forecast_raw(k));
}

bool ModelState::has_cycle(std::size_t cycle_len) const {
	return std::any_of(patterns_.begin(), patterns_.end(),
	                   [cycle_len](const SeasonalPattern& p) { return p.cycle_len == cycle_len; });
}

void ModelState::add_pattern(std::size_t cycle_len, std::vector<double> indices, double gamma) {
	if (cycle_len == 0) {
		throw Error(Errc::invalid_argument, "cycle length must be positive");
	}
	if (has_cycle(cycle_len)) {
		throw Error(Errc::duplicate_cycle, "cycle " + std::to_string(cycle_len) + " is already active");
	}
	if (indices.size() != cycle_len) {
		throw Error(Errc::invalid_argument,
		            "expected " + std::to_string(cycle_len) + " indices, got " + std::to_string(indices.size()));
	}
	if (std::any_of(indices.begin(), indices.end(), [](double v) { return !(v > 0.0); })) {
		throw Error(Errc::invalid_argument, "seasonal indices must be positive");
	}
	if (!in_unit_interval(gamma)) {
		throw Error(Errc::invalid_argument, "gamma must lie in (0, 1]");
	}
	for (double& v : indices) {
		v = std::max(v, eps_floor_);
	}
	patterns_.push_back({cycle_len, std::move(indices), patterns_.size()});
	params_.gammas.push_back(gamma);
}

LevelTrend init_batch(std::span<const double> x, std::size_t cycle_len) {
	if (cycle_len == 0) {
		throw Error(Errc::invalid_argument, "cycle length must be positive");
	}
	if (x.size() < 2 * cycle_len) {
		throw Error(Errc::insufficient_history, "batch initialization needs " + std::to_string(2 * cycle_len) +
		                                            " observations, got " + std::to_string(x.size()));
	}
	const auto L = static_cast<double>(cycle_len);
	const auto two_cycles = x.first(2 * cycle_len);
	LevelTrend out;
	out.level = std::accumulate(two_cycles.begin(), two_cycles.end(), 0.0) / (2.0 * L);
	double diff = 0.0;
	for (std::size_t j = 0; j < cycle_len; ++j) {
		diff += x[cycle_len + j] - x[j];
	}
	out.trend = (diff / L) / L;
	return out;
}

std::vector<double> init_seasonal_indices(std::span<const double> x, std::size_t cycle_len, double eps_floor) {
	if (cycle_len < 2) {
		throw Error(Errc::invalid_argument, "seasonal cycles must be at least 2 periods long");
	}
	if (x.size() < 3 * cycle_len) {
		throw Error(Errc::insufficient_history, "seasonal initialization needs " + std::to_string(3 * cycle_len) +
		                                            " observations, got " + std::to_string(x.size()));
	}
	const std::size_t half = cycle_len / 2;
	const auto L = static_cast<double>(cycle_len);

	// L-term moving average whose window starts half a cycle before j.
	auto centered_average = [&](std::size_t j) {
		const auto window = x.subspan(j - half, cycle_len);
		const double a = std::accumulate(window.begin(), window.end(), 0.0) / L;
		if (!(a > 0.0)) {
			throw Error(Errc::degenerate_window,
			            "moving average around position " + std::to_string(j) + " is not positive");
		}
		return a;
	};

	std::vector<double> indices(cycle_len, 0.0);
	for (std::size_t j = 0; j < cycle_len; ++j) {
		const std::size_t first = half + j;
		const std::size_t second = first + cycle_len;
		const double r1 = x[first] / centered_average(first);
		const double r2 = x[second] / centered_average(second);
		indices[first % cycle_len] = 0.5 * (r1 + r2);
	}

	const double mean = std::accumulate(indices.begin(), indices.end(), 0.0) / L;
	if (!(mean > 0.0)) {
		throw Error(Errc::degenerate_window, "seasonal ratios are all zero");
	}
	for (double& v : indices) {
		v = std::max(v / mean, eps_floor);
	}
	return indices;
}

double replay_mse_from(ModelState state, std::span<const double> x, std::size_t k, std::size_t first_scored) {
	if (k == 0) {
		throw Error(Errc::invalid_argument, "forecast horizon must be at least 1");
	}
	double sum = 0.0;
	std::size_t count = 0;
	auto score = [&] {
		// forecast issued at t targets zero-based position t + k - 1
		const std::size_t target = state.t() + k - 1;
		if (state.t() >= first_scored && target < x.size()) {
			const double e = state.forecast(k) - x[target];
			sum += e * e;
			++count;
		}
	};
	score();
	while (state.t() + k < x.size()) {
		state.step(x[state.t()]);
		score();
	}
	if (count == 0) {
		throw Error(Errc::insufficient_history, "no forecast has an observed outcome to score against");
	}
	return sum / static_cast<double>(count);
}

double replay_mse(std::span<const double> x, std::span<const PatternSeed> patterns, const SmoothingParams& params,
                  std::size_t k, double eps_floor) {
	if (x.size() < 2) {
		throw Error(Errc::insufficient_history, "replay needs at least two observations");
	}
	if (params.gammas.size() != patterns.size()) {
		throw Error(Errc::invalid_argument, "one gamma per seasonal pattern is required");
	}
	SmoothingParams base{params.alpha, params.beta, {}};
	auto state = ModelState::init_online(x[0], x[1], base, eps_floor);
	std::size_t first_scored = 2;
	for (std::size_t i = 0; i < patterns.size(); ++i) {
		state.add_pattern(patterns[i].cycle_len, patterns[i].indices, params.gammas[i]);
		first_scored = std::max(first_scored, patterns[i].cycle_len);
	}
	return replay_mse_from(std::move(state), x, k, first_scored);
}

} // namespace mshw
