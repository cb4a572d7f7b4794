#include "mshw/baselines.hpp"

#include "mshw/error.hpp"

#include <string>

namespace mshw {

namespace {

std::vector<ForecastRecord> emit_records(ModelState state, std::span<const double> x, std::size_t k, ModelId id) {
	if (k == 0) {
		throw Error(Errc::invalid_argument, "forecast horizon must be at least 1");
	}
	std::vector<ForecastRecord> out;
	out.reserve(x.size() - state.t() + 1);
	out.push_back({state.t(), x[state.t() - 1], k, state.forecast(k), id});
	while (state.t() < x.size()) {
		state.step(x[state.t()]);
		out.push_back({state.t(), x[state.t() - 1], k, state.forecast(k), id});
	}
	return out;
}

} // namespace

void BaselineSpec::validate() const {
	if (kind == BaselineKind::triple_es && (!cycle_len || *cycle_len < 2)) {
		throw Error(Errc::invalid_argument, "triple exponential smoothing needs a cycle length of at least 2");
	}
}

std::vector<ForecastRecord> run_double(std::span<const double> x, double alpha, double beta, std::size_t k) {
	if (x.size() < 2) {
		throw Error(Errc::insufficient_history, "double exponential smoothing needs at least two observations");
	}
	auto state = ModelState::init_online(x[0], x[1], SmoothingParams{alpha, beta, {}});
	return emit_records(std::move(state), x, k, ModelId::double_es);
}

ModelState init_triple(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                       double eps_floor) {
	BaselineSpec{BaselineKind::triple_es, cycle_len}.validate();
	if (params.gammas.size() != 1) {
		throw Error(Errc::invalid_argument, "triple exponential smoothing takes exactly one gamma");
	}
	if (x.size() < 3 * cycle_len) {
		throw Error(Errc::insufficient_history,
		            "triple exponential smoothing needs " + std::to_string(3 * cycle_len) + " observations");
	}
	const auto lt = init_batch(x, cycle_len);
	auto indices = init_seasonal_indices(x, cycle_len, eps_floor);
	auto state =
	    ModelState::from_components(lt.level, lt.trend, 2 * cycle_len, {params.alpha, params.beta, {}}, eps_floor);
	state.add_pattern(cycle_len, std::move(indices), params.gammas.front());
	return state;
}

std::vector<ForecastRecord> run_triple(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                                       std::size_t k) {
	return emit_records(init_triple(x, cycle_len, params), x, k, ModelId::triple_es);
}

double triple_replay_mse(std::span<const double> x, std::size_t cycle_len, const SmoothingParams& params,
                         std::size_t k) {
	auto state = init_triple(x, cycle_len, params);
	const std::size_t first = state.t();
	return replay_mse_from(std::move(state), x, k, first);
}

} // namespace mshw
