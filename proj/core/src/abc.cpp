#include "mshw/abc.hpp"

#include "mshw/error.hpp"

#include <algorithm>
#include <thread>

namespace mshw {

namespace {

std::vector<double> random_position(std::size_t dim, AbcRng& rng) {
	std::uniform_real_distribution<double> unit(kParamLower, kParamUpper);
	std::vector<double> p(dim);
	for (double& v : p) {
		v = unit(rng);
	}
	return p;
}

void sort_colony(std::vector<Bee>& colony) {
	std::stable_sort(colony.begin(), colony.end(), [](const Bee& a, const Bee& b) { return a.fitness < b.fitness; });
}

} // namespace

void AbcConfig::validate() const {
	if (ns == 0 || nb == 0 || ne == 0 || nre == 0 || nrb == 0 || local_cycles == 0 || max_iter == 0) {
		throw Error(Errc::invalid_argument, "colony sizes, cycles and max_iter must be positive");
	}
	if (!(ne <= nb && nb <= ns)) {
		throw Error(Errc::invalid_argument, "colony sizing requires ne <= nb <= ns");
	}
	if (!(nre > nrb)) {
		throw Error(Errc::invalid_argument, "elite sites must recruit more foragers than best sites (nre > nrb)");
	}
	if (!(patch_radius > 0.0 && patch_radius < 1.0)) {
		throw Error(Errc::invalid_argument, "patch radius must lie in (0, 1)");
	}
	if (!(shrink > 0.0 && shrink < 1.0)) {
		throw Error(Errc::invalid_argument, "shrink factor must lie in (0, 1)");
	}
	if (!(max_error >= 0.0)) {
		throw Error(Errc::invalid_argument, "max_error must be nonnegative");
	}
	if (threads == 0) {
		throw Error(Errc::invalid_argument, "threads must be at least 1");
	}
}

LocalSearchResult local_search(const Bee& center, double radius, std::size_t recruits, std::size_t cycles,
                               double shrink, const FitnessFn& fitness, AbcRng& rng) {
	if (!(radius > 0.0)) {
		throw Error(Errc::invalid_argument, "patch radius must be positive");
	}
	LocalSearchResult out{center, radius, 0};
	const std::size_t dim = center.position.size();
	std::vector<double> candidate(dim);
	for (std::size_t c = 0; c < cycles; ++c) {
		Bee fittest;
		bool have = false;
		for (std::size_t r = 0; r < recruits; ++r) {
			for (std::size_t d = 0; d < dim; ++d) {
				const double lo = std::max(kParamLower, out.best.position[d] - out.radius);
				const double hi = std::min(kParamUpper, out.best.position[d] + out.radius);
				std::uniform_real_distribution<double> box(lo, hi);
				candidate[d] = lo < hi ? box(rng) : lo;
			}
			const double f = fitness(candidate);
			++out.evaluations;
			if (!have || f < fittest.fitness) {
				fittest.position = candidate;
				fittest.fitness = f;
				have = true;
			}
		}
		if (have && fittest.fitness < out.best.fitness) {
			out.best = std::move(fittest);
		} else {
			out.radius *= shrink;
		}
	}
	return out;
}

AbcResult optimize(const FitnessFn& fitness, std::size_t dim, const AbcConfig& config) {
	if (dim == 0) {
		throw Error(Errc::invalid_argument, "search dimension must be at least 1");
	}
	config.validate();

	AbcRng rng(config.seed);
	AbcResult result;

	std::vector<Bee> colony(config.ns);
	for (auto& bee : colony) {
		bee.position = random_position(dim, rng);
		bee.fitness = fitness(bee.position);
		++result.evaluations;
	}
	sort_colony(colony);
	result.initial_best = colony.front().fitness;

	double previous = colony.front().fitness;
	for (std::size_t iter = 1; iter <= config.max_iter; ++iter) {
		// Site streams are drawn up front so the outcome does not depend on
		// how sites are spread over threads.
		std::vector<std::uint64_t> site_seeds(config.nb);
		for (auto& s : site_seeds) {
			s = rng();
		}
		std::vector<std::size_t> site_evals(config.nb, 0);
		auto search_site = [&](std::size_t site) {
			AbcRng site_rng(site_seeds[site]);
			const std::size_t recruits = site < config.ne ? config.nre : config.nrb;
			auto found = local_search(colony[site], config.patch_radius, recruits, config.local_cycles, config.shrink,
			                          fitness, site_rng);
			colony[site] = std::move(found.best);
			site_evals[site] = found.evaluations;
		};
		const std::size_t workers = std::min(config.threads, config.nb);
		if (workers <= 1) {
			for (std::size_t site = 0; site < config.nb; ++site) {
				search_site(site);
			}
		} else {
			std::vector<std::jthread> pool;
			pool.reserve(workers);
			for (std::size_t w = 0; w < workers; ++w) {
				pool.emplace_back([&, w] {
					for (std::size_t site = w; site < config.nb; site += workers) {
						search_site(site);
					}
				});
			}
		}
		for (std::size_t n : site_evals) {
			result.evaluations += n;
		}

		for (std::size_t i = config.nb; i < config.ns; ++i) {
			colony[i].position = random_position(dim, rng);
			colony[i].fitness = fitness(colony[i].position);
			++result.evaluations;
		}
		sort_colony(colony);

		const double best = colony.front().fitness;
		result.best_per_iteration.push_back(best);
		result.iterations = iter;
		if (iter > 1 && previous - best <= config.max_error) {
			break;
		}
		previous = best;
	}

	result.best_position = colony.front().position;
	result.best_fitness = colony.front().fitness;
	return result;
}

} // namespace mshw
