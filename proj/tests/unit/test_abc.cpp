#include <catch2/catch_amalgamated.hpp>

#include "mshw/abc.hpp"
#include "mshw/error.hpp"
#include "oracles.hpp"

#include <atomic>

using namespace mshw;

namespace {

double sphere(std::span<const double> p) {
	double s = 0.0;
	for (double v : p) {
		s += (v - 0.5) * (v - 0.5);
	}
	return s;
}

} // namespace

TEST_CASE("optimize finds the interior optimum of a sphere", "[abc]") {
	const auto grid = testing::grid_search([](const std::vector<double>& p) { return sphere(p); }, 2);
	CHECK(grid.point[0] == Catch::Approx(0.5));
	CHECK(grid.point[1] == Catch::Approx(0.5));

	AbcConfig cfg;
	cfg.seed = 42;
	const auto r = optimize(sphere, 2, cfg);
	CHECK(std::abs(r.best_position[0] - 0.5) < 0.05);
	CHECK(std::abs(r.best_position[1] - 0.5) < 0.05);
	CHECK(r.best_fitness <= grid.value + 1e-3);
}

TEST_CASE("optimize reaches a boundary optimum", "[abc]") {
	auto f = [](std::span<const double> p) { return (1.0 - p[0]) * (1.0 - p[0]); };
	const auto grid = testing::grid_search([&](const std::vector<double>& p) { return f(p); }, 1);
	CHECK(grid.point[0] == 1.0);

	AbcConfig cfg;
	cfg.seed = 7;
	const auto r = optimize(f, 1, cfg);
	CHECK(std::abs(r.best_position[0] - 1.0) < 0.05);
	CHECK(r.best_fitness <= grid.value + 1e-3);
}

TEST_CASE("optimize is deterministic for a seed", "[abc]") {
	AbcConfig cfg;
	cfg.seed = 1234;
	const auto a = optimize(sphere, 3, cfg);
	const auto b = optimize(sphere, 3, cfg);
	CHECK(a.best_position == b.best_position);
	CHECK(a.best_fitness == b.best_fitness);
	CHECK(a.best_per_iteration == b.best_per_iteration);

	cfg.threads = 4;
	const auto c = optimize(sphere, 3, cfg);
	CHECK(a.best_position == c.best_position);
	CHECK(a.best_per_iteration == c.best_per_iteration);
}

TEST_CASE("local_search shrinks the patch when nothing improves", "[abc][local]") {
	AbcRng rng(1);
	const Bee center{{0.3, 0.7}, 5.0};
	const auto r = local_search(center, 0.1, 4, 6, 0.8, [](std::span<const double>) { return 5.0; }, rng);
	CHECK(r.best.position == center.position);
	CHECK(r.best.fitness == 5.0);
	CHECK(r.radius == Catch::Approx(0.1 * std::pow(0.8, 6)));
	CHECK(r.evaluations == 24);
}

TEST_CASE("local_search improves on a sphere", "[abc][local]") {
	AbcRng rng(9);
	Bee center{{0.9, 0.9}, 0.0};
	center.fitness = sphere(center.position);
	const auto r = local_search(center, 0.1, 7, 10, 0.8, sphere, rng);
	CHECK(r.best.fitness < center.fitness);
	for (double v : r.best.position) {
		CHECK(v >= kParamLower);
		CHECK(v <= kParamUpper);
	}
}

TEST_CASE("local_search evaluates exactly recruits times cycles", "[abc][local]") {
	AbcRng rng(3);
	int calls = 0;
	auto counting = [&](std::span<const double> p) {
		++calls;
		return sphere(p);
	};
	const Bee center{{0.5}, 0.0};
	local_search(center, 0.1, 1, 1, 0.8, counting, rng);
	CHECK(calls == 1);
	CHECK_THROWS_AS(local_search(center, 0.0, 1, 1, 0.8, counting, rng), Error);
}

TEST_CASE("optimize keeps the best fitness non-increasing", "[abc][property]") {
	for (std::uint64_t seed = 0; seed < 20; ++seed) {
		AbcConfig cfg;
		cfg.seed = seed;
		cfg.max_error = 0.0;
		auto bumpy = [](std::span<const double> p) {
			return sphere(p) + 0.05 * std::sin(40.0 * p[0]) * std::cos(30.0 * p[1]);
		};
		const auto r = optimize(bumpy, 2, cfg);
		REQUIRE_FALSE(r.best_per_iteration.empty());
		CHECK(r.best_per_iteration.front() <= r.initial_best);
		for (std::size_t i = 1; i < r.best_per_iteration.size(); ++i) {
			REQUIRE(r.best_per_iteration[i] <= r.best_per_iteration[i - 1]);
		}
		CHECK(r.best_fitness <= r.initial_best);
		for (double v : r.best_position) {
			CHECK(v >= kParamLower);
			CHECK(v <= kParamUpper);
		}
	}
}

TEST_CASE("optimize spends ns plus recruits evaluations per iteration", "[abc][property]") {
	for (std::uint64_t seed = 0; seed < 5; ++seed) {
		AbcConfig cfg;
		cfg.seed = seed;
		cfg.threads = seed % 2 == 0 ? 1 : 3;
		std::atomic<std::size_t> calls{0};
		auto counting = [&](std::span<const double> p) {
			++calls;
			return sphere(p);
		};
		const auto r = optimize(counting, 2, cfg);
		const std::size_t recruits = cfg.ne * cfg.nre + (cfg.nb - cfg.ne) * cfg.nrb;
		const std::size_t per_iter = (cfg.ns - cfg.nb) + cfg.local_cycles * recruits;
		CHECK(calls.load() == cfg.ns + r.iterations * per_iter);
		CHECK(r.evaluations == calls.load());
	}
}

TEST_CASE("optimize stops once improvement stalls but never on the first iteration", "[abc]") {
	AbcConfig cfg;
	cfg.seed = 5;
	cfg.max_error = 1e9; // any improvement counts as a stall
	const auto r = optimize(sphere, 2, cfg);
	CHECK(r.iterations == 2);

	cfg.max_error = 0.0;
	cfg.max_iter = 4;
	const auto flat = optimize([](std::span<const double>) { return 1.0; }, 2, cfg);
	CHECK(flat.iterations == 2);
}

TEST_CASE("colony configuration is validated", "[abc]") {
	AbcConfig cfg;
	cfg.nb = 40;
	CHECK_THROWS_AS(cfg.validate(), Error);
	cfg = {};
	cfg.nrb = cfg.nre;
	CHECK_THROWS_AS(cfg.validate(), Error);
	cfg = {};
	cfg.shrink = 1.0;
	CHECK_THROWS_AS(cfg.validate(), Error);
	cfg = {};
	CHECK_THROWS_AS(optimize(sphere, 0, cfg), Error);
}
