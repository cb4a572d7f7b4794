#include <catch2/catch_amalgamated.hpp>

#include "mshw/error.hpp"
#include "mshw/seasonality.hpp"
#include "oracles.hpp"

#include <random>

using namespace mshw;
using Catch::Approx;

TEST_CASE("autocorrelation matches hand-evaluated values", "[seasonality][acf]") {
	const std::vector<double> x{1, 2, 1, 2, 1, 2};
	CHECK(autocorrelation(x, 2) == Approx(1.0 / 1.5).margin(1e-12));
	CHECK(autocorrelation(x, 1) == Approx(-1.25 / 1.5).margin(1e-12));

	const std::vector<double> flat(10, 3.0);
	CHECK(autocorrelation(flat, 1) == 0.0);
	CHECK(autocorrelation(flat, 9) == 0.0);
}

TEST_CASE("autocorrelation rejects lags outside the series", "[seasonality][acf]") {
	const std::vector<double> x{1, 2, 3};
	try {
		autocorrelation(x, 3);
		FAIL("expected LagTooLarge");
	} catch (const Error& e) {
		CHECK(e.code() == Errc::lag_too_large);
	}
	CHECK_THROWS_AS(autocorrelation(x, 0), Error);
}

TEST_CASE("autocorrelation is bounded by one", "[seasonality][acf][property]") {
	std::mt19937_64 rng(19);
	for (int trial = 0; trial < 500; ++trial) {
		const std::size_t n = 2 + rng() % 100;
		const auto x = testing::random_series(rng, n, -50.0, 50.0);
		const std::size_t lag = 1 + rng() % (n - 1);
		const double r = autocorrelation(x, lag);
		REQUIRE(r >= -1.0);
		REQUIRE(r <= 1.0);
	}
}

TEST_CASE("autocorrelation of a periodic series at its period", "[seasonality][acf][property]") {
	// Biased estimator: r(L) = (n - L)/n for an exactly periodic series whose
	// length is a multiple of L, since each period sums to zero deviation.
	std::mt19937_64 rng(23);
	for (int trial = 0; trial < 50; ++trial) {
		const std::size_t L = 2 + rng() % 10;
		const std::size_t cycles = 3 + rng() % 5;
		auto profile = testing::random_series(rng, L, 0.0, 10.0);
		std::vector<double> x;
		for (std::size_t c = 0; c < cycles; ++c) {
			x.insert(x.end(), profile.begin(), profile.end());
		}
		const double n = static_cast<double>(x.size());
		CHECK(autocorrelation(x, L) == Approx((n - static_cast<double>(L)) / n).margin(1e-9));
	}
}

TEST_CASE("maybe_detect tests a candidate when three cycles are available", "[seasonality][detect]") {
	const std::vector<double> x{1, 2, 1, 2, 1, 2};
	DetectionSchedule schedule{{2}, {}, 0.3, false};
	CHECK_FALSE(maybe_detect(x, 5, schedule, {}).has_value());
	CHECK(schedule.tested.empty());

	const auto found = maybe_detect(x, 6, schedule, {});
	REQUIRE(found.has_value());
	CHECK(*found == 2);
	CHECK(schedule.tested.contains(2));

	// tested once only
	CHECK_FALSE(maybe_detect(x, 6, schedule, {}).has_value());
}

TEST_CASE("maybe_detect ignores white noise", "[seasonality][detect]") {
	const auto noise = testing::load_fixture_series("white_noise_300.csv");
	REQUIRE(noise.size() == 300);
	const double r = autocorrelation(noise, 100);
	CHECK(std::abs(r) < 0.3);
	DetectionSchedule schedule{{100}, {}, 0.3, false};
	CHECK_FALSE(maybe_detect(noise, 300, schedule, {}).has_value());
	CHECK(schedule.tested.contains(100));
}

TEST_CASE("maybe_detect never returns an active cycle", "[seasonality][detect]") {
	const std::vector<double> x{1, 2, 1, 2, 1, 2};
	DetectionSchedule schedule{{2}, {}, 0.3, false};
	const std::vector<std::size_t> active{2};
	CHECK_FALSE(maybe_detect(x, 6, schedule, active).has_value());
}

TEST_CASE("maybe_detect is a pure function of its inputs", "[seasonality][detect][property]") {
	std::mt19937_64 rng(4);
	for (int trial = 0; trial < 50; ++trial) {
		const auto x = testing::random_series(rng, 90, 0.0, 1.0);
		const std::size_t L = 2 + rng() % 28;
		DetectionSchedule a{{L}, {}, 0.1 * static_cast<double>(rng() % 4), false};
		DetectionSchedule b = a;
		CHECK(maybe_detect(x, 3 * L, a, {}) == maybe_detect(x, 3 * L, b, {}));
		CHECK(a.tested == b.tested);
	}
}

TEST_CASE("retesting revisits a rejected candidate every cycle", "[seasonality][detect]") {
	// Noise for three cycles, then a strong period-4 pattern.
	std::vector<double> x{5, 1, 4, 2, 3, 3, 2, 4, 1, 5, 3, 3};
	for (int c = 0; c < 12; ++c) {
		x.insert(x.end(), {10, 0, 10, 0});
	}
	DetectionSchedule once{{4}, {}, 0.3, false};
	DetectionSchedule again{{4}, {}, 0.3, true};
	std::vector<std::size_t> hits_once;
	std::vector<std::size_t> hits_again;
	for (std::size_t t = 1; t <= x.size(); ++t) {
		if (maybe_detect(x, t, once, {})) {
			hits_once.push_back(t);
		}
		if (hits_again.empty() && maybe_detect(x, t, again, {})) {
			hits_again.push_back(t);
		}
	}
	CHECK(hits_once.empty());
	REQUIRE(hits_again.size() == 1);
	CHECK(hits_again[0] > 12);
	CHECK((hits_again[0] - 12) % 4 == 0);
}

TEST_CASE("detection schedules validate their candidates", "[seasonality]") {
	CHECK_THROWS_AS((DetectionSchedule{{24, 24}, {}, 0.3, false}.validate()), Error);
	CHECK_THROWS_AS((DetectionSchedule{{1, 24}, {}, 0.3, false}.validate()), Error);
	CHECK_THROWS_AS((DetectionSchedule{{24}, {12}, 0.3, false}.validate()), Error);
	CHECK_NOTHROW((DetectionSchedule{{24, 168}, {24}, 0.3, false}.validate()));
}
