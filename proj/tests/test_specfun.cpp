#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <hyperball/specfun.hpp>

#include "support/oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using hyperball::lobachevsky;
using std::numbers::pi;

TEST_CASE("lobachevsky at classical arguments", "[specfun]") {
    CHECK_THAT(lobachevsky(pi / 6.0), WithinAbs(0.50747080320482681, 1e-14));
    CHECK_THAT(lobachevsky(pi / 4.0), WithinAbs(0.45798279708860951, 1e-14));
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK_THAT(lobachevsky(pi), WithinAbs(0.0, 1e-14));
    CHECK_THAT(lobachevsky(pi / 2.0), WithinAbs(0.0, 1.0));  // finite, no throw
}

TEST_CASE("lobachevsky matches its defining integral", "[specfun]") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> xs(0.01, 3.10);
    for (int i = 0; i < 60; ++i) {
        const double x = xs(rng);
        CAPTURE(x);
        REQUIRE_THAT(lobachevsky(x), WithinAbs(oracle::lobachevsky(x), 5e-13));
    }
}

TEST_CASE("lobachevsky is odd and pi-periodic", "[specfun]") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> xs(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng);
        CAPTURE(x);
        CHECK_THAT(lobachevsky(-x), WithinAbs(-lobachevsky(x), 1e-13));
        CHECK_THAT(lobachevsky(x + pi), WithinAbs(lobachevsky(x), 1e-13));
    }
}

TEST_CASE("lobachevsky duplication identity", "[specfun]") {
    // L(2x) = 2 L(x) - 2 L(pi/2 - x)
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng);
        CAPTURE(x);
        CHECK_THAT(lobachevsky(2.0 * x),
                   WithinAbs(2.0 * lobachevsky(x) - 2.0 * lobachevsky(pi / 2.0 - x), 1e-12));
    }
}

TEST_CASE("zeta(3)", "[specfun]") {
    CHECK_THAT(hyperball::zeta3(), WithinRel(1.2020569031595943, 1e-15));
    CHECK_THAT(hyperball::zeta3() / 3200.0, WithinRel(3.7564278223737321e-4, 1e-15));
}
