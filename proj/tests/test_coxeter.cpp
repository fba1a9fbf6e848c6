#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <hyperball/coxeter.hpp>

#include "support/oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace hyperball;
using std::numbers::pi;

TEST_CASE("schlafli symbol parsing", "[coxeter]") {
    const CoxeterGraph g = parse_schlafli("7,3,3");
    CHECK(g.rank() == 4);
    CHECK(g.label(0, 1) == 7.0);
    CHECK(g.label(1, 2) == 3.0);
    CHECK(g.label(2, 3) == 3.0);
    CHECK(g.label(0, 2) == 2.0);
    CHECK(g.label(0, 3) == 2.0);

    CHECK(parse_schlafli("5,3,3,3,3").rank() == 6);
    CHECK(parse_schlafli(" 6.135 , 3 , 3 ").label(0, 1) == 6.135);

    CHECK_THROWS_AS(parse_schlafli(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_schlafli("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_schlafli("3,,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_schlafli("3,4x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_schlafli("1.5,3"), std::invalid_argument);       // label < 2
    CHECK_THROWS_AS(parse_schlafli("3,3,3,3,3,3"), std::invalid_argument); // rank 7
}

TEST_CASE("gram matrix entries", "[coxeter]") {
    const SmallMatrix c = gram_matrix(CoxeterGraph::linear({3, 5}));
    CHECK(c(0, 0) == 1.0);
    CHECK(c(1, 1) == 1.0);
    CHECK_THAT(c(0, 1), WithinAbs(-0.5, 1e-15));
    CHECK_THAT(c(1, 2), WithinAbs(-std::cos(pi / 5.0), 1e-15));
    CHECK(c(0, 2) == 0.0);
    CHECK(c(0, 1) == c(1, 0));
}

TEST_CASE("orders of finite reflection groups", "[coxeter]") {
    auto order = [](const CoxeterGraph& g) { return finite_order(g); };

    CHECK(order(CoxeterGraph(1)) == 2u);
    CHECK(order(CoxeterGraph::linear({7})) == 14u);         // dihedral
    CHECK(order(CoxeterGraph::linear({3, 3})) == 24u);      // symmetric group S4
    CHECK(order(CoxeterGraph::linear({4, 3})) == 48u);      // cube symmetries
    CHECK(order(CoxeterGraph::linear({5, 3})) == 120u);     // icosahedron
    CHECK(order(CoxeterGraph::linear({3, 3, 3})) == 120u);  // S5
    CHECK(order(CoxeterGraph::linear({4, 3, 3})) == 384u);
    CHECK(order(CoxeterGraph::linear({3, 4, 3})) == 1152u);
    CHECK(order(CoxeterGraph::linear({5, 3, 3})) == 14400u);
    CHECK(order(CoxeterGraph::linear({4, 3, 3, 3})) == 3840u);
    CHECK(order(CoxeterGraph::linear({3, 3, 3, 3, 3})) == 5040u);  // S7

    SECTION("branching diagrams") {
        CoxeterGraph d4(4);  // star: centre 0
        d4.set_label(0, 1, 3);
        d4.set_label(0, 2, 3);
        d4.set_label(0, 3, 3);
        CHECK(order(d4) == 192u);

        CoxeterGraph e6(6);  // path 0-1-2-3-4 with 5 hanging off node 2
        e6.set_label(0, 1, 3);
        e6.set_label(1, 2, 3);
        e6.set_label(2, 3, 3);
        e6.set_label(3, 4, 3);
        e6.set_label(2, 5, 3);
        CHECK(order(e6) == 51840u);

        CoxeterGraph d5_plus_a1(6);  // disconnected: D5 x A1
        d5_plus_a1.set_label(0, 1, 3);
        d5_plus_a1.set_label(1, 2, 3);
        d5_plus_a1.set_label(2, 3, 3);
        d5_plus_a1.set_label(2, 4, 3);
        CHECK(order(d5_plus_a1) == 1920u * 2u);
    }

    SECTION("infinite groups have no order") {
        CHECK(order(CoxeterGraph::linear({6, 3})) == std::nullopt);   // affine
        CHECK(order(CoxeterGraph::linear({4, 4})) == std::nullopt);   // affine
        CHECK(order(CoxeterGraph::linear({7, 3})) == std::nullopt);   // hyperbolic
        CHECK(order(CoxeterGraph::linear({3, 3, 6})) == std::nullopt);
        CHECK(order(CoxeterGraph::linear({5, 3, 3, 3})) == std::nullopt);
    }

    CHECK_THROWS_AS(finite_order(CoxeterGraph::linear({6.135, 3})), std::invalid_argument);
}

TEST_CASE("group orders agree with brute-force enumeration", "[coxeter]") {
    // Every linear diagram of rank <= 3 with labels in {2,...,5}, plus a few
    // spot checks beyond that range.
    for (double a = 2; a <= 5; ++a) {
        CAPTURE(a);
        CHECK(finite_order(CoxeterGraph::linear({a})) ==
              oracle::brute_force_order(CoxeterGraph::linear({a})));
        for (double b = 2; b <= 5; ++b) {
            CAPTURE(b);
            const CoxeterGraph g = CoxeterGraph::linear({a, b});
            CHECK(finite_order(g) == oracle::brute_force_order(g, 2000));
        }
    }
    CHECK(oracle::brute_force_order(CoxeterGraph::linear({5, 3, 3}), 20000) == 14400u);
    CHECK(oracle::brute_force_order(CoxeterGraph::linear({3, 4, 3}), 20000) == 1152u);
}

TEST_CASE("rational arithmetic", "[coxeter]") {
    const Rational a{1, 6};
    const Rational b{1, 10};
    CHECK(a + b == Rational{4, 15});
    Rational r{2, 4};
    r.reduce();
    CHECK(r == Rational{1, 2});
    r = {-3, -6};
    r.reduce();
    CHECK(r == Rational{1, 2});
    r = {3, -6};
    r.reduce();
    CHECK(r == Rational{-1, 2});
    CHECK_THAT((Rational{4, 15}.to_double()), WithinRel(4.0 / 15.0, 1e-16));
}

TEST_CASE("orbifold euler characteristic", "[coxeter]") {
    // Rank 1: 1 - 1/2.
    CHECK(orbifold_euler_characteristic(CoxeterGraph(1)) == Rational{1, 2});
    // Dihedral: 1 - 2/2 + 1/(2m).
    CHECK(orbifold_euler_characteristic(CoxeterGraph::linear({5})) == Rational{1, 10});
    CHECK(orbifold_euler_characteristic(CoxeterGraph::linear({5, 3, 3, 3})) == Rational{1, 14400});
    // A proper infinite subgroup invalidates the alternating sum.
    CHECK_THROWS_AS(orbifold_euler_characteristic(CoxeterGraph::linear({7, 3, 3})),
                    std::domain_error);
}

TEST_CASE("gauss-bonnet covolume of the rank-5 group", "[coxeter]") {
    const double v = gauss_bonnet_volume_4d(CoxeterGraph::linear({5, 3, 3, 3}));
    CHECK_THAT(v, WithinRel(pi * pi / 10800.0, 1e-14));
    // Finite groups bound nothing; wrong rank is rejected.
    CHECK_THROWS_AS(gauss_bonnet_volume_4d(CoxeterGraph::linear({4, 3, 3, 3})), std::domain_error);
    CHECK_THROWS_AS(gauss_bonnet_volume_4d(CoxeterGraph::linear({5, 3})), std::invalid_argument);
}

TEST_CASE("truncation height from the matrix route", "[coxeter]") {
    CHECK_THAT(truncation_height(CoxeterGraph::linear({7, 3, 3})),
               WithinAbs(0.788706114020682, 1e-12));
    CHECK_THAT(truncation_height(CoxeterGraph::linear({5, 3, 3, 3, 3})),
               WithinAbs(0.38359860912566, 1e-12));
    // Finite groups truncate nothing.
    CHECK_THROWS_AS(truncation_height(CoxeterGraph::linear({3, 3, 3})), std::domain_error);
    CHECK_THROWS_AS(truncation_height(CoxeterGraph::linear({5})), std::invalid_argument);
}
