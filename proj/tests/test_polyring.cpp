#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "c2/factor.hpp"
#include "c2/polynomial.hpp"
#include "test_util.hpp"

using namespace c2;
using c2::testutil::Rng;

namespace {
Polynomial P(const std::string& s) { return Polynomial::parse(s); }
} // namespace

TEST_CASE("arithmetic basics and canonical form") {
    Polynomial a = P("a1 + a2");
    Polynomial b = P("a1 - a2");
    CHECK(a + b == P("2*a1"));
    CHECK(a - a == Polynomial());
    CHECK(a * b == P("a1^2 - a2^2"));
    CHECK((a * b).deg() == 2);
    CHECK(P("0").is_zero());
    CHECK(P("3").constant_value() == 3);
    CHECK(P("a1*a2 + a2*a1") == P("2*a1*a2"));
}

TEST_CASE("ring axioms on random inputs") {
    Rng rng(12345);
    for (int it = 0; it < 200; ++it) {
        Polynomial f = testutil::random_polynomial(rng, 4, 5);
        Polynomial g = testutil::random_polynomial(rng, 4, 5);
        Polynomial h = testutil::random_polynomial(rng, 4, 5);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("linear_split examples and reconstruction") {
    Polynomial f = P("a1*a2 + a2*a3 + a1*a3");
    LinearSplit s = linear_split(f, 1);
    CHECK(s.leading == P("a2 + a3"));
    CHECK(s.constant == P("a2*a3"));

    LinearSplit absent = linear_split(P("a2 + a3"), 1);
    CHECK(absent.leading.is_zero());
    CHECK(absent.constant == P("a2 + a3"));

    CHECK_THROWS_AS(linear_split(P("a1^2"), 1), std::domain_error);

    Rng rng(99);
    for (int it = 0; it < 1000; ++it) {
        Polynomial g = testutil::random_multilinear(rng, 5, 8);
        int x = 1 + static_cast<int>(it % 5);
        LinearSplit ls = linear_split(g, x);
        CHECK(ls.leading * Polynomial::variable(x) + ls.constant == g);
        CHECK(ls.leading.deg_in(x) == 0);
        CHECK(ls.constant.deg_in(x) == 0);
    }
}

TEST_CASE("resultant_linear examples and antisymmetry") {
    CHECK(resultant_linear(P("a1 + a2"), P("a1 - a2"), 1) == P("-2*a2"));
    CHECK(resultant_linear(P("a1 + a2"), P("a1 + a2"), 1).is_zero());
    CHECK(resultant_linear(P("a1*a2 + 1"), P("a1 + a2"), 1) == P("a2^2 - 1"));
    CHECK_THROWS_AS(resultant_linear(P("a1^2"), P("a1"), 1), std::domain_error);

    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        Polynomial f = testutil::random_multilinear(rng, 4, 6);
        Polynomial g = testutil::random_multilinear(rng, 4, 6);
        CHECK(resultant_linear(f, g, 2) == -resultant_linear(g, f, 2));
    }
}

TEST_CASE("gcd examples and divisibility properties") {
    CHECK(gcd(P("a1^2 - a2^2"), P("a1 - a2")) == P("a1 - a2"));
    CHECK(gcd(P("a1*a2 + a2"), Polynomial()) == P("a1*a2 + a2"));

    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        Polynomial h = testutil::random_polynomial(rng, 3, 3, 1, 2);
        if (h.is_zero()) continue;
        Polynomial u = testutil::random_polynomial(rng, 3, 3, 1, 2);
        Polynomial v = testutil::random_polynomial(rng, 3, 3, 1, 2);
        Polynomial f = h * u, g = h * v;
        Polynomial d = gcd(f, g);
        CHECK(f.divided_by(d).has_value());
        CHECK(g.divided_by(d).has_value());
        if (!f.is_zero() && !g.is_zero()) {
            // Any common factor divides the gcd.
            CHECK(d.divided_by(h.primitive_part().normalized_sign()).has_value());
        }
    }
}

TEST_CASE("poly_sqrt examples and generate-and-square oracle") {
    CHECK(*poly_sqrt(P("a1^2 + 2*a1*a2 + a2^2")) == P("a1 + a2"));
    CHECK(!poly_sqrt(P("a1*a2")).has_value());

    Rng rng(5150);
    for (int it = 0; it < 200; ++it) {
        Polynomial g = testutil::random_polynomial(rng, 4, 5, 2, 3);
        auto r = poly_sqrt(g * g);
        REQUIRE(r.has_value());
        CHECK(testutil::equal_up_to_sign(*r, g));
    }
}

TEST_CASE("split_quadratic examples and reconstruction") {
    Polynomial a = P("a2*a1 + a3");
    Polynomial b = P("a3*a1 + a2");
    auto pair = split_quadratic(a * b, 1);
    REQUIRE(pair.has_value());
    CHECK(pair->first * pair->second == a * b);
    CHECK(pair->first.deg_in(1) == 1);
    CHECK(pair->second.deg_in(1) == 1);

    CHECK(!split_quadratic(P("a1^2 + a2"), 1).has_value());
    CHECK_THROWS_AS(split_quadratic(P("a1^3"), 1), std::domain_error);

    Rng rng(33);
    int found = 0;
    for (int it = 0; it < 200; ++it) {
        Polynomial f = testutil::random_multilinear(rng, 3, 4) * Polynomial::variable(1) +
                       testutil::random_multilinear(rng, 3, 4);
        Polynomial g = testutil::random_multilinear(rng, 3, 4) * Polynomial::variable(1) +
                       testutil::random_multilinear(rng, 3, 4);
        auto s = split_quadratic(f * g, 1);
        if (f.is_zero() || g.is_zero()) continue;
        REQUIRE(s.has_value());
        ++found;
        CHECK(s->first * s->second == f * g);
        CHECK(s->first.deg_in(1) <= 1);
        CHECK(s->second.deg_in(1) <= 1);
    }
    CHECK(found > 150);
}

TEST_CASE("square_split finds square factors") {
    Polynomial f = P("a1 + a2");
    Polynomial g = P("a2*a3 + 1");
    auto s = square_split(f * f * g);
    REQUIRE(s.has_value());
    CHECK(s->first * s->first * s->second == f * f * g);
    CHECK(s->first.deg() >= 1);
}

TEST_CASE("delta bookkeeping") {
    DeltaInfo d = delta_of(P("a1 + a2 + a3"));
    CHECK(d.total_degree == 1);
    CHECK(d.n_vars == 3);
    CHECK(d.delta == -1);

    DeltaInfo dp = delta_of_pair(P("a1 + a2"), P("a1 - a2"));
    CHECK(dp.total_degree == 2);
    CHECK(dp.n_vars == 2);
    CHECK(dp.delta == 0);

    CHECK_THROWS_AS(delta_of(P("a1^2 + a2")), std::domain_error);
}

TEST_CASE("text round-trip is exact") {
    Rng rng(808);
    for (int it = 0; it < 300; ++it) {
        Polynomial f = testutil::random_polynomial(rng, 5, 7, 3, 9);
        CHECK(Polynomial::parse(f.str()) == f);
    }
    CHECK(Polynomial::parse("0") == Polynomial());
    CHECK(Polynomial().str() == "0");
}
