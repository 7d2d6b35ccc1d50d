#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "c2/counting.hpp"
#include "c2/kirchhoff.hpp"
#include "test_util.hpp"

using namespace c2;
namespace tu = c2::testutil;

namespace {
Polynomial P(const std::string& s) { return Polynomial::parse(s); }

VarSet labels_of(const Graph& g) {
    VarSet s;
    for (auto& e : g.edges()) s.insert(e.label);
    return s;
}

// Independent oracle: full integer evaluation over every point, prime fields
// only (no shortcuts shared with count_affine).
Int naive_count(const std::vector<Polynomial>& polys, const VarSet& ambient,
                const FiniteField& F) {
    REQUIRE(F.ext_degree() == 1);
    std::vector<int> vars = ambient.to_vector();
    int n = static_cast<int>(vars.size());
    Int count = 0;
    std::vector<std::int64_t> digit(n, 0);
    while (true) {
        std::vector<Int> point(kMaxVars, 0);
        for (int j = 0; j < n; ++j) point[vars[j] - 1] = digit[j];
        bool all_zero = true;
        for (auto& p : polys) {
            Int v = p.eval(point) % F.p();
            if (v != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) ++count;
        int i = 0;
        while (i < n && ++digit[i] == F.q()) digit[i++] = 0;
        if (i == n) break;
    }
    return count;
}
} // namespace

TEST_CASE("finite field axioms hold exhaustively for small q") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        REQUIRE(FiniteField::supported(q));
        FiniteField F = FiniteField::make(q);
        for (std::int64_t a = 0; a < q; ++a) {
            CHECK(F.add(static_cast<FiniteField::Elt>(a), 0) == a);
            CHECK(F.mul(static_cast<FiniteField::Elt>(a), 1) == a);
            CHECK(F.add(static_cast<FiniteField::Elt>(a), F.neg(static_cast<FiniteField::Elt>(a))) == 0);
            if (a != 0)
                CHECK(F.mul(static_cast<FiniteField::Elt>(a),
                            F.inv(static_cast<FiniteField::Elt>(a))) == 1);
        }
        for (std::int64_t a = 0; a < q; ++a)
            for (std::int64_t b = 0; b < q; ++b) {
                auto ea = static_cast<FiniteField::Elt>(a), eb = static_cast<FiniteField::Elt>(b);
                CHECK(F.add(ea, eb) == F.add(eb, ea));
                CHECK(F.mul(ea, eb) == F.mul(eb, ea));
                for (std::int64_t c = 0; c < q && q <= 16; ++c) {
                    auto ec = static_cast<FiniteField::Elt>(c);
                    CHECK(F.add(F.add(ea, eb), ec) == F.add(ea, F.add(eb, ec)));
                    CHECK(F.mul(F.mul(ea, eb), ec) == F.mul(ea, F.mul(eb, ec)));
                    CHECK(F.mul(ea, F.add(eb, ec)) == F.add(F.mul(ea, eb), F.mul(ea, ec)));
                }
            }
    }
    CHECK(!FiniteField::supported(6));
    CHECK(!FiniteField::supported(1));
    CHECK_THROWS_AS(FiniteField::make(12), std::invalid_argument);
}

TEST_CASE("count_affine basics") {
    FiniteField F3 = FiniteField::make(3);
    // Linear form in A^3 has q^2 zeros.
    CHECK(count_affine({P("a1 + a2 + a3")}, VarSet::range(1, 3), F3).count == 9);
    // Empty system counts the whole space.
    CHECK(count_affine({}, VarSet::range(1, 4), F3).count == 81);
    // Variable outside ambient set.
    CHECK_THROWS_AS(count_affine({P("a5")}, VarSet::range(1, 3), F3), std::invalid_argument);

    FiniteField F2 = FiniteField::make(2);
    Polynomial psi = graph_polynomial(tu::k4());
    CountResult r = count_affine({psi}, VarSet::range(1, 6), F2);
    CHECK(r.count == naive_count({psi}, VarSet::range(1, 6), F2));
    CHECK(r.count % 4 == 0);
}

TEST_CASE("count_affine matches the naive oracle on random systems") {
    tu::Rng rng(4096);
    for (std::int64_t q : {2, 3, 4, 5}) {
        FiniteField F = FiniteField::make(q);
        if (F.ext_degree() > 1) continue; // naive oracle reduces integer evals mod p
        for (int it = 0; it < 25; ++it) {
            std::vector<Polynomial> sys;
            int k = 1 + (it % 2);
            for (int i = 0; i < k; ++i) sys.push_back(tu::random_polynomial(rng, 3, 4, 2, 3));
            CHECK(count_affine(sys, VarSet::range(1, 3), F).count ==
                  naive_count(sys, VarSet::range(1, 3), F));
        }
    }
}

TEST_CASE("count over extension fields uses the table field") {
    // x^2 = c has 0 or 2 solutions in F_4 only for c = 0 since squaring is a
    // bijection in characteristic 2; cross-check a simple count instead:
    FiniteField F4 = FiniteField::make(4);
    // a1*a2 = 0: 2q - 1 points.
    CHECK(count_affine({P("a1*a2")}, VarSet::range(1, 2), F4).count == 7);
    // a1^2 + a2^2 = (a1+a2)^2 in char 2: zero iff a1 = a2 -> q points.
    CHECK(count_affine({P("a1^2 + a2^2")}, VarSet::range(1, 2), F4).count == 4);
}

TEST_CASE("count_parallel equals single shard") {
    FiniteField F3 = FiniteField::make(3);
    Polynomial psi = graph_polynomial(tu::k5());
    VarSet amb = labels_of(tu::k5());
    Int one = count_affine({psi}, amb, F3).count;
    for (int shards : {2, 3, 8}) CHECK(count_parallel({psi}, amb, F3, shards).count == one);
    CHECK_THROWS_AS(count_parallel({psi}, amb, F3, 0), std::invalid_argument);
}

TEST_CASE("c2 brute force ground truths") {
    // c2(ZZ_3 = K4) = -1 for q in {2,3,5,7}.
    for (std::int64_t q : {2, 3, 5, 7}) {
        FiniteField F = FiniteField::make(q);
        CHECK(c2_bruteforce(zigzag(3, false), F) == static_cast<int>(q - 1));
    }
    // c2(K5) = -15: residue 6 mod 7.
    FiniteField F7 = FiniteField::make(7);
    CHECK(c2_bruteforce(tu::k5(), F7) == 6);
    // Triangle boundary case: count is exactly q^2, residue 1.
    for (std::int64_t q : {2, 3, 5}) {
        FiniteField F = FiniteField::make(q);
        CHECK(count_affine({graph_polynomial(tu::triangle())}, VarSet::range(1, 3), F).count ==
              Int(q) * q);
        CHECK(c2_bruteforce(tu::triangle(), F) == 1);
    }
    // 2-valent vertex kills c2.
    FiniteField F3 = FiniteField::make(3);
    CHECK(c2_bruteforce(tu::subdivided_k4(), F3) == 0);
    CHECK_THROWS_AS(c2_bruteforce(tu::banana(), F3), std::invalid_argument);
}

TEST_CASE("chevalley-warning predicate and vanishing") {
    CHECK(chevalley_warning_applies({P("a1 + a2 + a3")}, VarSet::range(1, 3)));
    CHECK(chevalley_warning_applies({graph_polynomial(tu::k4())}, VarSet::range(1, 6)));
    Graph k5 = tu::k5();
    Polynomial p1 = dodgson(k5, DodgsonSpec::of({1, 3}, {2, 4}));
    Polynomial p2 = dodgson(k5, DodgsonSpec::of({1, 4}, {2, 3}));
    CHECK(!chevalley_warning_applies({p1, p2}, VarSet::range(5, 10)));

    tu::Rng rng(555);
    for (std::int64_t q : {2, 3, 5}) {
        FiniteField F = FiniteField::make(q);
        for (int it = 0; it < 20; ++it) {
            std::vector<Polynomial> sys{tu::random_polynomial(rng, 4, 3, 1, 2)};
            if (chevalley_warning_applies(sys, VarSet::range(1, 4)))
                CHECK(count_affine(sys, VarSet::range(1, 4), F).count % q == 0);
        }
    }
}

TEST_CASE("linear elimination identities (lemA17)") {
    FiniteField F2 = FiniteField::make(2);
    LinearElimReport r = verify_linear_elim(P("a1 + a2"), P("a2*a1 + 1"), P("1"), 1, F2);
    CHECK(r.checks.size() == 4);
    CHECK(r.all_pass());

    // Degenerate split: f has no linear part.
    LinearElimReport r2 = verify_linear_elim(P("a2"), P("a2*a1"), P("a2 + 1"), 1, F2);
    CHECK(r2.all_pass());

    CHECK_THROWS_AS(verify_linear_elim(P("a1^2"), P("a1"), P("1"), 1, FiniteField::make(3)),
                    std::domain_error);

    tu::Rng rng(314159);
    for (std::int64_t q : {2, 3, 5}) {
        FiniteField F = FiniteField::make(q);
        for (int it = 0; it < 40; ++it) {
            Polynomial f = tu::random_multilinear(rng, 3, 4) * Polynomial::variable(1) +
                           tu::random_multilinear(rng, 3, 4);
            Polynomial g = tu::random_multilinear(rng, 3, 4) * Polynomial::variable(1) +
                           tu::random_multilinear(rng, 3, 4);
            Polynomial h = tu::random_multilinear(rng, 3, 4);
            CHECK(verify_linear_elim(f, g, h, 1, F).all_pass());
        }
    }
}
