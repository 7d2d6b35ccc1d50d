#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "c2/graph.hpp"
#include "test_util.hpp"

using namespace c2;
namespace tu = c2::testutil;

TEST_CASE("delete_edge examples") {
    Graph c3 = tu::triangle();
    Graph cut = c3.delete_edge(1);
    CHECK(cut.n_edges() == 2);
    CHECK(cut.loop_number() == 0);

    Graph k4cut = tu::k4().delete_edge(3);
    CHECK(k4cut.n_edges() == 5);
    CHECK(k4cut.n_vertices() == 4);
    CHECK(k4cut.loop_number() == 2);

    Graph b = tu::banana().delete_edge(1);
    CHECK(b.n_edges() == 1);
    CHECK(b.loop_number() == 0);
    CHECK(b.edges()[0].label == 2); // surviving label preserved

    CHECK_THROWS_AS(tu::triangle().delete_edge(9), std::invalid_argument);
}

TEST_CASE("contract_edge examples") {
    Graph c3 = tu::triangle().contract_edge(1);
    CHECK(c3.n_vertices() == 2);
    CHECK(c3.n_edges() == 2);
    CHECK(c3.loop_number() == 1);

    Graph p = tu::path2().contract_edge(1);
    CHECK(p.n_edges() == 1);
    CHECK(p.loop_number() == 0);

    Graph k4c = tu::k4().contract_edge(1);
    CHECK(k4c.n_edges() == 5);
    CHECK(k4c.n_vertices() == 3);
    CHECK(k4c.loop_number() == 3);

    // Contracting a loop is rejected.
    Graph loopy = tu::triangle().contract_edge(2); // makes edges parallel
    Graph with_loop = loopy.contract_edge(1);      // contracting a parallel edge leaves a loop
    CHECK_THROWS_AS(with_loop.contract_edge(3), std::invalid_argument);
}

TEST_CASE("remove_vertex examples") {
    CHECK(tu::isomorphic(tu::k5().remove_vertex(2), tu::k4()));
    Graph c3r = tu::triangle().remove_vertex(0);
    CHECK(c3r.n_edges() == 1);
    Graph z = zigzag(4, true).remove_vertex(3);
    CHECK(z.n_edges() == 8);
    CHECK(z.n_vertices() == 5);
}

TEST_CASE("complete examples") {
    Graph k5 = tu::k4().complete();
    CHECK(k5.n_vertices() == 5);
    CHECK(k5.n_edges() == 10);
    CHECK(k5.loop_number() == 6);
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
    CHECK(tu::isomorphic(k5, tu::k5()));

    CHECK(tu::isomorphic(zigzag(4, false).complete(), tu::octahedron()));
    CHECK_THROWS_AS(tu::triangle().complete(), std::invalid_argument);
}

TEST_CASE("zigzag family") {
    CHECK(tu::isomorphic(zigzag(3, true), tu::k5()));
    CHECK(tu::isomorphic(zigzag(3, false), tu::k4()));
    Graph z5 = zigzag(5, false);
    CHECK(z5.n_edges() == 10);
    CHECK(z5.n_vertices() == 6);
    CHECK(z5.loop_number() == 5);
    CHECK_THROWS_AS(zigzag(2, true), std::invalid_argument);

    for (int h = 3; h <= 8; ++h) {
        Graph full = zigzag(h, true);
        CHECK(full.n_edges() == 2 * h + 4);
        CHECK(full.loop_number() == h + 3);
        GraphInvariants inv = full.invariants();
        CHECK(inv.delta == 2);
        for (int d : inv.degree_sequence) CHECK(d == 4);
        CHECK(tu::isomorphic(zigzag(h, false).complete(), full));
    }
}

TEST_CASE("loop number under edits on a random corpus") {
    tu::Rng rng(4242);
    for (int it = 0; it < 200; ++it) {
        Graph g = tu::random_connected_graph(rng);
        int h = g.loop_number();
        for (auto& e : g.edges()) {
            if (e.is_loop()) continue;
            CHECK(g.contract_edge(e.label).loop_number() == h);
            Graph del = g.delete_edge(e.label);
            // Deleting a cycle edge keeps the graph connected and drops h by
            // one; deleting a bridge splits the graph and preserves h.
            if (del.is_connected())
                CHECK(del.loop_number() == h - 1);
            else
                CHECK(del.loop_number() == h);
        }
    }
}

TEST_CASE("json round-trip and dot export") {
    Graph g = tu::subdivided_k4();
    Graph back = Graph::from_json(g.to_json());
    CHECK(back.n_vertices() == g.n_vertices());
    REQUIRE(back.n_edges() == g.n_edges());
    for (int i = 0; i < g.n_edges(); ++i) {
        CHECK(back.edges()[i].u == g.edges()[i].u);
        CHECK(back.edges()[i].v == g.edges()[i].v);
        CHECK(back.edges()[i].label == g.edges()[i].label);
    }
    CHECK(g.to_dot().find("0 -- 1") != std::string::npos);
    CHECK_THROWS(Graph::from_json("{\"vertices\": 2}"));
}
