#include <doctest.h>

#include <random>
#include <sstream>

#include "bpdyn/errors.hpp"
#include "bpdyn/graph.hpp"
#include "oracle.hpp"

using namespace bpdyn;

TEST_CASE("family constructors follow the labeling conventions") {
    Graph k3 = make_family(GraphFamily::complete, 3);
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph s4 = make_family(GraphFamily::star, 4);
    CHECK(s4.degree(0) == 3);  // hub
    CHECK(s4.degree(1) == 1);
    CHECK(s4.degree(2) == 1);
    CHECK(s4.degree(3) == 1);

    Graph w5 = make_family(GraphFamily::wheel, 5);
    CHECK(w5.edge_count() == 8);
    CHECK(w5.degree(0) == 4);
    for (int v = 1; v < 5; ++v) CHECK(w5.degree(v) == 3);

    Graph p4 = make_family(GraphFamily::path, 4);
    CHECK(p4.adjacent(0, 1));
    CHECK(p4.adjacent(2, 3));
    CHECK_FALSE(p4.adjacent(0, 3));

    Graph c4 = make_family(GraphFamily::cycle, 4);
    CHECK(c4.adjacent(3, 0));
    CHECK(c4.edge_count() == 4);
}

TEST_CASE("family size violations raise invalid_argument") {
    CHECK_THROWS_AS(make_family(GraphFamily::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_family(GraphFamily::wheel, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_family(GraphFamily::complete, 0), std::invalid_argument);
}

TEST_CASE("graph construction guards") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(27), CapacityError);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);  // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("disjoint union relabels the second graph by offset") {
    Graph p2 = make_family(GraphFamily::path, 2);
    Graph u = disjoint_union(p2, p2);
    CHECK(u.order() == 4);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(2, 3));
    CHECK_FALSE(u.adjacent(1, 2));

    // S_2 is a single edge, so S_2 + 2*P_2 is three disjoint edges
    Graph g2 = disjoint_union(make_family(GraphFamily::star, 2),
                              repeat_union(2, make_family(GraphFamily::path, 2)));
    CHECK(g2.order() == 6);
    CHECK(g2.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(g2.degree(v) == 1);

    Graph e2 = disjoint_union(make_family(GraphFamily::empty, 1),
                              make_family(GraphFamily::empty, 1));
    CHECK(e2.order() == 2);
    CHECK(e2.edge_count() == 0);

    CHECK_THROWS_AS(disjoint_union(Graph(20), Graph(20)), CapacityError);
}

TEST_CASE("repeat union folds disjoint unions") {
    Graph twoP2 = repeat_union(2, make_family(GraphFamily::path, 2));
    CHECK(twoP2.order() == 4);
    CHECK(twoP2.edge_count() == 2);

    Graph e3 = repeat_union(3, make_family(GraphFamily::complete, 1));
    CHECK(e3.order() == 3);
    CHECK(e3.edge_count() == 0);

    Graph twoK3 = repeat_union(2, make_family(GraphFamily::complete, 3));
    CHECK(twoK3.order() == 6);
    CHECK(twoK3.edge_count() == 6);
    CHECK_FALSE(twoK3.adjacent(2, 3));

    CHECK_THROWS_AS(repeat_union(0, e3), std::invalid_argument);
    CHECK_THROWS_AS(repeat_union(14, twoP2), CapacityError);
}

TEST_CASE("graph spec mini-language") {
    Graph g = parse_graph_spec("S2+2*P2");
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 3);

    CHECK(parse_graph_spec("K5") == make_family(GraphFamily::complete, 5));
    CHECK(parse_graph_spec(" K5 ") == make_family(GraphFamily::complete, 5));
    CHECK(parse_graph_spec("2*K3 + E1") == disjoint_union(
                                               repeat_union(2, make_family(GraphFamily::complete, 3)),
                                               make_family(GraphFamily::empty, 1)));

    Graph edge = parse_graph_spec("edges:5:0-4");
    CHECK(edge.order() == 5);
    CHECK(edge.edge_count() == 1);
    CHECK(edge.adjacent(0, 4));

    Graph multi = parse_graph_spec("edges:4:0-1,2-3");
    CHECK(multi.edge_count() == 2);
}

TEST_CASE("graph spec errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_graph_spec("K"), doctest::Contains("position"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("X3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("C2"), std::invalid_argument);   // family minimum
    CHECK_THROWS_AS(parse_graph_spec("edges:3:0-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("edges:3:1-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("K3+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);
}

TEST_CASE("edge-list files parse") {
    std::istringstream in("4\n0 1\n2 3\n");
    Graph g = read_edge_list(in);
    CHECK(g.order() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
}

TEST_CASE("vertex boundary on the worked examples") {
    Graph k3 = make_family(GraphFamily::complete, 3);
    CHECK(vertex_boundary(k3, VertexSet::of({0}, 3)) == VertexSet::of({1, 2}, 3));
    CHECK(vertex_boundary(k3, VertexSet::empty(3)) == VertexSet::empty(3));

    Graph p3 = make_family(GraphFamily::path, 3);
    CHECK(vertex_boundary(p3, VertexSet::of({0, 2}, 3)) == VertexSet::of({1}, 3));
}

TEST_CASE("vertex boundary properties on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(rng, n);
        std::uint32_t bits = rng() & g.full_mask();
        VertexSet s(bits, n);
        VertexSet b = vertex_boundary(g, s);
        CHECK((b.bits() & s.bits()) == 0u);
        CHECK(b.size() <= n - s.size());
        CHECK(vertex_boundary(g, VertexSet::full(n)).size() == 0);
        // agreement with the adjacency-scanning oracle
        CHECK(b.size() == oracle::boundary_size(g, oracle::subset_members(bits, n)));
    }
}

TEST_CASE("complete and empty family boundary sizes") {
    Graph k6 = make_family(GraphFamily::complete, 6);
    Graph e6 = make_family(GraphFamily::empty, 6);
    for (std::uint32_t bits = 1; bits < (1u << 6) - 1; ++bits) {
        VertexSet s(bits, 6);
        CHECK(vertex_boundary(k6, s).size() == 6 - s.size());
        CHECK(vertex_boundary(e6, s).size() == 0);
    }
}

TEST_CASE("boundary splits across disjoint-union components") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n1 = 1 + static_cast<int>(rng() % 5), n2 = 1 + static_cast<int>(rng() % 5);
        Graph a = oracle::random_graph(rng, n1);
        Graph b = oracle::random_graph(rng, n2);
        Graph u = disjoint_union(a, b);
        std::uint32_t sa = rng() & a.full_mask();
        std::uint32_t sb = rng() & b.full_mask();
        VertexSet joint(sa | (sb << n1), u.order());
        VertexSet expect_a = vertex_boundary(a, VertexSet(sa, n1));
        VertexSet expect_b = vertex_boundary(b, VertexSet(sb, n2));
        CHECK(vertex_boundary(u, joint).bits() ==
              (expect_a.bits() | (expect_b.bits() << n1)));
    }
}
