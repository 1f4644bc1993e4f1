#include <doctest.h>

#include <random>

#include "bpdyn/boundary.hpp"
#include "bpdyn/weighted.hpp"
#include "oracle.hpp"

using namespace bpdyn;

namespace {

Graph figure_edge_graph() { return parse_graph_spec("edges:5:0-4"); }

}  // namespace

TEST_CASE("subset weights: empty and odd sizes weigh 1, even sizes weigh k") {
    WeightParams p(parse_rational("-211/80"), Rational(0));
    CHECK(subset_weight(VertexSet::empty(5), p) == Rational(1));
    CHECK(subset_weight(VertexSet::of({0, 2, 4}, 5), p) == Rational(1));
    CHECK(subset_weight(VertexSet::of({1, 3}, 5), p) == Rational(-211, 80));
}

TEST_CASE("weight parameter invariants") {
    CHECK_THROWS_AS(WeightParams(Rational(1), Rational(2), {Rational(1), Rational(2)}),
                    std::invalid_argument);
    WeightParams ok(Rational(1), Rational(3), {Rational(1), Rational(2)});
    CHECK(ok.u == Rational(3));
}

TEST_CASE("weighted table marks parity counts and unrealized cells") {
    // K_3: no isolated vertices, so (0,1) is unrealized
    WeightedTable k3 = weighted_table(make_family(GraphFamily::complete, 3));
    CHECK(k3.cell(0, 1).unrealized);
    CHECK(k3.cell(2, 1).odd_count == 3);
    CHECK(k3.cell(1, 2).even_count == 3);
    CHECK(k3.cell(0, 3).odd_count == 1);
    CHECK(k3.cell(1, 1).unrealized);
    CHECK(k3.cell(0, 2).unrealized);

    // P_2 + K_1: one isolated vertex realizes (0,1); (2,1) is unrealized
    WeightedTable g1 = weighted_table(parse_graph_spec("P2+K1"));
    CHECK(g1.cell(0, 1).odd_count == 1);
    CHECK_FALSE(g1.cell(0, 1).unrealized);
    CHECK(g1.cell(2, 1).unrealized);

    // five vertices with the single edge 0-4: six even pairs with boundary 1
    WeightedTable fig = weighted_table(figure_edge_graph());
    CHECK(fig.cell(1, 2).even_count == 6);
    CHECK(fig.cell(1, 2).odd_count == 0);
    CHECK_FALSE(fig.cell(1, 2).unrealized);

    // the j = 0 row is structurally zero except the empty set
    CHECK(fig.cell(0, 0).odd_count == 1);
    for (int i = 1; i <= 5; ++i) {
        CHECK(fig.cell(i, 0).odd_count == 0);
        CHECK(fig.cell(i, 0).even_count == 0);
        CHECK_FALSE(fig.cell(i, 0).unrealized);
    }
}

TEST_CASE("weighted parity counts agree with the oracle enumeration") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n);
        auto cells = oracle::weighted_cells(g);
        auto grid = boundary_count_grid(g);
        WeightedTable t = weighted_table(g);
        for (int i = 0; i <= n; ++i)
            for (int j = 1; i + j <= n; ++j) {
                const AffineCell& c = t.cell(i, j);
                CHECK(c.odd_count == cells[i][j].odd);
                CHECK(c.even_count == cells[i][j].even);
                CHECK(c.odd_count + c.even_count == grid[i][j]);
                CHECK(c.unrealized == (grid[i][j] == 0));
            }
    }
}

TEST_CASE("instantiating with k=1, u=0 recovers the unweighted polynomial") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n);
        CHECK(instantiate(weighted_table(g), WeightParams::unweighted()) ==
              boundary_polynomial(g));
    }
}

TEST_CASE("the fitted weights reproduce the two-cycle diagonal sums exactly") {
    WeightParams p(parse_rational("-211/80"), parse_rational("299/120"));
    BivariatePoly bw = instantiate(weighted_table(figure_edge_graph()), p);
    UnivariatePoly diag = bw.diagonal();
    CHECK(diag.coeff(1) == Rational(3));
    CHECK(diag.coeff(3) == Rational(-28, 3));
    CHECK(diag.coeff(5) == Rational(16, 5));
}

TEST_CASE("instantiate on E_1 is parameter-free") {
    WeightParams weird(Rational(-99), Rational(1234, 7));
    BivariatePoly b = instantiate(weighted_table(make_family(GraphFamily::empty, 1)), weird);
    CHECK(b.to_string() == "1 + y");
}

TEST_CASE("tilde diagonal drives the Lienard construction") {
    WeightParams any(Rational(9), Rational(-4));
    CHECK(weighted_tilde_diagonal(make_family(GraphFamily::empty, 1), any) ==
          UnivariatePoly({Rational(0), Rational(1)}));

    // K_3 with k=0, u=-1: cells (0,1),(1,1),(0,2) are unrealized, so the
    // diagonal picks up u at degree 1 and 2u at degree 2; degree 3 carries
    // 3k + 3 + 1.
    WeightParams fig3b(Rational(0), Rational(-1));
    UnivariatePoly f = weighted_tilde_diagonal(make_family(GraphFamily::complete, 3), fig3b);
    CHECK(f == UnivariatePoly({Rational(0), Rational(-1), Rational(-2), Rational(4)}));
    CHECK(f.coeff(0) == Rational(0));

    // P_2 + K_1 with k=0, u=-2: degree-3 sum is 0 + (-2) + 1 = -1
    WeightParams fig3a(Rational(0), Rational(-2));
    UnivariatePoly f2 = weighted_tilde_diagonal(parse_graph_spec("P2+K1"), fig3a);
    CHECK(f2 == UnivariatePoly({Rational(0), Rational(1), Rational(2), Rational(-1)}));
}

TEST_CASE("affine diagonal sums render and evaluate") {
    WeightedTable fig = weighted_table(figure_edge_graph());
    AffineForm d3 = fig.diagonal_sum(3);
    CHECK(d3.constant == Rational(4));
    CHECK(d3.k_coeff == Rational(6));
    CHECK(d3.u_coeff == Rational(1));
    CHECK(d3.render() == "4 + 6*k + u");
    WeightParams p(parse_rational("-211/80"), parse_rational("299/120"));
    CHECK(d3.value(p) == Rational(-28, 3));

    AffineForm d5 = fig.diagonal_sum(5);
    CHECK(d5.constant == Rational(1));
    CHECK(d5.k_coeff == Rational(2));
    CHECK(d5.u_coeff == Rational(3));
}
