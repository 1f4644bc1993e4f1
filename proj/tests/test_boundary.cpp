#include <doctest.h>

#include <random>

#include "bpdyn/boundary.hpp"
#include "oracle.hpp"

using namespace bpdyn;

TEST_CASE("boundary polynomial of the smallest families") {
    // K_3: 1 + 3x^2y + 3xy^2 + y^3
    BivariatePoly k3 = boundary_polynomial(make_family(GraphFamily::complete, 3));
    CHECK(k3.to_string() == "1 + 3x^2y + 3xy^2 + y^3");

    // E_2: (1+y)^2
    BivariatePoly e2 = boundary_polynomial(make_family(GraphFamily::empty, 2));
    CHECK(e2.to_string() == "1 + 2y + y^2");

    // P_2: the four subsets of one edge give 1 + 2xy + y^2
    BivariatePoly p2 = boundary_polynomial(make_family(GraphFamily::path, 2));
    CHECK(p2.to_string() == "1 + 2xy + y^2");
}

TEST_CASE("enumeration equals the closed forms for every order up to 12") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(boundary_polynomial(make_family(GraphFamily::complete, n)) ==
              closed_form_boundary(GraphFamily::complete, n));
        CHECK(boundary_polynomial(make_family(GraphFamily::empty, n)) ==
              closed_form_boundary(GraphFamily::empty, n));
    }
    CHECK(closed_form_boundary(GraphFamily::complete, 1).to_string() == "1 + y");
    CHECK_THROWS_AS(closed_form_boundary(GraphFamily::star, 3), std::invalid_argument);
}

TEST_CASE("full enumeration agrees with the subset-scanning oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n);
        auto expect = oracle::boundary_counts(g);
        auto got = boundary_count_grid(g);
        CHECK(got == expect);
    }
}

TEST_CASE("evaluation identities") {
    Graph k4 = make_family(GraphFamily::complete, 4);
    CHECK(boundary_polynomial(k4).evaluate(Rational(1), Rational(1)) == Rational(16));
    CHECK(boundary_polynomial(k4).evaluate(Rational(0), Rational(0)) == Rational(1));
    // odd complete graphs vanish at (0,-1)
    Graph k3 = make_family(GraphFamily::complete, 3);
    CHECK(boundary_polynomial(k3).evaluate(Rational(0), Rational(-1)) == Rational(0));
}

TEST_CASE("value at (1,1) is 2^order on random graphs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(rng, n);
        CHECK(boundary_polynomial(g).evaluate(Rational(1), Rational(1)) ==
              pow_rational(Rational(2), static_cast<unsigned>(n)));
    }
}

TEST_CASE("boundary polynomial multiplies over disjoint unions") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6));
        Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(boundary_polynomial(disjoint_union(a, b)) ==
              boundary_polynomial(a) * boundary_polynomial(b));
    }
}

TEST_CASE("named coefficients") {
    CHECK(boundary_coefficient(make_family(GraphFamily::cycle, 5), 2, 1) == 5);
    CHECK(boundary_coefficient(make_family(GraphFamily::star, 5), 1, 2) == 6);
    Graph s4p2 = disjoint_union(make_family(GraphFamily::star, 4),
                                make_family(GraphFamily::path, 2));
    CHECK(boundary_coefficient(s4p2, 1, 1) == 5);
    CHECK_THROWS_AS(boundary_coefficient(s4p2, 4, 3), std::invalid_argument);
}

TEST_CASE("coefficient structure on random graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n);
        auto grid = boundary_count_grid(g);

        long long pendants = 0, degree2 = 0, isolated = 0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 1) ++pendants;
            if (g.degree(v) == 2) ++degree2;
            if (g.degree(v) == 0) ++isolated;
        }
        CHECK(grid[1][1] == pendants);
        CHECK(grid[2][1] == degree2);
        CHECK(grid[0][1] == isolated);
        CHECK(grid[0][n] == 1);
        for (int i = 1; i <= n; ++i) CHECK(grid[i][0] == 0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) CHECK(grid[i][j] >= 0);
    }
}
