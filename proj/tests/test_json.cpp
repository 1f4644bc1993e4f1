#include <doctest.h>

#include <random>
#include <sstream>

#include "bpdyn/json_io.hpp"
#include "oracle.hpp"

using namespace bpdyn;

TEST_CASE("polynomial JSON round trips and keeps term order") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7));
        BivariatePoly p = boundary_polynomial(g);
        Json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);

        // terms sorted by (i+j, i)
        int prev_d = -1, prev_i = -1;
        for (const auto& t : j["terms"]) {
            int i = t["i"], jj = t["j"];
            int d = i + jj;
            CHECK((d > prev_d || (d == prev_d && i > prev_i)));
            prev_d = d;
            prev_i = i;
        }
    }
}

TEST_CASE("weight parameter JSON uses num/den strings") {
    WeightParams p(Rational(-211, 80), Rational(299, 120), {Rational(299, 120)});
    Json j = params_to_json(p);
    CHECK(j["k"] == "-211/80");
    CHECK(j["u"] == "299/120");
    WeightParams back = params_from_json(j);
    CHECK(back.k == p.k);
    CHECK(back.u == p.u);
    CHECK(back.named_parts == p.named_parts);
}

TEST_CASE("system and focal-value JSON forms") {
    PlanarSystem s = build_hopf(make_family(GraphFamily::complete, 4),
                                parse_graph_spec("S2+2*P2"), Rational(1, 1000));
    Json js = system_to_json(s);
    CHECK(js["label"].get<std::string>().find("hopf") == 0);
    CHECK(poly_from_json(js["fx"]) == s.fx);

    LyapunovResult r = lyapunov_number(make_family(GraphFamily::complete, 4),
                                       parse_graph_spec("S2+2*P2"));
    Json jr = lyapunov_to_json(r);
    CHECK(jr["pi_coefficient"] == "-27");
    CHECK(jr["sign"] == "negative");
    CHECK(jr["kind"] == "supercritical");
}

TEST_CASE("identical inputs produce identical JSON output") {
    Graph g = parse_graph_spec("edges:5:0-4");
    FitResult a = fit_weight_params(g, {Rational(1, 2), Rational(3)});
    FitResult b = fit_weight_params(g, {Rational(1, 2), Rational(3)});
    CHECK(fit_to_json(a).dump() == fit_to_json(b).dump());
}

TEST_CASE("trajectory CSV carries full precision") {
    Trajectory tr;
    tr.samples.push_back({0.0, 1.0, 0.0});
    tr.samples.push_back({1e-3, 0.12345678901234567, -2.5});
    std::ostringstream os;
    write_trajectory_csv(os, tr);
    std::string text = os.str();
    CHECK(text.rfind("t,x,y\n", 0) == 0);
    CHECK(text.find("0.12345678901234566") != std::string::npos);  // nearest double
}
