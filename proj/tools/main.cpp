// Command-line front end: polynomials, coefficient queries, equilibrium
// classification, focal values, amplitude polynomials and weight fitting,
// simulation with cycle detection, and the reproduction harness.
//
// Exit codes: 0 success, 1 user error, 2 internal error, 3 reproduction
// failures present.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bpdyn/errors.hpp"
#include "bpdyn/json_io.hpp"
#include "bpdyn/repro.hpp"
#include "bpdyn/simulate.hpp"
#include "bpdyn/systems.hpp"

using namespace bpdyn;

namespace {

constexpr const char* kGenerator = "bpdyn 0.1.0";

Graph load_graph(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open graph file '" + spec.substr(1) + "'");
        return read_edge_list(in);
    }
    return parse_graph_spec(spec);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void emit(const Json& payload, bool as_json, const std::string& out_file,
          const std::string& human) {
    Json j = payload;
    j["generator"] = kGenerator;
    if (!out_file.empty()) {
        std::ofstream os(out_file);
        if (!os) throw std::invalid_argument("cannot write '" + out_file + "'");
        os << j.dump(2) << "\n";
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

WeightParams params_from_flags(const std::string& k, const std::string& u,
                               const std::string& parts) {
    std::vector<Rational> named;
    if (!parts.empty()) named = parse_rational_list(parts);
    return WeightParams(parse_rational(k), parse_rational(u), std::move(named));
}

struct GlobalFlags {
    bool json = false;
    std::string out;
    int seed_cap = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"boundary polynomials of graphs and the planar systems built from them"};
    app.require_subcommand(1);
    // let global flags appear after the subcommand as well
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "print machine-readable JSON to stdout");
    app.add_option("--out", flags.out, "write the JSON payload to a file");
    app.add_option("--seed-cap", flags.seed_cap, "cap the number of simulation seeds");

    // ---- poly ----------------------------------------------------------
    auto* poly = app.add_subcommand("poly", "boundary polynomial of a graph");
    std::string poly_spec, poly_k = "1", poly_u = "0", poly_parts;
    bool poly_weighted = false, poly_diag = false, poly_tilde = false;
    poly->add_option("graph", poly_spec, "graph spec (K5, S2+2*P2, edges:5:0-4, @file)")
        ->required();
    auto* poly_k_opt = poly->add_option("--k", poly_k, "weight of nonempty even-size subsets");
    auto* poly_u_opt = poly->add_option("--u", poly_u, "value of unrealized coefficient cells");
    poly->add_flag("--weighted", poly_weighted, "use the parity-weighted polynomial")
        ->needs(poly_k_opt)
        ->needs(poly_u_opt);
    poly->add_option("--parts", poly_parts, "comma list decomposing u (metadata)");
    poly->add_flag("--diag", poly_diag, "print the one-variable diagonal B(G;x)");
    poly->add_flag("--tilde", poly_tilde, "subtract the constant term");

    // ---- coeff ---------------------------------------------------------
    auto* coeff = app.add_subcommand("coeff", "one coefficient B_{i,j} of a graph");
    std::string coeff_spec;
    int coeff_i = 0, coeff_j = 0;
    coeff->add_option("graph", coeff_spec)->required();
    coeff->add_option("i", coeff_i, "boundary size")->required();
    coeff->add_option("j", coeff_j, "subset size")->required();

    // ---- classify ------------------------------------------------------
    auto* classify = app.add_subcommand(
        "classify", "equilibrium type of the growth system 2^n1 x - B(G1), 2^n2 y - B(G2)");
    std::string cls_g1, cls_g2, cls_at = "1,1";
    classify->add_option("g1", cls_g1)->required();
    classify->add_option("g2", cls_g2)->required();
    classify->add_option("--at", cls_at, "equilibrium point as x,y (default 1,1)");

    // ---- lyapunov ------------------------------------------------------
    auto* lyap = app.add_subcommand("lyapunov", "focal value of the weak-focus pairing");
    std::string ly_g1, ly_g2, ly_general;
    lyap->add_option("g1", ly_g1)->required();
    lyap->add_option("g2", ly_g2)->required();
    lyap->add_option("--general", ly_general,
                     "four-parameter linear part a1,a2,a3,a4 (a1+a4=0, a1*a4-a2*a3>0)");

    // ---- radii ---------------------------------------------------------
    auto* radii = app.add_subcommand(
        "radii", "amplitude polynomial in rho = r^2 and its positive roots, or weight fitting");
    std::string rad_spec, rad_k, rad_u, rad_fit, rad_fit_rho;
    radii->add_option("g1", rad_spec)->required();
    radii->add_option("--k", rad_k, "weight parameter k");
    radii->add_option("--u", rad_u, "unrealized-cell parameter u");
    radii->add_option("--fit", rad_fit, "target cycle radii r1,r2,... (rationals; squared inside)");
    radii->add_option("--fit-rho", rad_fit_rho, "target squared radii rho1,rho2,...");

    // ---- simulate ------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "integrate a system and detect limit cycles");
    std::string sim_system, sim_g, sim_g1, sim_g2, sim_alpha = "0", sim_spec;
    std::string sim_k = "1", sim_u = "0", sim_eps = "1/100", sim_seeds = "0.5,2.0";
    std::string sim_method = "rk4", sim_x0;
    double sim_step = 1e-3, sim_tol = 1e-9, sim_max_time = 1000.0;
    sim->add_option("system", sim_system,
                    "one of: example1, lienard, eps-lienard, circle1, circle2, hopf, hopf-general")
        ->required();
    sim->add_option("--g", sim_g, "graph for circle1/circle2");
    sim->add_option("--g1", sim_g1, "first graph");
    sim->add_option("--g2", sim_g2, "second graph");
    sim->add_option("--alpha", sim_alpha, "linear parameter of the weak-focus system");
    sim->add_option("--spec", sim_spec, "a1,a2,a3,a4 for hopf-general");
    sim->add_option("--k", sim_k, "weight parameter k");
    sim->add_option("--u", sim_u, "unrealized-cell parameter u");
    sim->add_option("--eps", sim_eps, "scaling of the damping term (eps-lienard)");
    sim->add_option("--seeds", sim_seeds, "comma list of seed radii on the positive x-axis");
    sim->add_option("--method", sim_method, "rk4 | rkf45");
    sim->add_option("--step", sim_step, "rk4 step size");
    sim->add_option("--tol", sim_tol, "rkf45 tolerance");
    sim->add_option("--max-time", sim_max_time, "integration horizon per run");
    sim->add_option("--x0", sim_x0, "also dump one trajectory from x,y");

    // ---- repro ---------------------------------------------------------
    auto* repro = app.add_subcommand("repro", "run the full reproduction suite");
    std::string repro_only;
    repro->add_option("--only", repro_only, "run only entries whose name contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // user error
    }

    if (poly->parsed()) {
        Graph g = load_graph(poly_spec);
        Json j;
        std::ostringstream human;
        if (poly_weighted) {
            WeightParams params = params_from_flags(poly_k, poly_u, poly_parts);
            WeightedTable table = weighted_table(g);
            BivariatePoly p = instantiate(table, params);
            if (poly_tilde) p = tilde(p);
            j["table"] = table_to_json(table);
            j["params"] = params_to_json(params);
            j["poly"] = poly_to_json(p);
            human << p.to_string() << "\n";
            if (poly_diag) {
                UnivariatePoly d = p.diagonal();
                j["diagonal"] = poly_to_json(d);
                human << "diagonal: " << d.to_string() << "\n";
            }
        } else {
            BivariatePoly p = boundary_polynomial(g);
            if (poly_tilde) p = tilde(p);
            j["poly"] = poly_to_json(p);
            human << p.to_string() << "\n";
            if (poly_diag) {
                UnivariatePoly d = p.diagonal();
                j["diagonal"] = poly_to_json(d);
                human << "diagonal: " << d.to_string() << "\n";
            }
        }
        emit(j, flags.json, flags.out, human.str());
        return 0;
    }

    if (coeff->parsed()) {
        Graph g = load_graph(coeff_spec);
        long long value = boundary_coefficient(g, coeff_i, coeff_j);
        Json j;
        j["i"] = coeff_i;
        j["j"] = coeff_j;
        j["value"] = value;
        emit(j, flags.json, flags.out, std::to_string(value) + "\n");
        return 0;
    }

    if (classify->parsed()) {
        Graph g1 = load_graph(cls_g1), g2 = load_graph(cls_g2);
        auto point = parse_rational_list(cls_at);
        if (point.size() != 2) throw std::invalid_argument("--at expects x,y");
        PlanarSystem s = build_example1(g1, g2);
        EquilibriumClass cls = classify_equilibrium(s, point[0], point[1]);
        Json j;
        j["system"] = system_to_json(s);
        j["point"] = {rational_str(point[0]), rational_str(point[1])};
        j["classification"] = equilibrium_to_json(cls);
        std::ostringstream human;
        human << equilibrium_kind_name(cls.kind) << " at (" << rational_str(point[0]) << ", "
              << rational_str(point[1]) << ")\n";
        emit(j, flags.json, flags.out, human.str());
        return 0;
    }

    if (lyap->parsed()) {
        Graph g1 = load_graph(ly_g1), g2 = load_graph(ly_g2);
        LyapunovResult result;
        Json j;
        if (!ly_general.empty()) {
            auto a = parse_rational_list(ly_general);
            if (a.size() != 4) throw std::invalid_argument("--general expects a1,a2,a3,a4");
            HopfSpec spec(a[0], a[1], a[2], a[3]);
            result = general_lyapunov_number(g1, g2, spec);
            j["sigma"] = rational_str(spec.sigma);
        } else {
            result = lyapunov_number(g1, g2);
        }
        j["result"] = lyapunov_to_json(result);
        std::ostringstream human;
        if (result.exact)
            human << rational_str(result.pi_coefficient) << " * pi, "
                  << bifurcation_kind_name(result.kind) << "\n";
        else
            human << result.pi_coefficient_decimal << " * pi (sign exact: "
                  << sign_name(result.sign) << "), " << bifurcation_kind_name(result.kind) << "\n";
        emit(j, flags.json, flags.out, human.str());
        return 0;
    }

    if (radii->parsed()) {
        Graph g1 = load_graph(rad_spec);
        Json j;
        std::ostringstream human;
        if (!rad_fit.empty() || !rad_fit_rho.empty()) {
            std::vector<Rational> rho;
            if (!rad_fit_rho.empty()) {
                rho = parse_rational_list(rad_fit_rho);
            } else {
                for (const auto& r : parse_rational_list(rad_fit)) rho.push_back(r * r);
            }
            FitResult fit = fit_weight_params(g1, rho);
            j["fit"] = fit_to_json(fit);
            if (fit.feasible) {
                RadiusPolynomial rp = radius_polynomial(g1, *fit.params);
                j["radius_polynomial"] = radius_polynomial_to_json(rp);
                human << "k = " << rational_str(fit.params->k)
                      << ", u = " << rational_str(fit.params->u) << "\n"
                      << rp.poly.to_string("rho") << "\n";
            } else {
                human << "INFEASIBLE: " << fit.detail << "\n";
            }
            emit(j, flags.json, flags.out, human.str());
            return 0;
        }
        if (rad_k.empty() || rad_u.empty())
            throw std::invalid_argument("radii needs either --fit/--fit-rho or both --k and --u");
        WeightParams params = params_from_flags(rad_k, rad_u, "");
        RadiusPolynomial rp = radius_polynomial(g1, params);
        auto roots = positive_roots(rp);
        j["radius_polynomial"] = radius_polynomial_to_json(rp);
        j["positive_roots"] = roots_to_json(roots);
        j["cycle_cap"] = max_local_cycles(g1);
        human << rp.poly.to_string("rho") << "\n";
        human << "cycle cap (m-1)/2 = " << max_local_cycles(g1) << "\n";
        human << "positive roots (rho):";
        if (roots.empty()) human << " none";
        for (const auto& root : roots) {
            human << " " << root.value;
            if (root.multiplicity > 1) human << " (x" << root.multiplicity << ")";
        }
        human << "\nradii (sqrt):";
        for (const auto& root : roots) human << " " << std::sqrt(root.value);
        human << "\n";
        emit(j, flags.json, flags.out, human.str());
        return 0;
    }

    if (sim->parsed()) {
        PlanarSystem system{BivariatePoly(), BivariatePoly(), ""};
        WeightParams params = params_from_flags(sim_k, sim_u, "");
        std::optional<RadiusPolynomial> predicted;  // eps-lienard side check
        Rational eps(0);
        if (sim_system == "example1") {
            system = build_example1(load_graph(sim_g1), load_graph(sim_g2));
        } else if (sim_system == "lienard") {
            system = build_lienard(load_graph(sim_g1), load_graph(sim_g2), params);
        } else if (sim_system == "eps-lienard") {
            Graph g1 = load_graph(sim_g1);
            eps = parse_rational(sim_eps);
            system = build_eps_lienard(g1, params, eps);
            if (g1.order() >= 3) predicted = radius_polynomial(g1, params);
        } else if (sim_system == "circle1") {
            system = build_circle_system1(load_graph(sim_g));
        } else if (sim_system == "circle2") {
            system = build_circle_system2(load_graph(sim_g));
        } else if (sim_system == "hopf") {
            system = build_hopf(load_graph(sim_g1), load_graph(sim_g2), parse_rational(sim_alpha));
        } else if (sim_system == "hopf-general") {
            auto a = parse_rational_list(sim_spec);
            if (a.size() != 4) throw std::invalid_argument("--spec expects a1,a2,a3,a4");
            system = build_general_hopf(load_graph(sim_g1), load_graph(sim_g2),
                                        HopfSpec(a[0], a[1], a[2], a[3]));
        } else {
            throw std::invalid_argument("unknown system '" + sim_system + "'");
        }

        IntegratorConfig cfg;
        cfg.method = sim_method == "rkf45" ? Method::rkf45_adaptive : Method::rk4_fixed;
        if (sim_method != "rk4" && sim_method != "rkf45")
            throw std::invalid_argument("--method must be rk4 or rkf45");
        cfg.step = sim_step;
        cfg.tolerance = sim_tol;
        cfg.max_time = sim_max_time;

        std::vector<double> seeds = parse_double_list(sim_seeds);
        if (flags.seed_cap > 0 && static_cast<int>(seeds.size()) > flags.seed_cap)
            seeds.resize(flags.seed_cap);

        auto outcome = detect_limit_cycles(system, seeds, cfg);

        Json j;
        j["system"] = system_to_json(system);
        j["config"] = cfg.describe();
        j["detection"] = cycles_to_json(outcome);
        if (sim_system == "hopf")
            j["return_map_derivative_at_origin"] =
                poincare_derivative_expression(parse_rational(sim_alpha));

        std::ostringstream human;
        human << system.label << "\n";
        if (outcome.cycles.empty()) human << "no limit cycles detected\n";
        for (const auto& c : outcome.cycles)
            human << "cycle: radius " << c.mean_radius << " (spread " << c.radius_spread
                  << "), period " << c.period << ", " << cycle_stability_name(c.stability)
                  << "\n";
        for (const auto& note : outcome.inconclusive) human << "inconclusive: " << note << "\n";

        // Averaging-side prediction next to the simulated cycles.
        if (predicted && eps != 0) {
            Json pj = Json::array();
            for (const auto& root : positive_roots(*predicted)) {
                CycleStability stab = predict_cycle_stability(*predicted, root, eps);
                double radius = std::sqrt(root.value);
                Json entry;
                entry["rho"] = root.value;
                entry["radius"] = radius;
                entry["stability"] = cycle_stability_name(stab);
                pj.push_back(std::move(entry));
                human << "predicted: radius " << radius << ", " << cycle_stability_name(stab)
                      << " (amplitude polynomial root rho = " << root.value << ")\n";
            }
            j["predicted_cycles"] = std::move(pj);
        }

        // Trajectory dumps: one per seed, plus the optional --x0 run.
        if (!flags.out.empty()) {
            auto dump = [&](double x0, double y0, const std::string& path) {
                Trajectory tr = integrate(system, x0, y0, cfg);
                std::ofstream os(path);
                if (!os) throw std::invalid_argument("cannot write '" + path + "'");
                write_trajectory_csv(os, tr);
            };
            for (std::size_t i = 0; i < seeds.size(); ++i)
                dump(seeds[i], 0.0, flags.out + ".seed" + std::to_string(i) + ".csv");
            if (!sim_x0.empty()) {
                auto pt = parse_double_list(sim_x0);
                if (pt.size() != 2) throw std::invalid_argument("--x0 expects x,y");
                dump(pt[0], pt[1], flags.out + ".x0.csv");
            }
            std::ofstream os(flags.out + ".cycles.json");
            Json payload = j;
            payload["generator"] = kGenerator;
            os << payload.dump(2) << "\n";
            human << "wrote " << flags.out << ".cycles.json and trajectory CSV(s)\n";
        }
        if (flags.json)
            emit(j, true, "", "");
        else
            std::cout << human.str();
        return 0;
    }

    if (repro->parsed()) {
        ReproOptions options;
        options.only = repro_only;
        options.seed_cap = flags.seed_cap;
        ReproReport report = run_repro(options);

        Json j;
        Json entries = Json::array();
        for (const auto& e : report.entries) {
            Json ej;
            ej["name"] = e.name;
            ej["anchor"] = e.anchor;
            ej["expected"] = e.expected;
            ej["computed"] = e.computed;
            ej["status"] = e.status;
            entries.push_back(std::move(ej));
        }
        j["entries"] = std::move(entries);
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        j["inconclusive"] = report.inconclusive;

        std::ostringstream human;
        for (const auto& e : report.entries) {
            human << (e.status == "pass" ? "PASS " : (e.status == "fail" ? "FAIL " : "???? "))
                  << e.name << "\n      claim:    " << e.anchor
                  << "\n      expected: " << e.expected << "\n      computed: " << e.computed
                  << "\n";
        }
        human << report.passed << " passed, " << report.failed << " failed, "
              << report.inconclusive << " inconclusive\n";
        emit(j, flags.json, flags.out, human.str());
        return report.failed > 0 ? 3 : 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
