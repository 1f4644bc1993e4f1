#include "bpdyn/json_io.hpp"

#include <ostream>

namespace bpdyn {

namespace {

Json bigint_to_json(const BigInt& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
    return BigInt(j.get<std::string>());
}

Json term_json(int i, int j, const Rational& c) {
    Json t;
    t["i"] = i;
    t["j"] = j;
    t["num"] = bigint_to_json(c.get_num());
    t["den"] = bigint_to_json(c.get_den());
    return t;
}

}  // namespace

Json poly_to_json(const BivariatePoly& p) {
    BivariatePoly t = p.trimmed();
    Json out;
    out["maxdeg"] = t.maxdeg();
    Json terms = Json::array();
    for (int d = 0; d <= t.maxdeg(); ++d)
        for (int i = 0; i <= d; ++i) {
            const Rational& c = t.coeff(i, d - i);
            if (c != 0) terms.push_back(term_json(i, d - i, c));
        }
    out["terms"] = std::move(terms);
    return out;
}

BivariatePoly poly_from_json(const Json& j) {
    BivariatePoly p(j.at("maxdeg").get<int>());
    for (const auto& t : j.at("terms")) {
        Rational c(bigint_from_json(t.at("num")), bigint_from_json(t.at("den")));
        c.canonicalize();
        p.set_coeff(t.at("i").get<int>(), t.at("j").get<int>(), c);
    }
    return p;
}

Json poly_to_json(const UnivariatePoly& p) {
    Json out;
    out["degree"] = p.degree();
    Json terms = Json::array();
    for (int d = 0; d <= p.degree(); ++d) {
        if (p.coeff(d) == 0) continue;
        Json t;
        t["d"] = d;
        t["num"] = bigint_to_json(p.coeff(d).get_num());
        t["den"] = bigint_to_json(p.coeff(d).get_den());
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

UnivariatePoly univariate_from_json(const Json& j) {
    int degree = j.at("degree").get<int>();
    std::vector<Rational> coeffs(std::max(degree + 1, 0), Rational(0));
    for (const auto& t : j.at("terms")) {
        Rational c(bigint_from_json(t.at("num")), bigint_from_json(t.at("den")));
        c.canonicalize();
        coeffs.at(t.at("d").get<int>()) = c;
    }
    return UnivariatePoly(std::move(coeffs));
}

Json table_to_json(const WeightedTable& t) {
    Json out;
    out["order"] = t.order();
    Json cells = Json::array();
    for (int d = 0; d <= t.order(); ++d)
        for (int i = 0; i <= d; ++i) {
            const AffineCell& c = t.cell(i, d - i);
            Json cj;
            cj["i"] = i;
            cj["j"] = d - i;
            cj["a"] = c.odd_count;
            cj["b"] = c.even_count;
            cj["c"] = c.unrealized ? 1 : 0;
            cells.push_back(std::move(cj));
        }
    out["cells"] = std::move(cells);
    return out;
}

Json params_to_json(const WeightParams& p) {
    Json out;
    out["k"] = rational_str(p.k);
    out["u"] = rational_str(p.u);
    Json parts = Json::array();
    for (const auto& part : p.named_parts) parts.push_back(rational_str(part));
    out["named_parts"] = std::move(parts);
    return out;
}

WeightParams params_from_json(const Json& j) {
    std::vector<Rational> parts;
    if (j.contains("named_parts"))
        for (const auto& p : j.at("named_parts")) parts.push_back(parse_rational(p.get<std::string>()));
    return WeightParams(parse_rational(j.at("k").get<std::string>()),
                        parse_rational(j.at("u").get<std::string>()), std::move(parts));
}

Json system_to_json(const PlanarSystem& s) {
    Json out;
    out["label"] = s.label;
    out["fx"] = poly_to_json(s.fx);
    out["fy"] = poly_to_json(s.fy);
    return out;
}

Json lyapunov_to_json(const LyapunovResult& r) {
    Json out;
    out["pi_coefficient"] = rational_str(r.pi_coefficient);
    out["exact"] = r.exact;
    if (!r.exact) {
        out["pi_coefficient_decimal"] = r.pi_coefficient_decimal;
        out["note"] = "pi_coefficient omits the sigma^(3/2) factor; decimal includes it";
    }
    out["approx"] = r.approx;
    out["sign"] = sign_name(r.sign);
    out["kind"] = bifurcation_kind_name(r.kind);
    return out;
}

Json equilibrium_to_json(const EquilibriumClass& e) {
    Json out;
    out["kind"] = equilibrium_kind_name(e.kind);
    out["trace"] = rational_str(e.eigenvalues.trace);
    out["det"] = rational_str(e.eigenvalues.det);
    out["discriminant"] = rational_str(e.eigenvalues.discriminant);
    out["eigenvalues_exact"] = e.eigenvalues.exact;
    if (e.eigenvalues.exact_real_pair) {
        out["lambda1"] = rational_str(e.eigenvalues.exact_real_pair->first);
        out["lambda2"] = rational_str(e.eigenvalues.exact_real_pair->second);
    } else {
        Json l1, l2;
        l1["re"] = e.eigenvalues.lambda1.real();
        l1["im"] = e.eigenvalues.lambda1.imag();
        l2["re"] = e.eigenvalues.lambda2.real();
        l2["im"] = e.eigenvalues.lambda2.imag();
        out["lambda1"] = l1;
        out["lambda2"] = l2;
    }
    return out;
}

Json fit_to_json(const FitResult& f) {
    Json out;
    out["feasible"] = f.feasible;
    Json eqs = Json::array();
    for (const auto& e : f.equations) {
        Json ej;
        ej["degree"] = e.degree;
        ej["constant"] = rational_str(e.lhs.constant);
        ej["k_coeff"] = rational_str(e.lhs.k_coeff);
        ej["u_coeff"] = rational_str(e.lhs.u_coeff);
        ej["rhs"] = rational_str(e.rhs);
        ej["text"] = e.render();
        eqs.push_back(std::move(ej));
    }
    out["equations"] = std::move(eqs);
    if (f.feasible) {
        out["params"] = params_to_json(*f.params);
        out["k_free"] = f.k_free;
        out["u_free"] = f.u_free;
    } else {
        Json cert = Json::array();
        for (std::size_t idx : f.certificate) cert.push_back(f.equations[idx].render());
        out["certificate"] = std::move(cert);
    }
    out["detail"] = f.detail;
    return out;
}

Json radius_polynomial_to_json(const RadiusPolynomial& rp) {
    Json out;
    out["order"] = rp.order_m;
    out["poly"] = poly_to_json(rp.poly);
    out["text"] = rp.poly.to_string("rho");
    Json forms = Json::array();
    for (std::size_t d = 0; d < rp.affine_forms.size(); ++d) {
        Json fj;
        fj["degree"] = static_cast<int>(d);
        fj["form"] = rp.affine_forms[d].render();
        forms.push_back(std::move(fj));
    }
    out["affine_coefficients"] = std::move(forms);
    return out;
}

Json roots_to_json(const std::vector<RealRoot>& roots) {
    Json arr = Json::array();
    for (const auto& r : roots) {
        Json rj;
        rj["value"] = r.value;
        rj["multiplicity"] = r.multiplicity;
        rj["exact"] = r.exact;
        if (r.exact) rj["exact_value"] = rational_str(r.lower);
        arr.push_back(std::move(rj));
    }
    return arr;
}

Json cycles_to_json(const CycleSearchOutcome& o) {
    Json out;
    Json arr = Json::array();
    for (const auto& c : o.cycles) {
        Json cj;
        cj["mean_radius"] = c.mean_radius;
        cj["radius_spread"] = c.radius_spread;
        cj["period"] = c.period;
        cj["stability"] = cycle_stability_name(c.stability);
        cj["section_crossings_used"] = c.section_crossings_used;
        cj["config"] = c.config_summary;
        arr.push_back(std::move(cj));
    }
    out["cycles"] = std::move(arr);
    out["inconclusive"] = o.inconclusive;
    return out;
}

Json quadrature_to_json(const QuadratureResult& q) {
    Json out;
    out["value"] = q.value;
    out["abs_error_estimate"] = q.abs_error_estimate;
    return out;
}

Json circle_zeros_to_json(const std::vector<CircleZero>& zs) {
    Json arr = Json::array();
    for (const auto& z : zs) {
        Json zj;
        zj["theta"] = z.theta;
        zj["sign_change"] = z.sign_change;
        arr.push_back(std::move(zj));
    }
    return arr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    os << "t,x,y\n";
    char buf[128];
    for (const auto& s : tr.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", s.t, s.x, s.y);
        os << buf;
    }
}

}  // namespace bpdyn
