#include "bpdyn/systems.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bpdyn {

namespace {

Rational pow2(int n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned>(n));
    return Rational(p);
}

// 1 - x^2 - y^2
BivariatePoly radial_factor() {
    BivariatePoly p(2);
    p.set_coeff(0, 0, Rational(1));
    p.set_coeff(2, 0, Rational(-1));
    p.set_coeff(0, 2, Rational(-1));
    return p;
}

void require_hopf_graphs(const Graph& g1, const Graph& g2) {
    auto check = [](const Graph& g, const char* which) {
        if (g.order() < 2)
            throw std::invalid_argument(std::string(which) + " must have order >= 2");
        if (g.has_isolated_vertex())
            throw std::invalid_argument(std::string(which) +
                                        " has an isolated vertex; the linear part at the origin "
                                        "would pick up a stray term");
    };
    check(g1, "g1");
    check(g2, "g2");
}

std::string fmt_label(const std::string& head, std::initializer_list<std::string> args) {
    std::string s = head + "(";
    bool first = true;
    for (const auto& a : args) {
        if (!first) s += ", ";
        s += a;
        first = false;
    }
    return s + ")";
}

std::string graph_desc(const Graph& g) {
    return "order=" + std::to_string(g.order()) + ",edges=" + std::to_string(g.edge_count());
}

}  // namespace

// ----------------------------------------------------------------- builders

PlanarSystem build_example1(const Graph& g1, const Graph& g2) {
    BivariatePoly fx =
        BivariatePoly::variable_x() * pow2(g1.order()) - boundary_polynomial(g1);
    BivariatePoly fy =
        BivariatePoly::variable_y() * pow2(g2.order()) - boundary_polynomial(g2);
    return {fx, fy, fmt_label("example1", {graph_desc(g1), graph_desc(g2)})};
}

PlanarSystem build_lienard(const Graph& g1, const Graph& g2, const WeightParams& params) {
    BivariatePoly fx =
        BivariatePoly::variable_y() - BivariatePoly::from_x_poly(weighted_tilde_diagonal(g1, params));
    BivariatePoly fy = -BivariatePoly::from_x_poly(weighted_tilde_diagonal(g2, params));
    return {fx, fy,
            fmt_label("lienard", {graph_desc(g1), graph_desc(g2), "k=" + rational_str(params.k),
                                  "u=" + rational_str(params.u)})};
}

PlanarSystem build_eps_lienard(const Graph& g1, const WeightParams& params, const Rational& eps) {
    if (g1.order() % 2 == 0)
        throw std::invalid_argument(
            "the eps-scaled Lienard construction needs a graph of odd order");
    BivariatePoly fx = BivariatePoly::variable_y() -
                       BivariatePoly::from_x_poly(weighted_tilde_diagonal(g1, params) * eps);
    BivariatePoly fy = -BivariatePoly::variable_x();
    return {fx, fy,
            fmt_label("eps-lienard", {graph_desc(g1), "k=" + rational_str(params.k),
                                      "u=" + rational_str(params.u), "eps=" + rational_str(eps)})};
}

PlanarSystem build_circle_system1(const Graph& g) {
    BivariatePoly b = boundary_polynomial(g);
    BivariatePoly x = BivariatePoly::variable_x(), y = BivariatePoly::variable_y();
    BivariatePoly r = radial_factor();
    return {-(b * y) + x * r, b * x + y * r, fmt_label("circle1", {graph_desc(g)})};
}

PlanarSystem build_circle_system2(const Graph& g) {
    BivariatePoly b = boundary_polynomial(g);
    BivariatePoly x = BivariatePoly::variable_x(), y = BivariatePoly::variable_y();
    BivariatePoly r = radial_factor();
    return {-y + b * (x * r), x + b * (y * r), fmt_label("circle2", {graph_desc(g)})};
}

PlanarSystem build_hopf(const Graph& g1, const Graph& g2, const Rational& alpha) {
    require_hopf_graphs(g1, g2);
    BivariatePoly x = BivariatePoly::variable_x(), y = BivariatePoly::variable_y();
    BivariatePoly one = BivariatePoly::constant(Rational(1));
    BivariatePoly fx = x * alpha - y + boundary_polynomial(g1) - one;
    BivariatePoly fy = x + y * alpha + boundary_polynomial(g2) - one;
    return {fx, fy,
            fmt_label("hopf", {graph_desc(g1), graph_desc(g2), "alpha=" + rational_str(alpha)})};
}

HopfSpec::HopfSpec(Rational a1, Rational a2, Rational a3, Rational a4)
    : alpha1(std::move(a1)), alpha2(std::move(a2)), alpha3(std::move(a3)), alpha4(std::move(a4)) {
    if (alpha1 + alpha4 != 0)
        throw std::invalid_argument("weak-focus spec requires alpha1 + alpha4 = 0");
    if (alpha2 == 0) throw std::invalid_argument("weak-focus spec requires alpha2 != 0");
    sigma = alpha1 * alpha4 - alpha2 * alpha3;
    if (sigma <= 0)
        throw std::invalid_argument("weak-focus spec requires alpha1*alpha4 - alpha2*alpha3 > 0");
}

PlanarSystem build_general_hopf(const Graph& g1, const Graph& g2, const HopfSpec& spec) {
    require_hopf_graphs(g1, g2);
    BivariatePoly x = BivariatePoly::variable_x(), y = BivariatePoly::variable_y();
    BivariatePoly one = BivariatePoly::constant(Rational(1));
    BivariatePoly fx = x * spec.alpha1 + y * spec.alpha2 + boundary_polynomial(g1) - one;
    BivariatePoly fy = x * spec.alpha3 + y * spec.alpha4 + boundary_polynomial(g2) - one;
    return {fx, fy,
            fmt_label("hopf-general",
                      {graph_desc(g1), graph_desc(g2),
                       "a=(" + rational_str(spec.alpha1) + "," + rational_str(spec.alpha2) + "," +
                           rational_str(spec.alpha3) + "," + rational_str(spec.alpha4) + ")"})};
}

std::string poincare_derivative_expression(const Rational& alpha) {
    return "exp(2*pi*" + rational_str(alpha) + ")";
}

// ----------------------------------------------------- equilibrium analysis

std::string equilibrium_kind_name(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::saddle: return "saddle";
        case EquilibriumKind::stable_node: return "stable_node";
        case EquilibriumKind::unstable_node: return "unstable_node";
        case EquilibriumKind::stable_focus: return "stable_focus";
        case EquilibriumKind::unstable_focus: return "unstable_focus";
        case EquilibriumKind::center_linear: return "center_linear";
        case EquilibriumKind::degenerate: return "degenerate";
    }
    return "?";
}

EquilibriumClass classify_equilibrium(const PlanarSystem& s, const Rational& x,
                                      const Rational& y) {
    Rational rx = s.fx.evaluate(x, y);
    Rational ry = s.fy.evaluate(x, y);
    if (rx != 0 || ry != 0)
        throw std::invalid_argument("point is not an equilibrium: residual (" + rational_str(rx) +
                                    ", " + rational_str(ry) + ")");

    Rational a = s.fx.partial_x().evaluate(x, y);
    Rational b = s.fx.partial_y().evaluate(x, y);
    Rational c = s.fy.partial_x().evaluate(x, y);
    Rational d = s.fy.partial_y().evaluate(x, y);

    Eigenvalues ev;
    ev.trace = a + d;
    ev.det = a * d - b * c;
    ev.discriminant = ev.trace * ev.trace - Rational(4) * ev.det;
    ev.real = ev.discriminant >= 0;

    if (ev.real) {
        auto root = exact_sqrt(ev.discriminant);
        ev.exact = root.has_value();
        if (ev.exact) {
            Rational l1 = (ev.trace - *root) / 2;
            Rational l2 = (ev.trace + *root) / 2;
            ev.exact_real_pair = {l1, l2};
            ev.lambda1 = {to_double(l1), 0.0};
            ev.lambda2 = {to_double(l2), 0.0};
        } else {
            double sq = approx_sqrt(ev.discriminant).value;
            double t = to_double(ev.trace);
            ev.lambda1 = {(t - sq) / 2, 0.0};
            ev.lambda2 = {(t + sq) / 2, 0.0};
        }
    } else {
        Rational neg = -ev.discriminant;
        auto root = exact_sqrt(neg);
        ev.exact = root.has_value();
        double im = ev.exact ? to_double(*root) / 2 : approx_sqrt(neg).value / 2;
        double re = to_double(ev.trace) / 2;
        ev.lambda1 = {re, -im};
        ev.lambda2 = {re, im};
    }

    EquilibriumKind kind;
    int sd = sign_of(ev.det);
    int st = sign_of(ev.trace);
    if (sd == 0) {
        kind = EquilibriumKind::degenerate;
    } else if (sd < 0) {
        kind = EquilibriumKind::saddle;
    } else if (ev.discriminant >= 0) {
        kind = st > 0 ? EquilibriumKind::unstable_node : EquilibriumKind::stable_node;
    } else if (st == 0) {
        kind = EquilibriumKind::center_linear;
    } else {
        kind = st > 0 ? EquilibriumKind::unstable_focus : EquilibriumKind::stable_focus;
    }
    return {kind, std::move(ev)};
}

// ------------------------------------------------------------ cycle algebra

std::string sign_name(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
    }
    return "?";
}

std::string bifurcation_kind_name(BifurcationKind k) {
    switch (k) {
        case BifurcationKind::supercritical: return "supercritical";
        case BifurcationKind::subcritical: return "subcritical";
        case BifurcationKind::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

LyapunovResult finish_result(Rational pi_coeff) {
    LyapunovResult r;
    r.pi_coefficient = std::move(pi_coeff);
    r.exact = true;
    r.approx = to_double(r.pi_coefficient);
    int s = sign_of(r.pi_coefficient);
    r.sign = s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
    r.kind = s < 0 ? BifurcationKind::supercritical
                   : (s > 0 ? BifurcationKind::subcritical : BifurcationKind::inconclusive);
    return r;
}

}  // namespace

LyapunovResult lyapunov_number(const Graph& g1, const Graph& g2) {
    require_hopf_graphs(g1, g2);
    auto c1 = boundary_count_grid(g1);
    auto c2 = boundary_count_grid(g2);
    auto B = [](const std::vector<std::vector<long long>>& c, int i, int j) -> Rational {
        if (i + j >= static_cast<int>(c.size())) return Rational(0);
        return Rational(static_cast<long>(c[i][j]));
    };
    Rational bracket = Rational(3) * B(c2, 0, 3) + B(c1, 1, 2) + B(c2, 2, 1) +
                       Rational(2) * B(c1, 0, 2) * B(c2, 0, 2) + B(c1, 1, 1) * B(c1, 0, 2) -
                       B(c2, 1, 1) * B(c2, 0, 2);
    return finish_result(Rational(3, 2) * bracket);
}

LyapunovResult general_lyapunov_number(const Graph& g1, const Graph& g2, const HopfSpec& spec) {
    require_hopf_graphs(g1, g2);
    auto c1 = boundary_count_grid(g1);
    auto c2 = boundary_count_grid(g2);
    auto B = [](const std::vector<std::vector<long long>>& c, int i, int j) -> Rational {
        if (i + j >= static_cast<int>(c.size())) return Rational(0);
        return Rational(static_cast<long>(c[i][j]));
    };
    const Rational& a1 = spec.alpha1;
    const Rational& a2 = spec.alpha2;
    const Rational& a3 = spec.alpha3;

    Rational quad = a1 * a3 *
                        (B(c1, 1, 1) * B(c1, 1, 1) + B(c1, 1, 1) * B(c2, 0, 2) +
                         B(c1, 0, 2) * B(c2, 1, 1)) +
                    a1 * a2 * (B(c2, 1, 1) * B(c2, 1, 1) + B(c1, 1, 1) * B(c2, 0, 2)) +
                    a3 * a3 * (B(c1, 1, 1) * B(c1, 0, 2) + Rational(2) * B(c1, 0, 2) * B(c2, 0, 2)) -
                    Rational(2) * a1 * a3 * B(c2, 0, 2) * B(c2, 0, 2) +
                    (a2 * a3 - Rational(2) * a1 * a1) * B(c2, 1, 1) * B(c2, 0, 2);
    Rational cubic = Rational(3) * a3 * B(c2, 0, 3) +
                     Rational(2) * a1 * (B(c1, 2, 1) + B(c2, 1, 2)) +
                     (a3 * B(c1, 1, 2) - a2 * B(c2, 2, 1));
    Rational bracket = quad - (a1 * a1 + a2 * a3) * cubic;

    // sigma^(3/2) > 0, so the sign comes from -bracket/(2*alpha2) exactly.
    Rational scaled = Rational(-3, 2) * bracket / a2;

    LyapunovResult r;
    if (auto s = exact_sqrt(spec.sigma)) {
        r = finish_result(scaled / (spec.sigma * (*s)));
    } else {
        r = finish_result(scaled);  // sign/kind correct; magnitude lacks sigma^(3/2)
        r.exact = false;
        mpf_class sig(spec.sigma, 256);
        mpf_class root;
        mpf_sqrt(root.get_mpf_t(), sig.get_mpf_t());
        mpf_class value = mpf_class(scaled, 256) / (sig * root);
        r.approx = value.get_d();
        mp_exp_t e10 = 0;
        std::string mant = value.get_str(e10, 10, 64);
        if (mant.empty() || mant == "0") {
            r.pi_coefficient_decimal = "0";
        } else {
            bool neg = mant[0] == '-';
            std::string m = neg ? mant.substr(1) : mant;
            r.pi_coefficient_decimal = (neg ? "-0." : "0.") + m + "e" + std::to_string(e10);
        }
    }
    return r;
}

int max_local_cycles(const Graph& g1) {
    if (g1.order() % 2 == 0)
        throw std::invalid_argument("cycle cap is defined for odd graph order only");
    return (g1.order() - 1) / 2;
}

RadiusPolynomial radius_polynomial(const Graph& g1, const WeightParams& params) {
    const int m = g1.order();
    if (m % 2 == 0 || m < 3)
        throw std::invalid_argument("radius polynomial needs an odd graph order >= 3");
    WeightedTable table = weighted_table(g1);
    RadiusPolynomial rp;
    rp.order_m = m;
    const int top = (m - 1) / 2;
    std::vector<Rational> coeffs(top + 1, Rational(0));
    for (int d = 0; d <= top; ++d) {
        Rational scale = Rational(binomial(2 * d + 2, d + 1)) / pow2(2 * d + 2);
        AffineForm form = table.diagonal_sum(2 * d + 1) * scale;
        rp.affine_forms.push_back(form);
        coeffs[d] = form.value(params);
    }
    rp.poly = UnivariatePoly(std::move(coeffs));
    return rp;
}

std::vector<RealRoot> positive_roots(const RadiusPolynomial& rp) {
    if (rp.poly.is_zero())
        throw std::invalid_argument("radius polynomial is identically zero under these weights");
    return positive_real_roots(rp.poly);
}

std::string FitEquation::render() const {
    return lhs.render() + " = " + rational_str(rhs);
}

namespace {

// Elimination over the 2-unknown system with provenance tracking: every
// working row remembers which original equations it combines, so an
// inconsistent row can quote them.
struct WorkRow {
    Rational k, u, rhs;
    std::set<std::size_t> prov;
};

}  // namespace

FitResult fit_weight_params(const Graph& g1, const std::vector<Rational>& rho_targets) {
    const int m = g1.order();
    if (m % 2 == 0 || m < 3)
        throw std::invalid_argument("weight fitting needs an odd graph order >= 3");
    const std::size_t expected = static_cast<std::size_t>((m - 1) / 2);
    if (rho_targets.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " squared radii, got " + std::to_string(rho_targets.size()));
    for (const auto& rho : rho_targets)
        if (rho <= 0) throw std::invalid_argument("squared radii must be positive");
    for (std::size_t i = 0; i < rho_targets.size(); ++i)
        for (std::size_t j = i + 1; j < rho_targets.size(); ++j)
            if (rho_targets[i] == rho_targets[j])
                throw std::invalid_argument("squared radii must be distinct");

    // Monic target polynomial prod(rho - rho_i).
    UnivariatePoly target = UnivariatePoly::constant(Rational(1));
    for (const auto& rho : rho_targets) {
        UnivariatePoly factor(std::vector<Rational>{-rho, Rational(1)});
        target = target * factor;
    }

    WeightedTable table = weighted_table(g1);
    FitResult result;
    const int top = (m - 1) / 2;
    for (int d = top; d >= 0; --d) {
        Rational scale = Rational(binomial(2 * d + 2, d + 1)) / pow2(2 * d + 2);
        AffineForm lhs = table.diagonal_sum(2 * d + 1) * scale;
        result.equations.push_back(FitEquation{d, lhs, target.coeff(d)});
    }

    std::vector<WorkRow> rows;
    for (std::size_t idx = 0; idx < result.equations.size(); ++idx) {
        const FitEquation& e = result.equations[idx];
        rows.push_back(WorkRow{e.lhs.k_coeff, e.lhs.u_coeff, e.rhs - e.lhs.constant, {idx}});
    }

    auto eliminate = [&rows](auto coeff_of, std::size_t pivot) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot) continue;
            Rational c = coeff_of(rows[r]);
            if (c == 0) continue;
            Rational factor = c / coeff_of(rows[pivot]);
            rows[r].k -= factor * rows[pivot].k;
            rows[r].u -= factor * rows[pivot].u;
            rows[r].rhs -= factor * rows[pivot].rhs;
            rows[r].prov.insert(rows[pivot].prov.begin(), rows[pivot].prov.end());
        }
    };

    std::optional<std::size_t> k_pivot, u_pivot;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].k != 0) {
            k_pivot = r;
            break;
        }
    if (k_pivot) eliminate([](const WorkRow& w) -> Rational { return w.k; }, *k_pivot);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != k_pivot && rows[r].k == 0 && rows[r].u != 0) {
            u_pivot = r;
            break;
        }
    if (u_pivot) eliminate([](const WorkRow& w) -> Rational { return w.u; }, *u_pivot);

    // Any remaining row with zero coefficients but nonzero rhs certifies
    // infeasibility; quote the original equations it combines.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == k_pivot || r == u_pivot) continue;
        if (rows[r].k == 0 && rows[r].u == 0 && rows[r].rhs != 0) {
            result.feasible = false;
            result.certificate.assign(rows[r].prov.begin(), rows[r].prov.end());
            std::ostringstream os;
            os << "inconsistent: combining";
            for (std::size_t idx : result.certificate)
                os << " [" << result.equations[idx].render() << "]";
            os << " forces 0 = " << rational_str(rows[r].rhs);
            result.detail = os.str();
            return result;
        }
    }

    Rational u_value(0), k_value(0);
    result.u_free = !u_pivot.has_value();
    if (u_pivot) u_value = rows[*u_pivot].rhs / rows[*u_pivot].u;
    result.k_free = !k_pivot.has_value();
    if (k_pivot)
        k_value = (rows[*k_pivot].rhs - rows[*k_pivot].u * u_value) / rows[*k_pivot].k;

    // Verification pass over the original equations.
    WeightParams params(k_value, u_value);
    for (const auto& e : result.equations) {
        if (e.lhs.value(params) != e.rhs)
            throw std::logic_error("fit verification failed after elimination");
    }
    if (m >= 5 && (m - 3) / 2 == 1) params.named_parts = {u_value};
    result.feasible = true;
    result.params = params;
    result.detail = "k = " + rational_str(k_value) + ", u = " + rational_str(u_value);
    if (result.k_free) result.detail += " (k unconstrained; reported as 0)";
    if (result.u_free) result.detail += " (u unconstrained; reported as 0)";
    return result;
}

LienardCycleCheck lienard_unique_cycle_check(const Graph& g1, const WeightParams& params) {
    if (g1.order() != 3)
        throw std::invalid_argument("uniqueness check applies to graphs of order 3 only");
    WeightedTable table = weighted_table(g1);
    Rational b01 = table.cell(0, 1).value(params);
    Rational cubic = table.cell(1, 2).value(params) + table.cell(2, 1).value(params) +
                     table.cell(0, 3).value(params);
    Rational product = b01 * cubic;
    if (product >= 0) return LienardCycleCheck::not_applicable;
    return b01 < 0 ? LienardCycleCheck::unique_stable : LienardCycleCheck::unique_unstable;
}

std::string lienard_cycle_check_name(LienardCycleCheck c) {
    switch (c) {
        case LienardCycleCheck::unique_stable: return "unique_stable";
        case LienardCycleCheck::unique_unstable: return "unique_unstable";
        case LienardCycleCheck::not_applicable: return "not_applicable";
    }
    return "?";
}

}  // namespace bpdyn
