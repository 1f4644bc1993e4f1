#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bpdyn/boundary.hpp"
#include "bpdyn/graph.hpp"
#include "bpdyn/polynomial.hpp"
#include "bpdyn/roots.hpp"
#include "bpdyn/weighted.hpp"

namespace bpdyn {

/// A planar polynomial vector field (dx/dt, dy/dt) with a provenance label
/// naming the construction and its inputs.
struct PlanarSystem {
    BivariatePoly fx;
    BivariatePoly fy;
    std::string label;
};

// ----------------------------------------------------------------- builders

/// dx/dt = 2^n1 x - B(G1;x,y), dy/dt = 2^n2 y - B(G2;x,y).
/// (1,1) is always an equilibrium since B(G;1,1) = 2^order.
PlanarSystem build_example1(const Graph& g1, const Graph& g2);

/// Lienard form dx/dt = y - B~_w(G1;x), dy/dt = -B~_w(G2;x).
PlanarSystem build_lienard(const Graph& g1, const Graph& g2, const WeightParams& params);

/// Small-parameter Lienard variant with the damping term scaled by eps and
/// the restoring graph fixed to E_1: dx/dt = y - eps*B~_w(G1;x), dy/dt = -x.
/// Requires g1 of odd order.
PlanarSystem build_eps_lienard(const Graph& g1, const WeightParams& params, const Rational& eps);

/// dx/dt = -B(G)y + x(1-x^2-y^2), dy/dt = B(G)x + y(1-x^2-y^2).
/// The unit circle is invariant for the radial motion r' = r(1-r^2).
PlanarSystem build_circle_system1(const Graph& g);

/// dx/dt = -y + B(G)x(1-x^2-y^2), dy/dt = x + B(G)y(1-x^2-y^2).
/// (cos t, sin t) is an exact solution for every G.
PlanarSystem build_circle_system2(const Graph& g);

/// dx/dt = alpha*x - y + B(G1) - 1, dy/dt = x + alpha*y + B(G2) - 1.
/// Both graphs must have order >= 2 and no isolated vertices so the
/// linearization at the origin is exactly [[alpha,-1],[1,alpha]].
PlanarSystem build_hopf(const Graph& g1, const Graph& g2, const Rational& alpha);

/// Linear part of the four-parameter weak-focus system. Construction
/// enforces alpha1 + alpha4 = 0, sigma = alpha1*alpha4 - alpha2*alpha3 > 0,
/// and alpha2 != 0.
struct HopfSpec {
    Rational alpha1, alpha2, alpha3, alpha4;
    Rational sigma;
    HopfSpec(Rational a1, Rational a2, Rational a3, Rational a4);
};

/// dx/dt = a1 x + a2 y + B(G1) - 1, dy/dt = a3 x + a4 y + B(G2) - 1.
PlanarSystem build_general_hopf(const Graph& g1, const Graph& g2, const HopfSpec& spec);

/// Return-map derivative at the origin of the alpha-family, reported
/// symbolically: "exp(2*pi*alpha)".
std::string poincare_derivative_expression(const Rational& alpha);

// ----------------------------------------------------- equilibrium analysis

enum class EquilibriumKind {
    saddle,
    stable_node,
    unstable_node,
    stable_focus,
    unstable_focus,
    center_linear,  // purely imaginary eigenvalues; linear classification only
    degenerate      // some eigenvalue exactly zero
};

struct Eigenvalues {
    Rational trace;
    Rational det;
    Rational discriminant;  // trace^2 - 4 det
    bool real;              // discriminant >= 0
    bool exact;             // sqrt(|discriminant|) is rational
    std::complex<double> lambda1, lambda2;
    std::optional<std::pair<Rational, Rational>> exact_real_pair;
};

struct EquilibriumClass {
    EquilibriumKind kind;
    Eigenvalues eigenvalues;
};

std::string equilibrium_kind_name(EquilibriumKind k);

/// Exact classification from the Jacobian at a rational point. The point
/// must be an equilibrium; otherwise invalid_argument reporting the residual.
EquilibriumClass classify_equilibrium(const PlanarSystem& s, const Rational& x, const Rational& y);

// ------------------------------------------------------------ cycle algebra

enum class Sign { negative, zero, positive };
enum class BifurcationKind { supercritical, subcritical, inconclusive };

std::string sign_name(Sign s);
std::string bifurcation_kind_name(BifurcationKind k);

/// A first focal value c*pi. The pi factor stays symbolic; the sign and the
/// bifurcation direction are decided on the exact rational part. For the
/// four-parameter variant the sigma^(3/2) factor can be irrational; then
/// `exact` is false, `pi_coefficient` holds the value with sigma^(3/2)
/// replaced by 1, and `pi_coefficient_decimal`/`approx` carry the magnitude.
struct LyapunovResult {
    Rational pi_coefficient;
    bool exact = true;
    double approx = 0.0;                 // pi coefficient as a double
    std::string pi_coefficient_decimal;  // high-precision decimal when !exact
    Sign sign = Sign::zero;
    BifurcationKind kind = BifurcationKind::inconclusive;
};

/// First focal value of the alpha-family at alpha = 0 in terms of boundary
/// coefficients of the two graphs. Exact.
LyapunovResult lyapunov_number(const Graph& g1, const Graph& g2);

/// Four-parameter generalization; collapses to lyapunov_number under the
/// spec (0,-1,1,0). Sign decisions are always exact.
LyapunovResult general_lyapunov_number(const Graph& g1, const Graph& g2, const HopfSpec& spec);

/// (m-1)/2 for odd graph order m; the cap on small-amplitude cycles of the
/// Lienard construction.
int max_local_cycles(const Graph& g1);

/// Averaged amplitude polynomial in rho = r^2 for the eps-scaled Lienard
/// system built from g1 of odd order m >= 3: coefficient of rho^d is
/// C(2d+2, d+1)/2^(2d+2) times the weighted diagonal sum at degree 2d+1.
/// Positive roots are the squared radii of the asymptotic cycles.
struct RadiusPolynomial {
    UnivariatePoly poly;                   // instantiated, in rho
    int order_m = 0;                       // odd order of g1
    std::vector<AffineForm> affine_forms;  // coefficient forms by degree
};

RadiusPolynomial radius_polynomial(const Graph& g1, const WeightParams& params);

/// Positive roots rho > 0 ascending with multiplicities (radii are sqrt(rho)).
std::vector<RealRoot> positive_roots(const RadiusPolynomial& rp);

/// One linear condition "constant + k_coeff*k + u_coeff*u = rhs" obtained by
/// matching a radius-polynomial coefficient against a target.
struct FitEquation {
    int degree;      // rho-degree the equation comes from
    AffineForm lhs;  // affine form in (k, u)
    Rational rhs;
    std::string render() const;
};

/// Outcome of the inverse problem: find (k,u) so the radius polynomial
/// equals the monic polynomial with the prescribed positive roots. When the
/// exact linear system is inconsistent, `certificate` lists the indices of
/// the contradictory equations (as the proofs of impossibility do).
struct FitResult {
    bool feasible = false;
    std::optional<WeightParams> params;
    bool k_free = false;  // k unconstrained by the system (reported as 0)
    bool u_free = false;
    std::vector<FitEquation> equations;
    std::vector<std::size_t> certificate;
    std::string detail;
};

/// `rho_targets` are the squared radii (exact rationals), one per expected
/// cycle: the list length must be (m-1)/2 and the values positive, distinct.
FitResult fit_weight_params(const Graph& g1, const std::vector<Rational>& rho_targets);

/// Cubic Lienard uniqueness test for order-3 graphs: when
/// B^w_{0,1} * (B^w_{1,2} + B^w_{2,1} + B^w_{0,3}) < 0 the system has
/// exactly one limit cycle, stable iff B^w_{0,1} < 0.
enum class LienardCycleCheck { unique_stable, unique_unstable, not_applicable };
LienardCycleCheck lienard_unique_cycle_check(const Graph& g1, const WeightParams& params);
std::string lienard_cycle_check_name(LienardCycleCheck c);

}  // namespace bpdyn
