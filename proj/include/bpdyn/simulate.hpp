#pragma once

#include <string>
#include <vector>

#include "bpdyn/graph.hpp"
#include "bpdyn/systems.hpp"

namespace bpdyn {

enum class Method { rk4_fixed, rkf45_adaptive };
enum class Direction { forward, backward };

struct IntegratorConfig {
    Method method = Method::rk4_fixed;
    double step = 1e-3;       // rk4_fixed step size
    double tolerance = 1e-9;  // rkf45 per-step error tolerance
    double max_time = 1000.0;
    Direction direction = Direction::forward;
    double blowup_radius = 1e6;

    std::string describe() const;
};

struct TrajectorySample {
    double t, x, y;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // t strictly monotone
    std::string provenance;                 // system label + config
    bool diverged = false;                  // |state| passed blowup_radius
    bool step_underflow = false;            // rkf45 could not meet tolerance
};

/// Integrates the system from (x0, y0). Every accepted step is recorded.
/// On blow-up the trajectory ends at the last valid sample with `diverged`.
Trajectory integrate(const PlanarSystem& s, double x0, double y0, const IntegratorConfig& cfg);

enum class Section { positive_x_axis };

struct SectionCrossing {
    double t;  // crossing time, refined to ~1e-10
    double x;  // crossing abscissa (the radius on this section)
};

/// Crossings of {y = 0, x > 0}, located by sign-change bracketing on the
/// recorded samples plus re-stepped bisection refinement (~1e-10 in t). For
/// an orbit that winds around the origin this fires once per revolution
/// regardless of the rotation sense.
std::vector<SectionCrossing> poincare_crossings(const PlanarSystem& s, const Trajectory& tr,
                                                Section section = Section::positive_x_axis);

enum class CycleStability { stable, unstable, semi_stable };
std::string cycle_stability_name(CycleStability s);

struct LimitCycleEstimate {
    double mean_radius = 0;
    double radius_spread = 0;  // max - min distance from origin over one loop
    double period = 0;
    CycleStability stability = CycleStability::stable;
    int section_crossings_used = 0;
    std::string config_summary;
};

struct CycleSearchOutcome {
    std::vector<LimitCycleEstimate> cycles;
    std::vector<std::string> inconclusive;  // seeds that neither converged nor blew up, etc.
};

/// Return-map iteration from every seed radius, probing forward time (stable
/// cycles) and backward time (unstable cycles) regardless of cfg.direction.
/// A candidate is accepted once crossing radii converge (relative change
/// < 1e-8) and re-converge from both sides of the fixed point; one-sided
/// convergence is reported as semi_stable. Duplicates within 1e-4 merge.
CycleSearchOutcome detect_limit_cycles(const PlanarSystem& s, const std::vector<double>& seed_radii,
                                       const IntegratorConfig& cfg);

/// Averaging-side stability prediction for an eps-scaled Lienard cycle at a
/// positive root rho of the amplitude polynomial P: the averaged radial
/// drift is -eps * r * P(r^2), so the cycle is stable iff eps * P'(rho) > 0.
/// A vanishing derivative (multiple root) predicts semi_stable. Simulation
/// remains the ground truth at finite eps; this is the side-by-side check.
CycleStability predict_cycle_stability(const RadiusPolynomial& rp, const RealRoot& root,
                                       const Rational& eps);

struct QuadratureResult {
    double value;
    double abs_error_estimate;
};

/// Integral of div(f) along the parameterized unit circle (cos t, sin t),
/// t in [0, 2pi], by adaptive quadrature. Only meaningful for the circle
/// constructions; rejects other systems by label.
QuadratureResult circle_divergence_integral(const PlanarSystem& s);

/// Integral of B(g; cos t, sin t) over [0, 2pi].
QuadratureResult boundary_circle_integral(const Graph& g);

/// Time-corrected characteristic exponent of the invariant circle of the
/// first circle construction: -2 * integral of dtheta / B(cos,sin). Requires
/// B nonvanishing on the circle (throws std::domain_error otherwise).
QuadratureResult circle1_corrected_exponent(const Graph& g);

struct CircleZero {
    double theta;      // in [0, 2pi)
    bool sign_change;  // false: tangential zero (touches 0 without crossing)
};

/// Zeros of theta -> B(g; cos theta, sin theta) located from `samples`
/// grid points (>= 360) with bisection/minimization refinement. An empty
/// result certifies (numerically) that the first circle construction has no
/// equilibria on the unit circle.
std::vector<CircleZero> circle_equilibria_scan(const Graph& g, int samples);

}  // namespace bpdyn
