#include "bpdyn/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bpdyn/boundary.hpp"

namespace bpdyn {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Field {
    CompiledPoly2D fx, fy;
    double sign = 1.0;  // -1 integrates the time-reversed flow

    void eval(double x, double y, double& dx, double& dy) const {
        dx = sign * fx(x, y);
        dy = sign * fy(x, y);
    }
};

Field compile_field(const PlanarSystem& s, Direction dir) {
    return Field{CompiledPoly2D(s.fx), CompiledPoly2D(s.fy),
                 dir == Direction::backward ? -1.0 : 1.0};
}

void rk4_step(const Field& f, double h, double& x, double& y) {
    double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    f.eval(x, y, k1x, k1y);
    f.eval(x + 0.5 * h * k1x, y + 0.5 * h * k1y, k2x, k2y);
    f.eval(x + 0.5 * h * k2x, y + 0.5 * h * k2y, k3x, k3y);
    f.eval(x + h * k3x, y + h * k3y, k4x, k4y);
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
}

// Fehlberg 4(5) embedded pair. Returns the error estimate of the 4th-order
// solution; x/y are advanced with the 5th-order one.
double rkf45_step(const Field& f, double h, double& x, double& y) {
    static const double b21 = 1.0 / 4;
    static const double b31 = 3.0 / 32, b32 = 9.0 / 32;
    static const double b41 = 1932.0 / 2197, b42 = -7200.0 / 2197, b43 = 7296.0 / 2197;
    static const double b51 = 439.0 / 216, b52 = -8.0, b53 = 3680.0 / 513, b54 = -845.0 / 4104;
    static const double b61 = -8.0 / 27, b62 = 2.0, b63 = -3544.0 / 2565, b64 = 1859.0 / 4104,
                        b65 = -11.0 / 40;
    static const double c1 = 25.0 / 216, c3 = 1408.0 / 2565, c4 = 2197.0 / 4104, c5 = -1.0 / 5;
    static const double d1 = 16.0 / 135, d3 = 6656.0 / 12825, d4 = 28561.0 / 56430, d5 = -9.0 / 50,
                        d6 = 2.0 / 55;

    double k1x, k1y;
    f.eval(x, y, k1x, k1y);
    double k2x, k2y;
    f.eval(x + h * b21 * k1x, y + h * b21 * k1y, k2x, k2y);
    double k3x, k3y;
    f.eval(x + h * (b31 * k1x + b32 * k2x), y + h * (b31 * k1y + b32 * k2y), k3x, k3y);
    double k4x, k4y;
    f.eval(x + h * (b41 * k1x + b42 * k2x + b43 * k3x), y + h * (b41 * k1y + b42 * k2y + b43 * k3y),
           k4x, k4y);
    double k5x, k5y;
    f.eval(x + h * (b51 * k1x + b52 * k2x + b53 * k3x + b54 * k4x),
           y + h * (b51 * k1y + b52 * k2y + b53 * k3y + b54 * k4y), k5x, k5y);
    double k6x, k6y;
    f.eval(x + h * (b61 * k1x + b62 * k2x + b63 * k3x + b64 * k4x + b65 * k5x),
           y + h * (b61 * k1y + b62 * k2y + b63 * k3y + b64 * k4y + b65 * k5y), k6x, k6y);

    double x4 = x + h * (c1 * k1x + c3 * k3x + c4 * k4x + c5 * k5x);
    double y4 = y + h * (c1 * k1y + c3 * k3y + c4 * k4y + c5 * k5y);
    double x5 = x + h * (d1 * k1x + d3 * k3x + d4 * k4x + d5 * k5x + d6 * k6x);
    double y5 = y + h * (d1 * k1y + d3 * k3y + d4 * k4y + d5 * k5y + d6 * k6y);
    double err = std::hypot(x5 - x4, y5 - y4);
    x = x5;
    y = y5;
    return err;
}

// One observer-driven integration pass. on_step(t_prev, x_prev, y_prev,
// t_new, x_new, y_new) is called after every accepted step; return false to
// stop early.
struct RunStatus {
    bool diverged = false;
    bool underflow = false;
    double end_time = 0;
};

RunStatus run_steps(
    const Field& f, double x0, double y0, const IntegratorConfig& cfg,
    const std::function<bool(double, double, double, double, double, double)>& on_step) {
    RunStatus status;
    double t = 0, x = x0, y = y0;
    if (cfg.method == Method::rk4_fixed) {
        const double h = cfg.step;
        if (!(h > 0)) throw std::invalid_argument("rk4 step must be positive");
        while (t < cfg.max_time) {
            double px = x, py = y, pt = t;
            rk4_step(f, h, x, y);
            t += h;
            if (!std::isfinite(x) || !std::isfinite(y) ||
                std::hypot(x, y) > cfg.blowup_radius) {
                status.diverged = true;
                status.end_time = pt;
                return status;
            }
            if (!on_step(pt, px, py, t, x, y)) break;
        }
    } else {
        if (!(cfg.tolerance > 0)) throw std::invalid_argument("rkf45 tolerance must be positive");
        double h = std::min(cfg.step > 0 ? cfg.step : 1e-3, cfg.max_time);
        const double hmin = 1e-12;
        while (t < cfg.max_time) {
            h = std::min(h, cfg.max_time - t);
            double px = x, py = y, pt = t;
            double tx = x, ty = y;
            double err = rkf45_step(f, h, tx, ty);
            if (err > cfg.tolerance && h > hmin) {
                double shrink = 0.84 * std::pow(cfg.tolerance / (err + 1e-300), 0.25);
                h *= std::clamp(shrink, 0.1, 0.9);
                if (h < hmin) {
                    status.underflow = true;
                    status.end_time = t;
                    return status;
                }
                continue;
            }
            x = tx;
            y = ty;
            t += h;
            if (!std::isfinite(x) || !std::isfinite(y) ||
                std::hypot(x, y) > cfg.blowup_radius) {
                status.diverged = true;
                status.end_time = pt;
                return status;
            }
            if (!on_step(pt, px, py, t, x, y)) break;
            if (err < cfg.tolerance / 4) {
                double grow = 0.84 * std::pow(cfg.tolerance / (err + 1e-300), 0.25);
                h *= std::clamp(grow, 1.0, 4.0);
            }
        }
    }
    status.end_time = t;
    return status;
}

// Locates the time s in [0, h] at which y vanishes along the flow starting
// from (x0, y0), by bisection on re-stepped RK4 substeps.
void refine_crossing(const Field& f, double x0, double y0, double h, double& t_cross,
                     double& x_cross) {
    double lo = 0, hi = h;
    double y_lo = y0;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        double x = x0, y = y0;
        if (mid > 0) rk4_step(f, mid, x, y);
        if ((y < 0) == (y_lo < 0)) {
            lo = mid;
            y_lo = y;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * std::max(1.0, h)) break;
    }
    double mid = 0.5 * (lo + hi);
    double x = x0, y = y0;
    if (mid > 0) rk4_step(f, mid, x, y);
    t_cross = mid;
    x_cross = x;
}

struct ReturnMapRun {
    std::vector<double> radii;
    std::vector<double> times;
    bool converged = false;
    bool diverged = false;
    bool underflow = false;
    double fixed_point = 0;
    int crossings = 0;
};

ReturnMapRun run_return_map(const Field& f, double seed_radius, const IntegratorConfig& cfg,
                            double rel_tol, int max_crossings) {
    ReturnMapRun run;
    auto observer = [&](double pt, double px, double py, double t, double /*x*/,
                        double y) -> bool {
        bool crossed = (py < 0 && y >= 0) || (py > 0 && y <= 0);
        if (crossed && px > 0) {
            double tc, xc;
            refine_crossing(f, px, py, t - pt, tc, xc);
            if (xc > 0) {
                run.radii.push_back(xc);
                run.times.push_back(pt + tc);
                ++run.crossings;
                std::size_t n = run.radii.size();
                if (n >= 2) {
                    double r1 = run.radii[n - 2], r2 = run.radii[n - 1];
                    if (std::abs(r2 - r1) < rel_tol * std::max(std::abs(r2), 1e-12)) {
                        run.converged = true;
                        run.fixed_point = r2;
                        return false;
                    }
                    if (r2 < 1e-9) return false;  // spiraled into the origin
                }
                if (run.crossings >= max_crossings) return false;
            }
        }
        return true;
    };
    RunStatus status = run_steps(f, seed_radius, 0.0, cfg, observer);
    run.diverged = status.diverged;
    run.underflow = status.underflow;
    return run;
}

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double fa,
                        double fb, double fm, double tol, int depth, double& err_acc) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = fn(lm), frm = fn(rm);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15 * tol) {
        err_acc += std::abs(delta) / 15;
        return left + right + delta / 15;
    }
    return adaptive_simpson(fn, a, m, fa, fm, flm, tol / 2, depth - 1, err_acc) +
           adaptive_simpson(fn, m, b, fm, fb, frm, tol / 2, depth - 1, err_acc);
}

QuadratureResult integrate_0_2pi(const std::function<double(double)>& fn, double tol) {
    // Seed the adaptive pass with a few panels so periodic integrands do not
    // fool the first Simpson estimate.
    const int panels = 16;
    double total = 0, err = 0;
    for (int p = 0; p < panels; ++p) {
        double a = kTwoPi * p / panels, b = kTwoPi * (p + 1) / panels;
        double fa = fn(a), fb = fn(b), fm = fn(0.5 * (a + b));
        total += adaptive_simpson(fn, a, b, fa, fb, fm, tol / panels, 40, err);
    }
    return {total, err};
}

}  // namespace

std::string IntegratorConfig::describe() const {
    std::ostringstream os;
    if (method == Method::rk4_fixed)
        os << "rk4 step=" << step;
    else
        os << "rkf45 tol=" << tolerance;
    os << " max_time=" << max_time
       << (direction == Direction::forward ? " forward" : " backward");
    return os.str();
}

Trajectory integrate(const PlanarSystem& s, double x0, double y0, const IntegratorConfig& cfg) {
    Field f = compile_field(s, cfg.direction);
    Trajectory tr;
    tr.provenance = s.label + " | " + cfg.describe();
    const double tsign = cfg.direction == Direction::backward ? -1.0 : 1.0;
    tr.samples.push_back({0.0, x0, y0});
    auto observer = [&](double, double, double, double t, double x, double y) -> bool {
        tr.samples.push_back({tsign * t, x, y});
        return true;
    };
    RunStatus status = run_steps(f, x0, y0, cfg, observer);
    tr.diverged = status.diverged;
    tr.step_underflow = status.underflow;
    return tr;
}

std::vector<SectionCrossing> poincare_crossings(const PlanarSystem& s, const Trajectory& tr,
                                                Section section) {
    if (section != Section::positive_x_axis)
        throw std::invalid_argument("unknown Poincare section");
    std::vector<SectionCrossing> out;
    if (tr.samples.size() < 2) return out;
    const bool backward = tr.samples[1].t < tr.samples[0].t;
    Field f = compile_field(s, backward ? Direction::backward : Direction::forward);
    for (std::size_t i = 0; i + 1 < tr.samples.size(); ++i) {
        const auto& p = tr.samples[i];
        const auto& q = tr.samples[i + 1];
        // y sign change at positive x; for an orbit around the origin this
        // happens once per revolution whichever way the flow rotates
        bool crossed = (p.y < 0 && q.y >= 0) || (p.y > 0 && q.y <= 0);
        if (!crossed) continue;
        if (p.x <= 0) continue;
        double span = std::abs(q.t - p.t);
        double tc, xc;
        refine_crossing(f, p.x, p.y, span, tc, xc);
        if (xc > 0) out.push_back({p.t + (backward ? -tc : tc), xc});
    }
    return out;
}

std::string cycle_stability_name(CycleStability s) {
    switch (s) {
        case CycleStability::stable: return "stable";
        case CycleStability::unstable: return "unstable";
        case CycleStability::semi_stable: return "semi_stable";
    }
    return "?";
}

namespace {

struct Candidate {
    double radius;
    Direction dir;  // direction in which the return map contracts
    int crossings;
    double period;
};

}  // namespace

CycleSearchOutcome detect_limit_cycles(const PlanarSystem& s, const std::vector<double>& seed_radii,
                                       const IntegratorConfig& cfg) {
    if (seed_radii.empty()) throw std::invalid_argument("seed list must be nonempty");
    const double rel_tol = 1e-8;
    const int max_crossings = 200000;
    CycleSearchOutcome outcome;
    std::vector<Candidate> candidates;

    for (double seed : seed_radii) {
        if (!(seed > 0)) throw std::invalid_argument("seed radii must be positive");
        for (Direction dir : {Direction::forward, Direction::backward}) {
            Field f = compile_field(s, dir);
            ReturnMapRun run = run_return_map(f, seed, cfg, rel_tol, max_crossings);
            const char* dname = dir == Direction::forward ? "forward" : "backward";
            if (run.converged && run.fixed_point > 1e-9) {
                double period = 0;
                if (run.times.size() >= 2)
                    period = run.times.back() - run.times[run.times.size() - 2];
                candidates.push_back({run.fixed_point, dir, run.crossings, period});
            } else if (run.diverged || run.underflow) {
                // expected for seeds outside every basin; not a cycle report
            } else if (!run.converged && !run.radii.empty() && run.radii.back() >= 1e-9) {
                std::ostringstream os;
                os << "seed " << seed << " (" << dname << "): no convergence within max_time ("
                   << run.crossings << " crossings, last radius " << run.radii.back() << ")";
                outcome.inconclusive.push_back(os.str());
            }
        }
    }

    // Merge candidates that agree within the duplicate tolerance.
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.radius < b.radius; });
    std::vector<Candidate> merged;
    for (const auto& c : candidates) {
        if (!merged.empty() && std::abs(c.radius - merged.back().radius) < 1e-4 &&
            merged.back().dir == c.dir) {
            continue;
        }
        merged.push_back(c);
    }

    for (const auto& c : merged) {
        // Two-sided confirmation: restart just inside and outside.
        double delta = std::max(0.02 * c.radius, 5e-3);
        delta = std::min(delta, 0.5 * c.radius);
        Field f = compile_field(s, c.dir);
        bool inner_ok = false, outer_ok = false;
        for (int side = 0; side < 2; ++side) {
            double start = side == 0 ? c.radius - delta : c.radius + delta;
            ReturnMapRun run = run_return_map(f, start, cfg, rel_tol, max_crossings);
            bool ok = run.converged &&
                      std::abs(run.fixed_point - c.radius) < 1e-4 * std::max(c.radius, 1e-6);
            (side == 0 ? inner_ok : outer_ok) = ok;
        }

        LimitCycleEstimate est;
        est.stability = c.dir == Direction::forward ? CycleStability::stable
                                                    : CycleStability::unstable;
        if (!(inner_ok && outer_ok)) {
            if (inner_ok || outer_ok)
                est.stability = CycleStability::semi_stable;
            else {
                std::ostringstream os;
                os << "candidate radius " << c.radius
                   << ": two-sided confirmation failed in both directions";
                outcome.inconclusive.push_back(os.str());
                continue;
            }
        }

        // Measure one loop from the fixed point.
        double min_r = c.radius, max_r = c.radius, sum_r = 0;
        long samples = 0;
        double period = 0;
        bool closed = false;
        auto measure = [&](double pt, double px, double py, double t, double x,
                           double y) -> bool {
            double r = std::hypot(x, y);
            min_r = std::min(min_r, r);
            max_r = std::max(max_r, r);
            sum_r += r;
            ++samples;
            bool crossed = (py < 0 && y >= 0) || (py > 0 && y <= 0);
            if (crossed && px > 0) {
                double tc, xc;
                refine_crossing(f, px, py, t - pt, tc, xc);
                period = pt + tc;
                closed = true;
                return false;
            }
            return true;
        };
        run_steps(f, c.radius, 0.0, cfg, measure);
        est.mean_radius = samples > 0 ? sum_r / samples : c.radius;
        est.radius_spread = max_r - min_r;
        est.period = closed ? period : c.period;
        est.section_crossings_used = c.crossings;
        est.config_summary = cfg.describe();
        outcome.cycles.push_back(est);
    }

    // A stable and an unstable candidate at the same radius would be a
    // contradiction; keep both reports, the caller sees the full picture.
    std::sort(outcome.cycles.begin(), outcome.cycles.end(),
              [](const LimitCycleEstimate& a, const LimitCycleEstimate& b) {
                  return a.mean_radius < b.mean_radius;
              });
    return outcome;
}

CycleStability predict_cycle_stability(const RadiusPolynomial& rp, const RealRoot& root,
                                       const Rational& eps) {
    if (eps == 0) throw std::invalid_argument("stability prediction needs eps != 0");
    UnivariatePoly dp = rp.poly.derivative();
    if (root.multiplicity > 1) return CycleStability::semi_stable;
    // exact sign of P' at the bracketed simple root
    int d_sign;
    if (root.exact) {
        d_sign = sign_of(dp.evaluate(root.lower));
    } else {
        int lo = sign_of(dp.evaluate(root.lower));
        int hi = sign_of(dp.evaluate(root.upper));
        // P' cannot vanish inside the refined bracket of a simple root, so
        // both endpoint signs agree; fall back to the midpoint if one is 0
        d_sign = lo != 0 ? lo : hi;
    }
    int product = d_sign * sign_of(eps);
    if (product == 0) return CycleStability::semi_stable;
    return product > 0 ? CycleStability::stable : CycleStability::unstable;
}

QuadratureResult circle_divergence_integral(const PlanarSystem& s) {
    if (s.label.rfind("circle1(", 0) != 0 && s.label.rfind("circle2(", 0) != 0)
        throw std::invalid_argument(
            "divergence integral applies to the circle constructions only (label: " + s.label +
            ")");
    BivariatePoly div = s.fx.partial_x() + s.fy.partial_y();
    CompiledPoly2D d(div);
    auto fn = [&d](double t) { return d(std::cos(t), std::sin(t)); };
    return integrate_0_2pi(fn, 1e-10);
}

QuadratureResult boundary_circle_integral(const Graph& g) {
    CompiledPoly2D b(boundary_polynomial(g));
    auto fn = [&b](double t) { return b(std::cos(t), std::sin(t)); };
    return integrate_0_2pi(fn, 1e-10);
}

QuadratureResult circle1_corrected_exponent(const Graph& g) {
    CompiledPoly2D b(boundary_polynomial(g));
    auto scan = circle_equilibria_scan(g, 1024);
    if (!scan.empty())
        throw std::domain_error(
            "corrected exponent undefined: the boundary polynomial vanishes on the unit circle");
    auto fn = [&b](double t) { return -2.0 / b(std::cos(t), std::sin(t)); };
    return integrate_0_2pi(fn, 1e-10);
}

std::vector<CircleZero> circle_equilibria_scan(const Graph& g, int samples) {
    if (samples < 360) throw std::invalid_argument("scan needs at least 360 samples");
    CompiledPoly2D b(boundary_polynomial(g));
    auto fn = [&b](double t) { return b(std::cos(t), std::sin(t)); };

    std::vector<CircleZero> zeros;
    std::vector<double> vals(samples + 1);
    for (int i = 0; i <= samples; ++i) vals[i] = fn(kTwoPi * i / samples);

    const double touch_tol = 1e-9;
    for (int i = 0; i < samples; ++i) {
        double a = kTwoPi * i / samples, c = kTwoPi * (i + 1) / samples;
        double fa = vals[i], fc = vals[i + 1];
        if (fa == 0.0) {
            zeros.push_back({a, false});  // provisional; crossing test below
            continue;
        }
        if (fa * fc < 0) {
            double lo = a, hi = c, flo = fa;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi), fm = fn(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back({0.5 * (lo + hi), true});
        } else if (i > 0 && std::abs(vals[i]) < std::abs(vals[i - 1]) &&
                   std::abs(vals[i]) < std::abs(vals[i + 1])) {
            // local minimum of |B|: candidate tangential zero
            double lo = kTwoPi * (i - 1) / samples, hi = c;
            for (int it = 0; it < 200; ++it) {
                double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                if (std::abs(fn(m1)) < std::abs(fn(m2)))
                    hi = m2;
                else
                    lo = m1;
            }
            double theta = 0.5 * (lo + hi);
            if (std::abs(fn(theta)) < touch_tol) zeros.push_back({theta, false});
        }
    }

    // Merge near-duplicates and settle sign_change flags for exact-hit zeros.
    std::sort(zeros.begin(), zeros.end(),
              [](const CircleZero& a, const CircleZero& b) { return a.theta < b.theta; });
    std::vector<CircleZero> merged;
    for (auto z : zeros) {
        if (!merged.empty() && std::abs(z.theta - merged.back().theta) < 1e-6) continue;
        double eps = 1e-5;
        double before = fn(z.theta - eps), after = fn(z.theta + eps);
        z.sign_change = before * after < 0;
        merged.push_back(z);
    }
    return merged;
}

}  // namespace bpdyn
