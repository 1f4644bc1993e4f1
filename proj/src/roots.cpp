#include "bpdyn/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpdyn {

namespace {

UnivariatePoly make_monic(const UnivariatePoly& p) {
    if (p.is_zero()) return p;
    Rational lead = p.coeff(p.degree());
    return p * (Rational(1) / lead);
}

// Sturm chain with each entry scaled monic (positive scaling preserves the
// sign sequence; the sign of the leading coefficient is kept by negating).
std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& f) {
    std::vector<UnivariatePoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const UnivariatePoly& a = chain[chain.size() - 2];
        const UnivariatePoly& b = chain.back();
        UnivariatePoly rem = divmod(a, b).remainder;
        if (rem.is_zero()) break;
        rem = -rem;
        Rational lead = rem.coeff(rem.degree());
        Rational scale = abs(Rational(1) / lead);
        chain.push_back(rem * scale);
    }
    return chain;
}

int sign_variations(const std::vector<UnivariatePoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.evaluate(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

Rational cauchy_bound(const UnivariatePoly& p) {
    Rational lead = abs(p.coeff(p.degree()));
    Rational maxc(0);
    for (int d = 0; d < p.degree(); ++d) {
        Rational a = abs(p.coeff(d));
        if (a > maxc) maxc = a;
    }
    return Rational(1) + maxc / lead;
}

struct Isolated {
    Rational lo, hi;  // open-ended bracket (lo, hi]; lo == hi marks an exact root
    bool exact;
};

// Picks a split point inside (lo, hi) where f does not vanish, so that
// segment endpoints are never roots and half-open counting stays clean.
Rational split_point(const UnivariatePoly& f, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (f.evaluate(mid) != 0) return mid;
    // Nudge off the root; f has finitely many zeros so a few tries suffice.
    Rational width = hi - lo;
    for (int shift = 3; shift < 64; ++shift) {
        Rational cand = mid + width / (1 << shift);
        if (cand < hi && f.evaluate(cand) != 0) return cand;
    }
    throw std::logic_error("could not find a root-free split point");
}

std::vector<Isolated> isolate_square_free(const UnivariatePoly& f) {
    std::vector<Isolated> out;
    if (f.degree() < 1) return out;
    auto chain = sturm_chain(f);
    Rational bound = cauchy_bound(f);

    struct Segment {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Segment> stack;
    Rational lo = -bound, hi = bound;
    stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
    // Endpoints +-bound are beyond every root, so counting on (lo, hi] is safe.

    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        int count = seg.vlo - seg.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            out.push_back({seg.lo, seg.hi, false});
            continue;
        }
        Rational mid = split_point(f, seg.lo, seg.hi);
        int vmid = sign_variations(chain, mid);
        stack.push_back({seg.lo, mid, seg.vlo, vmid});
        stack.push_back({mid, seg.hi, vmid, seg.vhi});
    }
    return out;
}

// Bisection refinement of a bracket known to contain exactly one simple root.
RealRoot refine(const UnivariatePoly& f, Isolated iso, int multiplicity) {
    if (iso.exact) {
        double v = to_double(iso.lo);
        return RealRoot{v, multiplicity, iso.lo, iso.hi, true};
    }
    Rational lo = iso.lo, hi = iso.hi;
    int slo = sign_of(f.evaluate(lo));
    if (slo == 0) {
        // Bracket start landed on the root exactly.
        return RealRoot{to_double(lo), multiplicity, lo, lo, true};
    }
    int shi = sign_of(f.evaluate(hi));
    if (shi == 0) return RealRoot{to_double(hi), multiplicity, hi, hi, true};

    // Pin the bracket to one side of zero so sign filters stay exact.
    if (lo < 0 && hi > 0) {
        int s0 = sign_of(f.evaluate(Rational(0)));
        if (s0 == 0) return RealRoot{0.0, multiplicity, Rational(0), Rational(0), true};
        if (s0 == slo)
            lo = 0;
        else
            hi = 0;
    }

    for (int it = 0; it < 160; ++it) {
        Rational width = hi - lo;
        Rational alo = abs(lo), ahi = abs(hi);
        Rational scale = alo > ahi ? alo : ahi;
        if (scale < Rational(1, 1000000)) scale = Rational(1, 1000000);
        // stop once relative width ~1e-14 (absolute for roots near 0)
        if (width * Rational(100000000000000L) < scale) break;
        Rational mid = (lo + hi) / 2;
        int smid = sign_of(f.evaluate(mid));
        if (smid == 0) return RealRoot{to_double(mid), multiplicity, mid, mid, true};
        if (smid == slo)
            lo = mid;
        else
            hi = mid;
    }
    double value = to_double((lo + hi) / 2);
    return RealRoot{value, multiplicity, lo, hi, false};
}

}  // namespace

UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = make_monic(a), y = make_monic(b);
    while (!y.is_zero()) {
        UnivariatePoly r = divmod(x, y).remainder;
        x = y;
        y = make_monic(r);
    }
    if (x.is_zero()) return x;
    return make_monic(x);
}

std::vector<std::pair<UnivariatePoly, int>> square_free_decomposition(const UnivariatePoly& p) {
    std::vector<std::pair<UnivariatePoly, int>> factors;
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
    if (p.degree() < 1) return factors;

    UnivariatePoly f = make_monic(p);
    UnivariatePoly d = poly_gcd(f, f.derivative());
    UnivariatePoly b = divmod(f, d).quotient;  // product of the distinct roots
    UnivariatePoly c = divmod(f.derivative(), d).quotient;
    UnivariatePoly z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UnivariatePoly a = poly_gcd(b, z);
        if (a.degree() > 0) factors.emplace_back(a, i);
        b = divmod(b, a.degree() > 0 ? a : UnivariatePoly::constant(Rational(1))).quotient;
        c = a.degree() > 0 ? divmod(z, a).quotient : z;
        z = c - b.derivative();
        ++i;
        if (i > p.degree() + 1) throw std::logic_error("square-free decomposition did not terminate");
    }
    return factors;
}

std::vector<RealRoot> real_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation on the zero polynomial");
    std::vector<RealRoot> roots;
    for (auto& [factor, mult] : square_free_decomposition(p)) {
        for (auto& iso : isolate_square_free(factor)) roots.push_back(refine(factor, iso, mult));
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return roots;
}

std::vector<RealRoot> positive_real_roots(const UnivariatePoly& p) {
    // Brackets never straddle zero (refine pins them), so the filter is exact.
    std::vector<RealRoot> out;
    for (auto& r : real_roots(p)) {
        if (r.exact ? r.lower > 0 : r.lower >= 0) out.push_back(r);
    }
    return out;
}

}  // namespace bpdyn
