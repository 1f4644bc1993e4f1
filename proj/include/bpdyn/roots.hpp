#pragma once

#include <vector>

#include "bpdyn/polynomial.hpp"

namespace bpdyn {

/// A real root located by exact sign-variation isolation (Sturm chains on
/// rational coefficients) and refined by bisection. `lower`/`upper` is the
/// final rational bracket; `value` is accurate to about 1e-13 relative.
struct RealRoot {
    double value;
    int multiplicity;
    Rational lower;
    Rational upper;
    bool exact;  // root is the rational `lower` (== `upper`) exactly
};

/// All real roots, ascending, with multiplicities. Throws on the zero
/// polynomial.
std::vector<RealRoot> real_roots(const UnivariatePoly& p);

/// Roots strictly greater than zero.
std::vector<RealRoot> positive_real_roots(const UnivariatePoly& p);

/// gcd made monic; used for square-free work.
UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Yun decomposition: returns (factor, multiplicity) pairs with factors
/// monic and square-free.
std::vector<std::pair<UnivariatePoly, int>> square_free_decomposition(const UnivariatePoly& p);

}  // namespace bpdyn
