#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bpdyn {

// All exact arithmetic in the library runs on GMP rationals. Floating point
// appears only in the simulation/quadrature layer.
using Rational = mpq_class;
using BigInt = mpz_class;

/// -1, 0 or +1.
inline int sign_of(const Rational& r) { return sgn(r); }

/// Parses "num/den", a plain integer, or a decimal/scientific literal
/// ("0.001", "2.5e-4") with exact decimal-to-rational conversion.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "num" when the denominator is 1, else "num/den".
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

/// Exact square root when r is the square of a rational; nullopt otherwise
/// (including all negative inputs).
std::optional<Rational> exact_sqrt(const Rational& r);

/// High-precision square root of a nonnegative rational.
struct SqrtApprox {
    double value;
    std::string decimal;  // ~`digits` significant digits
};
SqrtApprox approx_sqrt(const Rational& r, int digits = 64);

Rational pow_rational(const Rational& base, unsigned exp);
BigInt binomial(unsigned n, unsigned k);

}  // namespace bpdyn
