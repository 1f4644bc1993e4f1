#pragma once

#include <string>
#include <vector>

#include "bpdyn/rational.hpp"

namespace bpdyn {

/// Univariate polynomial with exact rational coefficients, stored by
/// ascending degree. The leading coefficient is nonzero unless the
/// polynomial is zero (in which case the coefficient vector is empty and
/// degree() == -1).
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);

    static UnivariatePoly constant(const Rational& c);
    static UnivariatePoly monomial(const Rational& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int d) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;
    UnivariatePoly derivative() const;

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const Rational& s) const;
    UnivariatePoly operator-() const;
    bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

    /// "3/2 + x - (7/2)x^2" style; non-integer coefficients parenthesized.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact univariate division.
struct UnivariateDivMod {
    UnivariatePoly quotient;
    UnivariatePoly remainder;
};
UnivariateDivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b);

/// Dense bivariate polynomial over the rationals on the triangular grid
/// { (i,j) : i + j <= maxdeg }. Coefficient (i,j) multiplies x^i y^j.
class BivariatePoly {
public:
    BivariatePoly() : BivariatePoly(0) {}
    explicit BivariatePoly(int maxdeg);

    static BivariatePoly constant(const Rational& c);
    static BivariatePoly variable_x();
    static BivariatePoly variable_y();
    /// Embeds p(x) as a bivariate polynomial in x alone.
    static BivariatePoly from_x_poly(const UnivariatePoly& p);

    int maxdeg() const { return maxdeg_; }
    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& v);

    Rational evaluate(const Rational& x, const Rational& y) const;
    double evaluate(double x, double y) const;

    BivariatePoly partial_x() const;
    BivariatePoly partial_y() const;
    /// p(x, x): coefficient of x^d in the result is the diagonal sum over i+j = d.
    UnivariatePoly diagonal() const;
    /// Shrinks maxdeg to the actual total degree (keeps at least 0).
    BivariatePoly trimmed() const;
    bool is_zero() const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rational& s) const;
    BivariatePoly operator-() const;
    /// Mathematical equality (grid bounds may differ).
    bool operator==(const BivariatePoly& o) const;

    /// Terms ordered by total degree ascending, then x-power descending:
    /// "1 + 3x^2y + 3xy^2 + y^3".
    std::string to_string() const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (maxdeg_ + 1) + j; }
    int maxdeg_;
    std::vector<Rational> coeffs_;
    static const Rational kZero;
};

/// B~ = B - 1: subtracts one from the constant term.
BivariatePoly tilde(const BivariatePoly& p);

/// Double-precision evaluator compiled once from the exact coefficients;
/// Horner in y inside Horner in x.
class CompiledPoly2D {
public:
    CompiledPoly2D() = default;
    explicit CompiledPoly2D(const BivariatePoly& p);
    double operator()(double x, double y) const;

private:
    std::vector<std::vector<double>> rows_;  // rows_[i][j] = coeff of x^i y^j
};

}  // namespace bpdyn
