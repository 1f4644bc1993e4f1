#include <doctest.h>

#include "bpdyn/polynomial.hpp"

using namespace bpdyn;

namespace {

// (x+y)^3 + 1 - x^3
BivariatePoly k3_closed_form() {
    BivariatePoly p(3);
    p.set_coeff(0, 0, Rational(1));
    p.set_coeff(2, 1, Rational(3));
    p.set_coeff(1, 2, Rational(3));
    p.set_coeff(0, 3, Rational(1));
    return p;
}

}  // namespace

TEST_CASE("univariate basics") {
    UnivariatePoly p({Rational(1), Rational(0), Rational(-2)});  // 1 - 2x^2
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(Rational(3)) == Rational(-17));
    CHECK(p.derivative() == UnivariatePoly({Rational(0), Rational(-4)}));
    CHECK(p.to_string() == "1 - 2x^2");
    CHECK(UnivariatePoly().is_zero());
    CHECK(UnivariatePoly({Rational(0), Rational(0)}).is_zero());  // trailing zeros trimmed
}

TEST_CASE("univariate division") {
    // (x-1)(x-2) = x^2 - 3x + 2 divided by (x-1)
    UnivariatePoly num({Rational(2), Rational(-3), Rational(1)});
    UnivariatePoly den({Rational(-1), Rational(1)});
    auto [q, r] = divmod(num, den);
    CHECK(r.is_zero());
    CHECK(q == UnivariatePoly({Rational(-2), Rational(1)}));
    CHECK_THROWS_AS(divmod(num, UnivariatePoly()), std::invalid_argument);
}

TEST_CASE("bivariate coefficient grid enforces the triangular bound") {
    BivariatePoly p(2);
    p.set_coeff(1, 1, Rational(5));
    CHECK(p.coeff(1, 1) == Rational(5));
    CHECK(p.coeff(2, 2) == Rational(0));  // outside reads as zero
    CHECK_THROWS_AS(p.set_coeff(2, 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("bivariate arithmetic and evaluation are exact") {
    BivariatePoly p = k3_closed_form();
    CHECK(p.evaluate(Rational(1), Rational(1)) == Rational(8));
    CHECK(p.evaluate(Rational(0), Rational(-1)) == Rational(0));
    CHECK(p.evaluate(Rational(1, 2), Rational(1, 3)) ==
          Rational(1) + Rational(1, 4) + Rational(1, 6) + Rational(1, 27));
    BivariatePoly sum = p + p;
    CHECK(sum.coeff(2, 1) == Rational(6));
    CHECK((p - p).is_zero());
}

TEST_CASE("bivariate product matches hand expansion") {
    // (1 + xy) * (1 + y) = 1 + y + xy + xy^2
    BivariatePoly a(2), b(1);
    a.set_coeff(0, 0, Rational(1));
    a.set_coeff(1, 1, Rational(1));
    b.set_coeff(0, 0, Rational(1));
    b.set_coeff(0, 1, Rational(1));
    BivariatePoly prod = a * b;
    CHECK(prod.coeff(0, 0) == Rational(1));
    CHECK(prod.coeff(0, 1) == Rational(1));
    CHECK(prod.coeff(1, 1) == Rational(1));
    CHECK(prod.coeff(1, 2) == Rational(1));
    CHECK(prod.evaluate(Rational(2), Rational(3)) == Rational(7) * Rational(4));
}

TEST_CASE("partial derivatives") {
    // d/dx of (x+y)^3 + 1 - x^3 = 3(x+y)^2 - 3x^2 = 6xy + 3y^2
    BivariatePoly px = k3_closed_form().partial_x();
    CHECK(px.coeff(1, 1) == Rational(6));
    CHECK(px.coeff(0, 2) == Rational(3));
    CHECK(px.coeff(2, 0) == Rational(0));

    // d/dy of (1+y)^3 viewed bivariately = 3(1+y)^2
    BivariatePoly e3(3);
    for (int j = 0; j <= 3; ++j) e3.set_coeff(0, j, Rational(binomial(3, j)));
    BivariatePoly py = e3.partial_y();
    CHECK(py.coeff(0, 0) == Rational(3));
    CHECK(py.coeff(0, 1) == Rational(6));
    CHECK(py.coeff(0, 2) == Rational(3));

    CHECK(BivariatePoly::constant(Rational(7)).partial_x().is_zero());
}

TEST_CASE("diagonal and tilde") {
    // 1 + 2xy + y^2 -> 1 + 3x^2
    BivariatePoly p(2);
    p.set_coeff(0, 0, Rational(1));
    p.set_coeff(1, 1, Rational(2));
    p.set_coeff(0, 2, Rational(1));
    UnivariatePoly d = p.diagonal();
    CHECK(d == UnivariatePoly({Rational(1), Rational(0), Rational(3)}));

    CHECK(tilde(p).coeff(0, 0) == Rational(0));
    CHECK(tilde(BivariatePoly::constant(Rational(1))).is_zero());
    CHECK(BivariatePoly().diagonal().is_zero());

    // diagonal(tilde(p)) == diagonal(p) - 1
    CHECK(tilde(p).diagonal() == d - UnivariatePoly::constant(Rational(1)));
}

TEST_CASE("rendering follows degree-then-x order") {
    CHECK(k3_closed_form().to_string() == "1 + 3x^2y + 3xy^2 + y^3");
    BivariatePoly e2(2);
    e2.set_coeff(0, 0, Rational(1));
    e2.set_coeff(0, 1, Rational(2));
    e2.set_coeff(0, 2, Rational(1));
    CHECK(e2.to_string() == "1 + 2y + y^2");
    UnivariatePoly radius({Rational(3, 2), Rational(-7, 2), Rational(1)});
    CHECK(radius.to_string("rho") == "3/2 - (7/2)rho + rho^2");
    CHECK(BivariatePoly().to_string() == "0");
}

TEST_CASE("compiled evaluator agrees with the exact one") {
    BivariatePoly p = k3_closed_form();
    CompiledPoly2D c(p);
    for (double x : {-1.5, 0.0, 0.3, 2.0})
        for (double y : {-2.0, 0.1, 1.0}) {
            CHECK(c(x, y) == doctest::Approx(p.evaluate(x, y)).epsilon(1e-14));
        }
}
