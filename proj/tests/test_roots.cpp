#include <doctest.h>

#include <cmath>
#include <random>

#include "bpdyn/roots.hpp"

using namespace bpdyn;

namespace {

UnivariatePoly from_roots(const std::vector<Rational>& roots) {
    UnivariatePoly p = UnivariatePoly::constant(Rational(1));
    for (const auto& r : roots) p = p * UnivariatePoly({-r, Rational(1)});
    return p;
}

}  // namespace

TEST_CASE("square-free decomposition separates multiplicities") {
    // (x-2)^2 (x-5)
    UnivariatePoly p = UnivariatePoly({Rational(-2), Rational(1)}) *
                       UnivariatePoly({Rational(-2), Rational(1)}) *
                       UnivariatePoly({Rational(-5), Rational(1)});
    auto factors = square_free_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[1].second == 2);
    CHECK(factors[0].first == UnivariatePoly({Rational(-5), Rational(1)}));
    CHECK(factors[1].first == UnivariatePoly({Rational(-2), Rational(1)}));
}

TEST_CASE("the two-cycle radius polynomial isolates 1/2 and 3") {
    // rho^2 - (7/2) rho + 3/2
    UnivariatePoly p({Rational(3, 2), Rational(-7, 2), Rational(1)});
    auto roots = positive_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].value - 0.5) <= 1e-12 * 0.5);
    CHECK(std::abs(roots[1].value - 3.0) <= 1e-12 * 3.0);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("polynomials with no positive roots") {
    CHECK(positive_real_roots(UnivariatePoly({Rational(1), Rational(1)})).empty());
    CHECK(positive_real_roots(UnivariatePoly({Rational(3, 2), Rational(3, 8)})).empty());
    CHECK_THROWS_AS(real_roots(UnivariatePoly()), std::invalid_argument);
}

TEST_CASE("multiplicities are reported") {
    // (x-2)^2 (x-5) has a double root at 2
    UnivariatePoly p = UnivariatePoly({Rational(-2), Rational(1)}) *
                       UnivariatePoly({Rational(-2), Rational(1)}) *
                       UnivariatePoly({Rational(-5), Rational(1)});
    auto roots = positive_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("roots constructed from random rationals are recovered") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        int count = 1 + static_cast<int>(rng() % 5);
        std::vector<Rational> roots;
        for (int i = 0; i < count; ++i) {
            long num = static_cast<long>(rng() % 2000) - 1000;
            long den = 1 + static_cast<long>(rng() % 40);
            Rational r(num, den);
            r.canonicalize();
            bool dup = false;
            for (const auto& prev : roots)
                if (prev == r) dup = true;
            if (dup) {
                --i;
                continue;
            }
            roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        auto found = real_roots(from_roots(roots));
        REQUIRE(found.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            double expect = to_double(roots[i]);
            double scale = std::max(std::abs(expect), 1e-6);
            CHECK(std::abs(found[i].value - expect) <= 1e-11 * scale);
        }
    }
}

TEST_CASE("roots at zero are excluded from the positive list") {
    // x (x - 3/7)
    UnivariatePoly p = UnivariatePoly({Rational(0), Rational(1)}) *
                       UnivariatePoly({Rational(-3, 7), Rational(1)});
    auto roots = positive_real_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].value == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("exact rational hits are flagged") {
    // root exactly 1/2 next to an irrational pair
    UnivariatePoly p = UnivariatePoly({Rational(-1, 2), Rational(1)}) *
                       UnivariatePoly({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(roots[1].value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(roots[2].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}
