#include <doctest.h>

#include "bpdyn/rational.hpp"

using namespace bpdyn;

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
    CHECK(parse_rational("-211/80") == Rational(-211, 80));
    CHECK(parse_rational("299/120") == Rational(299, 120));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational(" -7 ") == Rational(-7));
    CHECK(parse_rational("0.001") == Rational(1, 1000));
    CHECK(parse_rational("2.5e-4") == Rational(1, 4000));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("3e2") == Rational(300));
    CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("rational rendering") {
    CHECK(rational_str(Rational(-211, 80)) == "-211/80");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK(rational_str(Rational(0)) == "0");
}

TEST_CASE("exact square roots") {
    REQUIRE(exact_sqrt(Rational(9, 4)).has_value());
    CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(*exact_sqrt(Rational(1)) == Rational(1));
    CHECK(*exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST_CASE("approximate square roots carry many digits") {
    auto s = approx_sqrt(Rational(2));
    CHECK(s.value == doctest::Approx(1.4142135623730951).epsilon(1e-15));
    CHECK(s.decimal.substr(0, 12) == "0.1414213562");
}

TEST_CASE("binomial and powers") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(8, 4) == 70);
    CHECK(pow_rational(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(pow_rational(Rational(5), 0) == Rational(1));
}
