#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "szego/multiplicity.hpp"
#include "szego/polynomial.hpp"
#include "szego/text.hpp"

using namespace szego;

TEST_CASE("parse_rational reads integers and fractions in lowest terms") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/4") == Rational(-3) / 4);
    CHECK(parse_rational("6/8") == Rational(3) / 4);
    CHECK(parse_rational("0/5") == 0);
    CHECK(parse_rational("17/23") == Rational(17) / 23);
}

TEST_CASE("parse_rational rejects decimals and malformed input") {
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3//4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("format_rational writes integers bare and fractions as p/q") {
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(-5)) == "-5");
    CHECK(format_rational(Rational(3) / 4) == "3/4");
    CHECK(format_rational(Rational(-17) / 23) == "-17/23");
    CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("list parsing trims item whitespace and accepts the empty list") {
    CHECK((parse_rational_list("1, -2/3 ,4") ==
           std::vector<Rational>{Rational(1), Rational(-2) / 3, Rational(4)}));
    CHECK(parse_rational_list("").empty());
    CHECK(parse_rational_list("   ").empty());
    CHECK((parse_int_list("2,14,1") == std::vector<int>{2, 14, 1}));
    CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("1/2"), std::invalid_argument);
}

TEST_CASE("coefficient and pretty forms of the same polynomial") {
    const Polynomial p(parse_rational_list("24,28,10,1"), 3);
    CHECK(format_coefficients(p) == "24,28,10,1");
    CHECK(format_polynomial_pretty(p) == "x^3 + 10*x^2 + 28*x + 24");

    const Polynomial signs(parse_rational_list("5,-9,3,1"), 3);
    CHECK(format_polynomial_pretty(signs) == "x^3 + 3*x^2 - 9*x + 5");

    const Polynomial rational_coeffs(parse_rational_list("408/23,649/23,264/23,1"), 3);
    CHECK(format_coefficients(rational_coeffs) == "408/23,649/23,264/23,1");

    CHECK(format_coefficients(Polynomial::zero(2)) == "0,0,0");
    CHECK(format_polynomial_pretty(Polynomial::zero(2)) == "0");
}

TEST_CASE("multiplicity vector text round-trips against n") {
    const MultiplicityVector mv = parse_multiplicity_vector("2,14,1", 17);
    CHECK(format_multiplicity_vector(mv) == "2,14,1");
    CHECK_THROWS_AS(parse_multiplicity_vector("2,14,2", 17), std::invalid_argument);
    CHECK_THROWS_AS(parse_multiplicity_vector("0,17", 17), std::invalid_argument);
}

TEST_CASE("signed multiplicity vector text keeps all three sections") {
    const SignedMultiplicityVector smv = parse_signed_multiplicity_vector(
        "neg:1,2|zero:1|pos:3", 7);
    CHECK((smv == SignedMultiplicityVector({1, 2}, 1, {3})));
    CHECK(format_signed_multiplicity_vector(smv) == "neg:1,2|zero:1|pos:3");

    const SignedMultiplicityVector empty_blocks =
        parse_signed_multiplicity_vector("neg:|zero:0|pos:3", 3);
    CHECK((empty_blocks == SignedMultiplicityVector({}, 0, {3})));
    CHECK(format_signed_multiplicity_vector(empty_blocks) == "neg:|zero:0|pos:3");

    CHECK_THROWS_AS(parse_signed_multiplicity_vector("neg:1|pos:1", 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_multiplicity_vector("neg:1|zero:0|pos:3", 7),
                    std::invalid_argument);
}

TEST_CASE("sign signatures format with explicit counts") {
    CHECK(format_sign_signature(SignSignature{2, 1, 3}) == "neg:2|zero:1|pos:3");
    CHECK(format_sign_signature(SignSignature{0, 0, 0}) == "neg:0|zero:0|pos:0");
}

TEST_CASE("intervals format as points or half-open ranges") {
    CHECK(format_interval(IsolatingInterval::point(parse_rational("-6"))) == "-6");
    CHECK(format_interval(IsolatingInterval(parse_rational("-3/2"), parse_rational("-9/8"))) ==
          "(-3/2,-9/8]");
}
