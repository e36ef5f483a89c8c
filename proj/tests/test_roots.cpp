#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "szego/polynomial.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"

using namespace szego;

namespace {

Rational q(const char* text) { return parse_rational(text); }

Polynomial poly(const char* coeffs, int ambient) {
    return Polynomial(parse_rational_list(coeffs), ambient);
}

}  // namespace

TEST_CASE("endpoints order as points of the extended line") {
    CHECK(Endpoint::minus_infinity() < Endpoint::at(q("0")));
    CHECK(Endpoint::at(q("0")) < Endpoint::plus_infinity());
    CHECK(Endpoint::at(q("1")) < Endpoint::at(q("2")));
    CHECK_FALSE(Endpoint::plus_infinity() < Endpoint::plus_infinity());
    CHECK_FALSE(Endpoint::at(q("2")) < Endpoint::at(q("2")));
}

TEST_CASE("sturm_chain works on the square-free part") {
    CHECK(sturm_chain(poly("-6,11,-6,1", 3)).sequence.size() == 4);
    // (x+2)^2 reduces to x+2 before the chain is built.
    CHECK(sturm_chain(poly("4,4,1", 2)).sequence.size() == 2);
    CHECK_THROWS_AS(sturm_chain(Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("root counts are exact on half-open intervals, even at root endpoints") {
    const Polynomial p = poly("-6,11,-6,1", 3);  // roots 1, 2, 3
    CHECK(count_distinct_real_roots(p) == 3);
    CHECK(count_distinct_real_roots(p, Endpoint::at(q("1")), Endpoint::at(q("3"))) == 2);
    CHECK(count_distinct_real_roots(p, Endpoint::at(q("1")), Endpoint::at(q("2"))) == 1);
    CHECK(count_distinct_real_roots(p, Endpoint::minus_infinity(), Endpoint::at(q("1"))) == 1);
    CHECK(count_distinct_real_roots(p, Endpoint::at(q("3")), Endpoint::plus_infinity()) == 0);
    CHECK(count_distinct_real_roots(p, Endpoint::at(q("0")), Endpoint::at(q("1"))) == 1);
}

TEST_CASE("multiplicities never change distinct-root counts") {
    const Polynomial p = multiply(pow(poly("-1,1", 1), 2), pow(poly("-2,1", 1), 3));
    CHECK(count_distinct_real_roots(p) == 2);
}

TEST_CASE("is_hyperbolic detects non-real roots") {
    CHECK(is_hyperbolic(poly("3,7,5,1", 3)));
    CHECK(is_hyperbolic(poly("0,0,1", 2)));  // x^2
    CHECK(is_hyperbolic(Polynomial::constant(Rational(5), 0)));
    CHECK_FALSE(is_hyperbolic(poly("1,0,1", 2)));                 // x^2 + 1
    CHECK_FALSE(is_hyperbolic(multiply(poly("2,0,1", 2), poly("-1,1", 1))));
}

TEST_CASE("squarefree_decomposition separates factors by exponent") {
    const auto factors = squarefree_decomposition(poly("24,28,10,1", 3));
    REQUIRE(factors.size() == 2);
    CHECK((factors[0].factor == poly("6,1", 1)));
    CHECK(factors[0].exponent == 1);
    CHECK((factors[1].factor == poly("2,1", 1)));
    CHECK(factors[1].exponent == 2);

    const auto cube = squarefree_decomposition(poly("0,0,0,1", 3));
    REQUIRE(cube.size() == 1);
    CHECK((cube[0].factor == poly("0,1", 1)));
    CHECK(cube[0].exponent == 3);

    CHECK(squarefree_decomposition(Polynomial::constant(Rational(7), 0)).empty());

    // Non-monic input: factors come out monic.
    const auto scaled = squarefree_decomposition(scale(poly("4,4,1", 2), q("2")));
    REQUIRE(scaled.size() == 1);
    CHECK((scaled[0].factor == poly("2,1", 1)));
    CHECK(scaled[0].exponent == 2);
}

TEST_CASE("cauchy_root_bound dominates every real root strictly") {
    CHECK(cauchy_root_bound(poly("-2,0,1", 2)) == 3);
    const Polynomial p = poly("-2,-4,-1,2,1", 4);  // (x^2-2)(x+1)^2
    CHECK(cauchy_root_bound(p) == 5);
    CHECK(count_distinct_real_roots(p, Endpoint::at(q("-5")), Endpoint::at(q("5"))) ==
          count_distinct_real_roots(p));
}

TEST_CASE("multiplicity_structure isolates rational roots as exact points") {
    const MultiplicityStructure ms = multiplicity_structure(poly("24,28,10,1", 3));
    REQUIRE(ms.size() == 2);
    CHECK((ms.entries()[0].location == IsolatingInterval::point(q("-6"))));
    CHECK(ms.entries()[0].multiplicity == 1);
    CHECK((ms.entries()[1].location == IsolatingInterval::point(q("-2"))));
    CHECK(ms.entries()[1].multiplicity == 2);
    CHECK(ms.total_multiplicity() == 3);
    CHECK(format_multiplicity_structure(ms) == "-6:1, -2:2");
}

TEST_CASE("multiplicity_structure boxes irrational roots in sign-definite intervals") {
    const MultiplicityStructure ms = multiplicity_structure(poly("-2,-4,-1,2,1", 4));
    REQUIRE(ms.size() == 3);
    CHECK(format_multiplicity_structure(ms) == "(-3/2,-9/8]:1, -1:2, (0,3]:1");
    CHECK(ms.entries()[0].root_sign() == -1);
    CHECK(ms.entries()[1].root_sign() == -1);
    CHECK(ms.entries()[2].root_sign() == 1);
    CHECK_FALSE(ms.entries()[0].exact_value().has_value());
    CHECK(ms.entries()[1].exact_value().value() == q("-1"));
    CHECK(ms.total_multiplicity() == 4);
}

TEST_CASE("zero roots always isolate as the exact point 0") {
    const MultiplicityStructure ms = multiplicity_structure(poly("0,0,1,1", 3));
    REQUIRE(ms.size() == 2);
    CHECK((ms.entries()[0].location == IsolatingInterval::point(q("-1"))));
    CHECK(ms.entries()[0].multiplicity == 1);
    CHECK((ms.entries()[1].location == IsolatingInterval::point(q("0"))));
    CHECK(ms.entries()[1].multiplicity == 2);
    CHECK((ms.signed_multiplicity_vector() ==
           SignedMultiplicityVector({1}, 2, {})));
}

TEST_CASE("structure queries reject non-real roots with the exact deficit") {
    const Polynomial p = multiply(poly("1,0,1", 2), pow(poly("-1,1", 1), 2));
    try {
        multiplicity_structure(p);
        FAIL("expected non_hyperbolic_error");
    } catch (const non_hyperbolic_error& e) {
        CHECK(e.real_root_deficit() == 2);
    }
}

TEST_CASE("partition-level queries need full effective degree") {
    CHECK_THROWS_AS(multiplicity_vector(poly("1,1", 2)), std::invalid_argument);
    CHECK_THROWS_AS(sign_signature(Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("sign-aware summaries agree on a mixed example") {
    const Polynomial p =
        Polynomial::from_roots({q("-1"), q("-1"), q("0"), q("2"), q("2"), q("2")}, 6);
    CHECK((multiplicity_vector(p) == MultiplicityVector({2, 1, 3})));
    CHECK((sign_signature(p) == SignSignature{2, 1, 3}));
    CHECK((signed_multiplicity_vector(p) == SignedMultiplicityVector({2}, 1, {3})));
}

TEST_CASE("isolating intervals are half-open with point degeneracy") {
    const IsolatingInterval iv(q("1"), q("2"));
    CHECK(iv.contains(q("2")));
    CHECK(iv.contains(q("3/2")));
    CHECK_FALSE(iv.contains(q("1")));
    CHECK(IsolatingInterval::point(q("1")).contains(q("1")));
    CHECK_THROWS_AS(IsolatingInterval(q("2"), q("1")), std::invalid_argument);
}

TEST_CASE("strictly_ordered compares covered value sets") {
    CHECK(strictly_ordered(IsolatingInterval::point(q("1")), IsolatingInterval(q("1"), q("2"))));
    CHECK_FALSE(strictly_ordered(IsolatingInterval(q("0"), q("1")),
                                 IsolatingInterval::point(q("1"))));
    CHECK(strictly_ordered(IsolatingInterval(q("0"), q("1")),
                           IsolatingInterval(q("1"), q("2"))));
}
