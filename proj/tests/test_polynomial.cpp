#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "szego/binomial.hpp"
#include "szego/polynomial.hpp"
#include "szego/text.hpp"

using namespace szego;

namespace {

Rational q(const char* text) { return parse_rational(text); }

Polynomial poly(const char* coeffs, int ambient) {
    return Polynomial(parse_rational_list(coeffs), ambient);
}

}  // namespace

TEST_CASE("construction pads short coefficient lists and rejects long ones") {
    const Polynomial p({Rational(1)}, 3);
    CHECK(p.coeffs().size() == 4);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.ambient_degree() == 3);
    CHECK_THROWS_AS(Polynomial({Rational(1), Rational(2)}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial({}, -1), std::invalid_argument);
}

TEST_CASE("zero and constant polynomials") {
    const Polynomial z = Polynomial::zero(3);
    CHECK(z.is_zero());
    CHECK(z.effective_degree() == -1);
    CHECK_THROWS_AS(z.leading_coeff(), std::invalid_argument);
    CHECK_THROWS_AS(z.order_at_zero(), std::invalid_argument);

    const Polynomial c = Polynomial::constant(Rational(7), 2);
    CHECK(c.effective_degree() == 0);
    CHECK(c.leading_coeff() == 7);
    CHECK_FALSE(c.is_zero());
}

TEST_CASE("from_roots expands the monic product of linear factors") {
    CHECK((Polynomial::from_roots({q("-1"), q("-1"), q("-3")}, 3) == poly("3,7,5,1", 3)));
    CHECK((Polynomial::from_roots({q("-2"), q("-2"), q("-2")}, 3) == poly("8,12,6,1", 3)));
    CHECK((Polynomial::from_roots({}, 0) == Polynomial::constant(Rational(1), 0)));
    CHECK_THROWS_AS(Polynomial::from_roots({q("1")}, 2), std::invalid_argument);
}

TEST_CASE("composition_identity is the binomial expansion of (1+x)^n") {
    CHECK((Polynomial::composition_identity(4) == poly("1,4,6,4,1", 4)));
    const Polynomial e = Polynomial::composition_identity(6);
    for (int i = 0; i <= 6; ++i) CHECK(e.coeff(i) == Rational(binomial(6, i)));
}

TEST_CASE("order_at_zero is the lowest nonzero coefficient index") {
    CHECK(poly("0,0,1,1", 3).order_at_zero() == 2);
    CHECK(poly("5,1", 1).order_at_zero() == 0);
}

TEST_CASE("with_ambient and trimmed re-embed without changing values") {
    const Polynomial p = poly("1,2", 1);
    const Polynomial wide = p.with_ambient(4);
    CHECK(wide.ambient_degree() == 4);
    CHECK(wide.effective_degree() == 1);
    CHECK((wide.trimmed() == p));
    CHECK_THROWS_AS(poly("1,2,3", 2).with_ambient(1), std::invalid_argument);
    CHECK(Polynomial::zero(5).trimmed().ambient_degree() == 0);
}

TEST_CASE("evaluate is exact on rationals") {
    const Polynomial p = poly("-6,11,-6,1", 3);  // (x-1)(x-2)(x-3)
    CHECK(evaluate(p, q("5/2")) == q("-3/8"));
    CHECK(evaluate(p, q("2")) == 0);
    CHECK(evaluate(Polynomial::zero(2), q("9")) == 0);
}

TEST_CASE("derivative drops the ambient degree by one") {
    const Polynomial p = poly("3,7,5,1", 3);
    CHECK((derivative(p) == poly("7,10,3", 2)));
    CHECK((derivative(Polynomial::constant(Rational(4), 0)) == Polynomial::zero(0)));
}

TEST_CASE("ring operations track ambient degrees") {
    const Polynomial a = poly("1,1", 1);
    const Polynomial b = poly("2,0,1", 2);
    CHECK(multiply(a, b).ambient_degree() == 3);
    CHECK((multiply(a, b) == poly("2,2,1,1", 3)));
    CHECK(add(a, b).ambient_degree() == 2);
    CHECK((add(a, b) == poly("3,1,1", 2)));
    CHECK((subtract(b, b) == Polynomial::zero(2)));
    CHECK((negate(a) == poly("-1,-1", 1)));
    CHECK((scale(b, q("1/2")) == poly("1,0,1/2", 2)));
}

TEST_CASE("scale_argument substitutes lambda*x in place") {
    CHECK((scale_argument(poly("1,2,1", 2), q("2")) == poly("1,4,4", 2)));
    CHECK((scale_argument(poly("1,2,1", 2), q("-1")) == poly("1,-2,1", 2)));
}

TEST_CASE("pow multiplies ambient degrees") {
    CHECK((pow(poly("2,1", 1), 3) == poly("8,12,6,1", 3)));
    CHECK((pow(poly("3,1", 1), 0) == Polynomial::constant(Rational(1), 0)));
    CHECK_THROWS_AS(pow(poly("3,1", 1), -1), std::invalid_argument);
}

TEST_CASE("exact_divide returns the quotient only when the remainder vanishes") {
    const Polynomial p = poly("24,28,10,1", 3);  // (x+6)(x+2)^2
    const auto quotient = exact_divide(p, poly("4,4,1", 2));
    REQUIRE(quotient.has_value());
    CHECK((quotient->trimmed() == poly("6,1", 1)));
    CHECK_FALSE(exact_divide(p, poly("3,1", 1)).has_value());
    CHECK_THROWS_AS(exact_divide(p, Polynomial::zero(1)), std::invalid_argument);
}

TEST_CASE("divmod satisfies p = q*d + r with deg r < deg d") {
    const Polynomial p = poly("1,0,0,1", 3);  // x^3 + 1
    const Polynomial d = poly("1,0,1", 2);    // x^2 + 1
    const DivisionResult res = divmod(p, d);
    CHECK((res.quotient.trimmed() == poly("0,1", 1)));
    CHECK((res.remainder.trimmed() == poly("1,-1", 1)));
    CHECK((add(multiply(res.quotient, d), res.remainder).trimmed() == p.trimmed()));
    CHECK_THROWS_AS(divmod(p, Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("monic_gcd finds the common factor in monic form") {
    const Polynomial a = multiply(poly("1,1", 1), multiply(poly("1,1", 1), poly("2,1", 1)));
    const Polynomial b = multiply(poly("2,2", 1), poly("3,1", 1));  // 2(x+1)(x+3)
    CHECK((monic_gcd(a, b).trimmed() == poly("1,1", 1)));
    CHECK((monic_gcd(poly("4,2", 1), Polynomial::zero(1)).trimmed() == poly("2,1", 1)));
    CHECK_THROWS_AS(monic_gcd(Polynomial::zero(1), Polynomial::zero(1)),
                    std::invalid_argument);
}

TEST_CASE("reverse flips coefficients within the ambient degree") {
    const Polynomial p = poly("5,-9,3,1", 3);
    CHECK((reverse(p) == poly("1,3,-9,5", 3)));
    CHECK((reverse(reverse(p)) == p));
    CHECK((reverse(poly("0,0,1,0", 3)) == poly("0,1", 3)));
}

TEST_CASE("diagonal_of divides coefficients by the binomial row") {
    const Polynomial p = poly("5,-9,3,1", 3);  // (x-1)^2 (x+5)
    const DiagonalSequence d = diagonal_of(p);
    CHECK((d.entries() == parse_rational_list("5,-3,1,1")));
    CHECK((apply_diagonal(d, Polynomial::composition_identity(3)) == p));
}

TEST_CASE("apply_diagonal multiplies coefficientwise and checks ambient degrees") {
    const DiagonalSequence t(parse_rational_list("1,0,2"), 2);
    CHECK((apply_diagonal(t, poly("3,4,5", 2)) == poly("3,0,10", 2)));
    CHECK_THROWS_AS(apply_diagonal(t, poly("1,1", 1)), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalSequence(parse_rational_list("1,2"), 2), std::invalid_argument);
}

TEST_CASE("composition reproduces the worked product (x+1)^2(x+3) * (x+2)^3") {
    const Polynomial product = schur_szego(poly("3,7,5,1", 3), poly("8,12,6,1", 3));
    CHECK((product == poly("24,28,10,1", 3)));  // (x+6)(x+2)^2
}

TEST_CASE("composition has (1+x)^n as identity and is commutative and associative") {
    const Polynomial e = Polynomial::composition_identity(4);
    const Polynomial a = poly("1,-2,0,3,1", 4);
    const Polynomial b = poly("5,1/2,7,-1,2", 4);
    const Polynomial c = poly("0,4,-3,1,1", 4);
    CHECK((schur_szego(a, e) == a));
    CHECK((schur_szego(e, a) == a));
    CHECK((schur_szego(a, b) == schur_szego(b, a)));
    CHECK((schur_szego(schur_szego(a, b), c) == schur_szego(a, schur_szego(b, c))));
    CHECK((schur_szego(add(a, c), b) == add(schur_szego(a, b), schur_szego(c, b))));
    CHECK((schur_szego(Polynomial::zero(4), a) == Polynomial::zero(4)));
    CHECK_THROWS_AS(schur_szego(a, poly("1,1", 1)), std::invalid_argument);
}

TEST_CASE("composition value at -1 vanishes exactly at the distinguished parameter") {
    const Polynomial p = poly("-6,11,-6,1", 3);  // (x-1)(x-2)(x-3)
    // (x-1)(x-4)(x-17/23)
    const Polynomial q_special = poly("-68/23,177/23,-132/23,1", 3);
    const Polynomial product = schur_szego(p, q_special);
    CHECK((product == poly("408/23,649/23,264/23,1", 3)));
    CHECK(evaluate(product, q("-1")) == 0);

    // (x-1)(x-4)(x-1): same family at d=1 misses zero.
    const Polynomial q_other = poly("-4,9,-6,1", 3);
    CHECK(evaluate(schur_szego(p, q_other), q("-1")) == q("2"));
}

TEST_CASE("binomial rows are exact") {
    CHECK(binomial(17, 8) == BigInt(24310));
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    const auto& row = binomial_row(17);
    CHECK(row.size() == 18);
    CHECK(row[8] == BigInt(24310));
}
