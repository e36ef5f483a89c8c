#include "doctest.h"

#include <stdexcept>

#include "szego/fms.hpp"
#include "szego/polynomial.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"

using namespace szego;

namespace {

GammaSequence gamma(const char* entries) {
    return GammaSequence(parse_rational_list(entries));
}

}  // namespace

TEST_CASE("gamma sequences validate their length") {
    CHECK(gamma("1,2,1").k() == 2);
    CHECK_THROWS_AS(GammaSequence(parse_rational_list("1,2"), 2), std::invalid_argument);
    CHECK_THROWS_AS(GammaSequence(parse_rational_list("")), std::invalid_argument);
    CHECK((GammaSequence::identity(2) == gamma("1,1,1")));
}

TEST_CASE("the characteristic polynomial weights entries by binomials") {
    CHECK((fms_characteristic_poly(GammaSequence::identity(3)) ==
           Polynomial::composition_identity(3)));
    CHECK((fms_characteristic_poly(gamma("1,2,1")) ==
           Polynomial(parse_rational_list("1,4,1"), 2)));
}

TEST_CASE("identity sequences are multiplier sequences") {
    const FmsCertificate cert = classify_fms(GammaSequence::identity(4));
    CHECK(cert.verdict == FmsVerdict::fms);
    CHECK(cert.accepted());
    REQUIRE(cert.sign_class.has_value());
    CHECK(*cert.sign_class == FmsSignClass::all_negative);
    CHECK(cert.real_root_deficit == 0);
}

TEST_CASE("mixed characteristic root signs are rejected with counts") {
    // Characteristic polynomial 1 - x^2 has roots -1 and +1.
    const FmsCertificate cert = classify_fms(gamma("1,0,-1"));
    CHECK(cert.verdict == FmsVerdict::not_fms);
    REQUIRE(cert.violation.has_value());
    CHECK(*cert.violation == FmsViolation::mixed_signs);
    REQUIRE(cert.root_signs.has_value());
    CHECK(cert.root_signs->negative == 1);
    CHECK(cert.root_signs->zero == 0);
    CHECK(cert.root_signs->positive == 1);
    CHECK(cert.real_root_deficit == 0);
}

TEST_CASE("non-real characteristic roots are rejected with the deficit") {
    // Characteristic polynomial 1 + x^3.
    const FmsCertificate cert = classify_fms(gamma("1,0,0,1"));
    CHECK(cert.verdict == FmsVerdict::not_fms);
    REQUIRE(cert.violation.has_value());
    CHECK(*cert.violation == FmsViolation::non_real_roots);
    CHECK(cert.real_root_deficit == 2);
    CHECK_FALSE(cert.root_signs.has_value());

    // Characteristic polynomial 1 + 2x + 3x^2 has negative discriminant.
    CHECK_FALSE(is_fms(gamma("1,1,3")));
}

TEST_CASE("pure powers of x report the only-zero-roots class") {
    const FmsCertificate cert = classify_fms(gamma("0,0,1"));
    CHECK(cert.accepted());
    REQUIRE(cert.sign_class.has_value());
    CHECK(*cert.sign_class == FmsSignClass::only_zero_roots);

    const FmsCertificate middle = classify_fms(gamma("0,1,0"));
    CHECK(middle.accepted());
    CHECK(*middle.sign_class == FmsSignClass::only_zero_roots);
}

TEST_CASE("all-zero sequences are degenerate, not classified") {
    const FmsCertificate cert = classify_fms(gamma("0,0,0"));
    CHECK(cert.verdict == FmsVerdict::degenerate);
    CHECK_FALSE(cert.accepted());
    CHECK_FALSE(cert.sign_class.has_value());
    CHECK_FALSE(cert.violation.has_value());
}

TEST_CASE("negating a sequence preserves its classification") {
    CHECK(classify_fms(gamma("-1,-2,-1")).verdict == FmsVerdict::fms);
    CHECK(classify_fms(gamma("-1,0,1")).verdict == FmsVerdict::not_fms);
}

TEST_CASE("positive characteristic roots classify as all-positive") {
    // Characteristic polynomial 1 - 2x + x^2 = (x-1)^2.
    const FmsCertificate cert = classify_fms(gamma("1,-1,1"));
    CHECK(cert.accepted());
    CHECK(*cert.sign_class == FmsSignClass::all_positive);
}

TEST_CASE("apply_sequence scales coefficients and may drop degree") {
    const GammaSequence g = gamma("1,1,0");
    CHECK(classify_fms(g).accepted());
    const Polynomial square = Polynomial(parse_rational_list("1,2,1"), 2);
    const Polynomial image = apply_sequence(g, square);
    CHECK((image == Polynomial(parse_rational_list("1,2"), 2)));
    CHECK(image.effective_degree() == 1);
    CHECK(is_hyperbolic(image));
    CHECK_THROWS_AS(apply_sequence(g, Polynomial(parse_rational_list("1,1"), 1)),
                    std::invalid_argument);
}

TEST_CASE("rejected sequences admit hyperbolic inputs with non-real images") {
    const GammaSequence g = gamma("1,0,0,1");
    const auto witness = find_non_fms_witness(g, 42, 200);
    REQUIRE(witness.has_value());
    CHECK(is_hyperbolic(witness->input));
    CHECK((witness->output == apply_sequence(g, witness->input)));
    CHECK_FALSE(is_hyperbolic(witness->output));
    CHECK(witness->real_root_deficit > 0);

    // Deterministic for a fixed seed.
    const auto again = find_non_fms_witness(g, 42, 200);
    REQUIRE(again.has_value());
    CHECK((again->input == witness->input));
}

TEST_CASE("witness search never fabricates one for accepted sequences") {
    CHECK_FALSE(find_non_fms_witness(gamma("1,2,1"), 7, 100).has_value());
}

TEST_CASE("accepted sequences preserve hyperbolicity on frozen inputs") {
    const GammaSequence g = gamma("1,2,1");
    const Polynomial inputs[] = {
        Polynomial::from_roots({parse_rational("-3"), parse_rational("1/2")}, 2),
        Polynomial::from_roots({parse_rational("0"), parse_rational("0")}, 2),
        Polynomial::from_roots({parse_rational("-5"), parse_rational("7")}, 2),
    };
    for (const Polynomial& p : inputs) CHECK(is_hyperbolic(apply_sequence(g, p)));
}
