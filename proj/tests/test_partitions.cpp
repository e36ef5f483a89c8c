#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "szego/partitions.hpp"
#include "szego/polynomial.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"

using namespace szego;

namespace {

Rational q(const char* text) { return parse_rational(text); }

MultiplicityVector mv(const char* parts, int n) { return parse_multiplicity_vector(parts, n); }

}  // namespace

TEST_CASE("validate_partition accepts ordered partitions and names violations") {
    CHECK((validate_partition({2, 14, 1}, 17).parts() == std::vector<int>{2, 14, 1}));
    CHECK_THROWS_AS(validate_partition({2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_partition({3, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_partition({4, -1}, 3), std::invalid_argument);
}

TEST_CASE("identity_partition is the single part (n)") {
    CHECK((identity_partition(5) == MultiplicityVector({5})));
    CHECK_THROWS_AS(identity_partition(0), std::invalid_argument);
}

TEST_CASE("the empty vector is the partition of zero") {
    const MultiplicityVector empty{std::vector<int>{}};
    CHECK(empty.n() == 0);
    CHECK(empty.size() == 0);
}

TEST_CASE("enumerate_a_pairs lists exactly the overweight part pairs") {
    const ABLabeling lab = enumerate_a_pairs(mv("2,14,1", 17), mv("5,6,6", 17));
    REQUIRE(lab.pairs.size() == 3);
    CHECK((lab.pairs[0] == APair{1, 0, 2}));
    CHECK((lab.pairs[1] == APair{1, 1, 3}));
    CHECK((lab.pairs[2] == APair{1, 2, 3}));
    CHECK((lab.p_part_is_a == std::vector<bool>{false, true, false}));
    CHECK((lab.q_part_is_a == std::vector<bool>{true, true, true}));
}

TEST_CASE("pairs require strictly more than n combined multiplicity") {
    const ABLabeling none = enumerate_a_pairs(mv("1,1", 2), mv("1,1", 2));
    CHECK(none.pairs.empty());
    CHECK((none.p_part_is_a == std::vector<bool>{false, false}));

    const ABLabeling full = enumerate_a_pairs(mv("4", 4), mv("4", 4));
    REQUIRE(full.pairs.size() == 1);
    CHECK((full.pairs[0] == APair{0, 0, 4}));
}

TEST_CASE("placement_plan positions blocks by left root counts") {
    const PlacementPlan plan = placement_plan(mv("2,14,1", 17), mv("5,6,6", 17));
    CHECK(plan.n == 17);
    REQUIRE(plan.blocks.size() == 3);
    CHECK(plan.blocks[0].left_count == 2);
    CHECK(plan.blocks[0].multiplicity == 2);
    CHECK(plan.blocks[1].left_count == 7);
    CHECK(plan.blocks[1].multiplicity == 3);
    CHECK(plan.blocks[2].left_count == 13);
    CHECK(plan.blocks[2].multiplicity == 3);
}

TEST_CASE("compose_partitions reproduces the frozen n=17 products") {
    CHECK((compose_partitions(mv("2,14,1", 17), mv("5,6,6", 17)) ==
           mv("1,1,2,1,1,1,3,1,1,1,3,1", 17)));
    CHECK((compose_partitions(mv("1,14,2", 17), mv("5,6,4,2", 17)) ==
           mv("1,2,1,1,1,3,1,1,1,1,1,1,1,1", 17)));
}

TEST_CASE("compose_partitions on small frozen cases") {
    CHECK((compose_partitions(mv("2,1", 3), mv("2,1", 3)) == mv("1,1,1", 3)));
    CHECK((compose_partitions(mv("3", 3), mv("3", 3)) == mv("3", 3)));
    CHECK((compose_partitions(mv("3", 3), mv("1,1,1", 3)) == mv("1,1,1", 3)));
}

TEST_CASE("compose_partitions has identity, commutativity, and associativity") {
    const MultiplicityVector e = identity_partition(17);
    const MultiplicityVector a = mv("2,14,1", 17);
    const MultiplicityVector b = mv("5,6,6", 17);
    const MultiplicityVector c = mv("9,8", 17);
    CHECK((compose_partitions(a, e) == a));
    CHECK((compose_partitions(e, a) == a));
    CHECK((compose_partitions(a, b) == compose_partitions(b, a)));
    CHECK((compose_partitions(compose_partitions(a, b), c) ==
           compose_partitions(a, compose_partitions(b, c))));
    CHECK_THROWS_AS(compose_partitions(a, mv("2,1", 3)), std::invalid_argument);
}

TEST_CASE("compose_signed keeps the operand signature and the zero block") {
    // (x-1)^2 (x+5): one negative root, two coincident positive roots.
    const SignedMultiplicityVector p({1}, 0, {2});
    const SignedMultiplicityVector out = compose_signed(p, mv("3", 3));
    CHECK((out == p));

    const SignedMultiplicityVector with_zero({1}, 2, {});
    CHECK((compose_signed(with_zero, mv("3", 3)) == with_zero));
}

TEST_CASE("positive-part blocks place by right root counts of the paired part") {
    // P = (x-1)(x-2)^2, Q = (x+1)(x+2)^2: the only overweight pair is the
    // double root 2 of P against the double root -2 of Q, and their product
    // root 4 must land at the top position.
    const SignedMultiplicityVector p_shape({}, 0, {1, 2});
    const SignedMultiplicityVector predicted = compose_signed(p_shape, mv("2,1", 3));
    CHECK((predicted == SignedMultiplicityVector({}, 0, {1, 1, 1})));

    const Polynomial p = Polynomial::from_roots({q("1"), q("2"), q("2")}, 3);
    const Polynomial qq = Polynomial::from_roots({q("-2"), q("-2"), q("-1")}, 3);
    const Polynomial product = schur_szego(p, qq);
    CHECK((product == Polynomial(parse_rational_list("-16,64/3,-25/3,1"), 3)));
    CHECK(evaluate(product, q("4/3")) == 0);
    CHECK(evaluate(product, q("3")) == 0);
    CHECK(evaluate(product, q("4")) == 0);
    CHECK((signed_multiplicity_vector(product) == predicted));
}

TEST_CASE("compose_signed agrees with compose_partitions on all-negative operands") {
    const MultiplicityVector a = mv("2,3,1", 6);
    const MultiplicityVector b = mv("4,2", 6);
    const SignedMultiplicityVector signed_out =
        compose_signed(SignedMultiplicityVector(a.parts(), 0, {}), b);
    CHECK((signed_out.negative_parts() == compose_partitions(a, b).parts()));
    CHECK(signed_out.zero_multiplicity() == 0);
    CHECK(signed_out.positive_parts().empty());
}

TEST_CASE("compose_signed rejects mismatched degrees") {
    CHECK_THROWS_AS(compose_signed(SignedMultiplicityVector({2}, 0, {}), mv("3", 3)),
                    std::invalid_argument);
}

TEST_CASE("signed vectors flatten in root order") {
    const SignedMultiplicityVector smv({2, 1}, 2, {1, 1});
    CHECK(smv.n() == 7);
    CHECK((smv.flatten() == MultiplicityVector({2, 1, 2, 1, 1})));
    CHECK((smv.signature() == SignSignature{3, 2, 2}));
    CHECK_THROWS_AS(SignedMultiplicityVector({0}, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMultiplicityVector({}, -1, {}), std::invalid_argument);
}
