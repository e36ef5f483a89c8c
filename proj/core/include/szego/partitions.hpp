#pragma once

#include <cstddef>
#include <vector>

#include "szego/multiplicity.hpp"

namespace szego {

// Checks that parts form an ordered partition of n (all positive, summing
// to n) and wraps them. Errors name the offending part or the bad sum.
MultiplicityVector validate_partition(const std::vector<int>& parts, int n);

// The single-part partition (n): the multiplicity vector of (1+x)^n and the
// identity of the composition. Requires n >= 1.
MultiplicityVector identity_partition(int n);

// A pair of parts whose multiplicities exceed n together; the product root
// they induce carries the excess as its multiplicity.
struct APair {
    size_t p_index;
    size_t q_index;
    int multiplicity;  // p[p_index] + q[q_index] - n, always > 0

    bool operator==(const APair&) const = default;
};

// Complete A/B labeling of two operand partitions: every qualifying pair,
// plus per-part flags (a part is A-labeled iff it occurs in some pair).
struct ABLabeling {
    std::vector<APair> pairs;
    std::vector<bool> p_part_is_a;
    std::vector<bool> q_part_is_a;
};

ABLabeling enumerate_a_pairs(const MultiplicityVector& p, const MultiplicityVector& q);

// One placed block of the product's multiplicity vector: the block occupies
// positions left_count+1 .. left_count+multiplicity among the n roots in
// increasing order.
struct PlacementBlock {
    int left_count;
    int multiplicity;
    APair source;
};

struct PlacementPlan {
    int n = 0;
    std::vector<PlacementBlock> blocks;
};

// Blocks induced by the A-pairs of two all-negative operands: each pair
// (i, j) lands at left_count = (roots of p left of part i) + (roots of q
// left of part j), both counted with multiplicity.
PlacementPlan placement_plan(const MultiplicityVector& p, const MultiplicityVector& q);

// The semigroup operation on ordered partitions of n (both operands read as
// all-negative root multiplicities): place every A-block, then fill each
// free position with a simple part. Blocks never overlap for valid input;
// an overlap aborts with invariant_violation, not a recoverable error.
MultiplicityVector compose_partitions(const MultiplicityVector& p,
                                      const MultiplicityVector& q);

// The signed refinement: p may have roots of both signs and a zero root,
// q is still read as all-negative. The result keeps p's sign signature;
// the zero block carries over with its multiplicity unchanged. A-blocks
// from p's negative parts land inside the negative region at
// left = (p-roots left of the part) + (q-roots left of the paired part);
// blocks from positive parts land inside the positive region at
// left = (p-roots left of the part) + (q-roots RIGHT of the paired part),
// because negating flips the order of products with a positive factor.
SignedMultiplicityVector compose_signed(const SignedMultiplicityVector& p,
                                        const MultiplicityVector& q);

}  // namespace szego
