#include "szego/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "szego/error.hpp"

namespace szego {

namespace {

void require_same_n(const MultiplicityVector& q, int n, const char* what) {
    if (q.n() != n) {
        std::ostringstream msg;
        msg << what << ": operands partition different totals (" << n << " vs " << q.n()
            << ")";
        throw std::invalid_argument(msg.str());
    }
}

std::vector<int> prefix_sums(const std::vector<int>& parts) {
    std::vector<int> pre(parts.size());
    int acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        pre[i] = acc;
        acc += parts[i];
    }
    return pre;
}

// Occupancy grid over positions 1..n. Placing a block claims its position
// range; any collision or out-of-range placement is an implementation bug
// (the product's block structure is unique), so it aborts loudly.
class Occupancy {
public:
    explicit Occupancy(int n) : taken_(static_cast<size_t>(n), false), n_(n) {}

    void place(const PlacementBlock& block, const char* what) {
        const int first = block.left_count + 1;
        const int last = block.left_count + block.multiplicity;
        if (first < 1 || last > n_) {
            std::ostringstream msg;
            msg << what << ": block of multiplicity " << block.multiplicity
                << " at positions [" << first << ", " << last << "] escapes [1, " << n_
                << "] (pair " << block.source.p_index + 1 << ", "
                << block.source.q_index + 1 << ")";
            throw invariant_violation(msg.str());
        }
        for (int pos = first; pos <= last; ++pos) {
            if (taken_[static_cast<size_t>(pos - 1)]) {
                std::ostringstream msg;
                msg << what << ": block at positions [" << first << ", " << last
                    << "] overlaps an earlier block at position " << pos << " (pair "
                    << block.source.p_index + 1 << ", " << block.source.q_index + 1
                    << ")";
                throw invariant_violation(msg.str());
            }
            taken_[static_cast<size_t>(pos - 1)] = true;
        }
    }

    // Parts read left-to-right over [first, last]: placed blocks keep their
    // multiplicity, every free position becomes a simple part.
    std::vector<int> read_region(int first, int last,
                                 const std::vector<PlacementBlock>& blocks) const {
        std::vector<int> starts(static_cast<size_t>(n_) + 1, 0);
        for (const PlacementBlock& b : blocks) {
            starts[static_cast<size_t>(b.left_count + 1)] = b.multiplicity;
        }
        std::vector<int> parts;
        for (int pos = first; pos <= last;) {
            if (taken_[static_cast<size_t>(pos - 1)]) {
                parts.push_back(starts[static_cast<size_t>(pos)]);
                pos += starts[static_cast<size_t>(pos)];
            } else {
                parts.push_back(1);
                ++pos;
            }
        }
        return parts;
    }

private:
    std::vector<bool> taken_;
    int n_;
};

}  // namespace

MultiplicityVector validate_partition(const std::vector<int>& parts, int n) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            std::ostringstream msg;
            msg << "partition of " << n << ": part " << i + 1 << " is " << parts[i]
                << ", must be positive";
            throw std::invalid_argument(msg.str());
        }
    }
    const int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != n) {
        std::ostringstream msg;
        msg << "partition of " << n << ": parts sum to " << sum;
        throw std::invalid_argument(msg.str());
    }
    return MultiplicityVector(parts);
}

MultiplicityVector identity_partition(int n) {
    if (n < 1) {
        std::ostringstream msg;
        msg << "identity_partition: n must be at least 1, got " << n;
        throw std::invalid_argument(msg.str());
    }
    return MultiplicityVector({n});
}

ABLabeling enumerate_a_pairs(const MultiplicityVector& p, const MultiplicityVector& q) {
    require_same_n(q, p.n(), "enumerate_a_pairs");
    const int n = p.n();
    ABLabeling out;
    out.p_part_is_a.assign(p.size(), false);
    out.q_part_is_a.assign(q.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        for (size_t j = 0; j < q.size(); ++j) {
            const int excess = p.part(i) + q.part(j) - n;
            if (excess > 0) {
                out.pairs.push_back(APair{i, j, excess});
                out.p_part_is_a[i] = true;
                out.q_part_is_a[j] = true;
            }
        }
    }
    return out;
}

PlacementPlan placement_plan(const MultiplicityVector& p, const MultiplicityVector& q) {
    const ABLabeling labeling = enumerate_a_pairs(p, q);
    const std::vector<int> lp = prefix_sums(p.parts());
    const std::vector<int> lq = prefix_sums(q.parts());
    PlacementPlan plan;
    plan.n = p.n();
    for (const APair& pair : labeling.pairs) {
        plan.blocks.push_back(
            PlacementBlock{lp[pair.p_index] + lq[pair.q_index], pair.multiplicity, pair});
    }
    return plan;
}

MultiplicityVector compose_partitions(const MultiplicityVector& p,
                                      const MultiplicityVector& q) {
    const PlacementPlan plan = placement_plan(p, q);
    Occupancy grid(plan.n);
    for (const PlacementBlock& b : plan.blocks) {
        grid.place(b, "compose_partitions");
    }
    return MultiplicityVector(grid.read_region(1, plan.n, plan.blocks));
}

SignedMultiplicityVector compose_signed(const SignedMultiplicityVector& p,
                                        const MultiplicityVector& q) {
    const int n = p.n();
    require_same_n(q, n, "compose_signed");
    const SignSignature sig = p.signature();
    const std::vector<int> pre_neg = prefix_sums(p.negative_parts());
    const std::vector<int> pre_pos = prefix_sums(p.positive_parts());
    const std::vector<int> lq = prefix_sums(q.parts());

    std::vector<PlacementBlock> blocks;
    Occupancy grid(n);
    const auto place = [&](int left, int mult, size_t pi, size_t qi, int region_lo,
                           int region_hi, const char* side) {
        PlacementBlock block{left, mult, APair{pi, qi, mult}};
        if (left + 1 < region_lo || left + mult > region_hi) {
            std::ostringstream msg;
            msg << "compose_signed: " << side << " block at positions [" << left + 1
                << ", " << left + mult << "] leaves its sign region [" << region_lo
                << ", " << region_hi << "]";
            throw invariant_violation(msg.str());
        }
        grid.place(block, "compose_signed");
        blocks.push_back(block);
    };

    // Products of two negatives are positive; negating them keeps the order
    // of the negative factors of p, so the q-side count is of roots to the
    // left. Products of a positive and a negative flip under negation, so
    // the q-side count is of roots to the right.
    for (size_t i = 0; i < p.negative_parts().size(); ++i) {
        const int m = p.negative_parts()[i];
        for (size_t j = 0; j < q.size(); ++j) {
            const int excess = m + q.part(j) - n;
            if (excess <= 0) continue;
            place(pre_neg[i] + lq[j], excess, i, j, 1, sig.negative, "negative-side");
        }
    }
    if (sig.zero > 0) {
        // A zero root of p always transfers to the product with its
        // multiplicity: the product's support starts at the same power.
        PlacementBlock zero_block{sig.negative, sig.zero, APair{0, 0, sig.zero}};
        grid.place(zero_block, "compose_signed");
        blocks.push_back(zero_block);
    }
    for (size_t i = 0; i < p.positive_parts().size(); ++i) {
        const int m = p.positive_parts()[i];
        const int left_of_part = sig.negative + sig.zero + pre_pos[i];
        for (size_t j = 0; j < q.size(); ++j) {
            const int excess = m + q.part(j) - n;
            if (excess <= 0) continue;
            const int q_right = n - lq[j] - q.part(j);
            place(left_of_part + q_right, excess, i, j, sig.negative + sig.zero + 1, n,
                  "positive-side");
        }
    }

    std::vector<int> neg_parts =
        sig.negative > 0 ? grid.read_region(1, sig.negative, blocks) : std::vector<int>{};
    std::vector<int> pos_parts =
        sig.positive > 0
            ? grid.read_region(sig.negative + sig.zero + 1, n, blocks)
            : std::vector<int>{};
    return SignedMultiplicityVector(std::move(neg_parts), sig.zero, std::move(pos_parts));
}

}  // namespace szego
