#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "szego/multiplicity.hpp"
#include "szego/polynomial.hpp"

namespace szego::verify {

// Bounds for sampled root values num/den. Numerators grow with the ambient
// degree so larger instances keep enough distinct values available while
// exact-arithmetic cost stays bounded.
struct HeightSchedule {
    int numerator_base = 8;
    int numerator_growth = 4;
    int denominator_bound = 4;

    int numerator_bound(int n) const { return numerator_base + numerator_growth * n; }
};

// A reproducible instance request: shapes for both operands plus the seed
// that realizes them. Q is always realized with all-negative roots.
struct InstanceSpec {
    int n;
    SignedMultiplicityVector p_shape;
    MultiplicityVector q_shape;
    HeightSchedule heights;
    std::uint64_t seed;
};

// Concrete polynomials realizing an InstanceSpec. Root lists hold the
// distinct roots in increasing order, aligned with the shape's parts.
struct RealizedInstance {
    InstanceSpec spec;
    Polynomial p;
    Polynomial q;
    std::vector<Rational> p_roots;
    std::vector<Rational> q_roots;
};

// Deterministic for a fixed spec. Distinct roots are drawn per sign class;
// colliding draws are rejected and redrawn. Pairwise products over A-pairs
// are checked distinct (they always are; the guard is defensive).
RealizedInstance realize(const InstanceSpec& spec);

struct VerificationReport {
    std::string property;
    int trials = 0;
    int failures = 0;
    std::string first_counterexample;  // empty when all checks passed
    double elapsed_seconds = 0.0;

    bool passed() const { return failures == 0; }
};

// Accumulate part into total (same property): sums counts, keeps the first
// counterexample.
void merge_report(VerificationReport& total, const VerificationReport& part);

// The multiplicity law: every pair of nonzero roots with combined
// multiplicity m_P + m_Q >= n leaves the product root -x_P*x_Q in P*Q with
// multiplicity exactly m_P + m_Q - n (a non-root when that is 0), verified
// by exact division. A zero root of P transfers its own multiplicity
// instead, which is checked through the product's order at zero.
VerificationReport check_mult_prop(const RealizedInstance& inst);

// The root enclosure: P*Q is hyperbolic and all its roots lie in [-M, -m]
// for M/m the extreme pairwise root products. Exterior counts are exact:
// a root exactly at an endpoint is not a violation. flip_q_positive tests
// the all-positive mirror of Q instead of the realized all-negative one.
VerificationReport check_root_bound(const RealizedInstance& inst, bool flip_q_positive);

// Sign-signature preservation: sign_signature(P*Q) == sign_signature(P).
VerificationReport check_signature(const RealizedInstance& inst);

// The multiplicity-vector composition law: the signed multiplicity vector
// of P*Q equals the combinatorial prediction from the operand shapes, every
// product root carries exactly its predicted multiplicity, and every other
// root is simple. Also round-trips the realized shapes through the root
// analyzer.
VerificationReport check_theorem_mv(const RealizedInstance& inst);

// The alternating binomial identity relating the derivative data of
// reverse(P) and Q at 1 to (P*Q)(-1). Holds for ALL same-degree rational
// polynomials, hyperbolic or not.
VerificationReport check_star_identity(const Polynomial& p, const Polynomial& q);

struct SuiteConfig {
    std::vector<std::string> properties;  // empty selects every known property
    int n_min = 2;
    int n_max = 12;
    int trials = 200;
    std::uint64_t seed = 42;
    HeightSchedule heights;
};

// Canonical property order for empty SuiteConfig::properties.
const std::vector<std::string>& all_property_names();

// Stable numeric id of a property name, used in seed derivation so adding
// properties never reshuffles the instance streams of existing ones.
// Unknown names throw std::invalid_argument.
std::uint64_t property_id(const std::string& name);

// Deterministic per-trial seed for the (property, n, trial) cell.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t property, std::uint64_t n,
                       std::uint64_t trial);

// One report per selected property, deterministic for a fixed config.
// Unknown property names throw std::invalid_argument.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

// --- sampling primitives ------------------------------------------------------
// Exposed so exhaustive drivers and the acceptance harness can reproduce the
// exact instance stream of a suite property.

// Uniform over the 2^(n-1) ordered partitions of n (independent cut bits).
MultiplicityVector sample_ordered_partition(std::mt19937_64& rng, int n);

// Signature (u, v, w) uniform over u, then v on the remainder; parts of the
// negative and positive blocks are ordered partitions of u and w.
SignedMultiplicityVector sample_signed_shape(std::mt19937_64& rng, int n);

// A full instance request for one trial: shapes plus a derived realization
// seed, all drawn from rng.
InstanceSpec sample_instance_spec(std::mt19937_64& rng, int n, const HeightSchedule& heights);

// --- exhaustive small-n helpers ----------------------------------------------

// All 2^(n-1) ordered partitions of n >= 1 in lexicographic order.
std::vector<MultiplicityVector> all_ordered_partitions(int n);

// Semigroup laws checked exhaustively: identity and commutativity over all
// pairs, associativity over all triples of ordered partitions of n.
VerificationReport exhaustive_semigroup(int n);

// Semigroup laws on sampled triples with n drawn from [n_min, n_max].
VerificationReport sampled_semigroup(int n_min, int n_max, int triples,
                                     std::uint64_t seed);

// Sign-signature preservation over every (u, v, w) with u+v+w == n, one
// realization per signature.
VerificationReport exhaustive_signature_grid(int n, std::uint64_t seed,
                                             const HeightSchedule& heights);

// The unsigned oracle over every ordered-partition pair of n: realized
// composition versus the combinatorial composition.
VerificationReport exhaustive_partition_oracle(int n, std::uint64_t seed,
                                               const HeightSchedule& heights);

}  // namespace szego::verify
