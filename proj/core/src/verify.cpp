#include "szego/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "szego/binomial.hpp"
#include "szego/error.hpp"
#include "szego/fms.hpp"
#include "szego/partitions.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"

namespace szego::verify {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kStarIdentity = "star-identity";
constexpr const char* kARootMultiplicity = "a-root-multiplicity";
constexpr const char* kRootBound = "root-bound";
constexpr const char* kSignaturePreservation = "signature-preservation";
constexpr const char* kMvComposition = "mv-composition";
constexpr const char* kPartitionOracle = "partition-oracle";
constexpr const char* kSemigroupLaws = "semigroup-laws";
constexpr const char* kFmsPreservation = "fms-preservation";

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t splitmix_round(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform integer on [lo, hi] via rejection, so the draw is exactly uniform
// and depends only on the mt19937_64 stream.
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(static_cast<long long>(hi) - lo + 1);
    const std::uint64_t limit = span * (std::numeric_limits<std::uint64_t>::max() / span);
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return lo + static_cast<int>(draw % span);
}

// `count` distinct positive rationals num/den within the height bounds,
// ascending. Redraws on collision.
std::vector<Rational> draw_distinct(std::mt19937_64& rng, size_t count, int num_bound,
                                    int den_bound) {
    std::set<Rational> values;
    long attempts = 0;
    while (values.size() < count) {
        if (++attempts > 4096 + 512 * static_cast<long>(count))
            throw invariant_violation(
                "root sampling stalled: height schedule leaves too few distinct values");
        const int num = uniform_int(rng, 1, num_bound);
        const int den = uniform_int(rng, 1, den_bound);
        values.insert(make_rational(BigInt(num), BigInt(den)));
    }
    return {values.begin(), values.end()};
}

struct SignedDraw {
    std::vector<Rational> roots;  // distinct, increasing, aligned with flatten()
    Polynomial poly;
};

// Roots matching a signed shape: negative magnitudes descending give the
// negative roots ascending, then 0 when requested, then positive magnitudes
// ascending.
SignedDraw draw_signed(std::mt19937_64& rng, const SignedMultiplicityVector& shape, int n,
                       const HeightSchedule& heights) {
    if (shape.n() != n)
        throw std::invalid_argument("draw_signed: shape does not partition n");
    const int num_bound = heights.numerator_bound(n);
    const auto neg = draw_distinct(rng, shape.negative_parts().size(), num_bound,
                                   heights.denominator_bound);
    const auto pos = draw_distinct(rng, shape.positive_parts().size(), num_bound,
                                   heights.denominator_bound);

    std::vector<Rational> roots;
    roots.reserve(neg.size() + pos.size() + 1);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) roots.push_back(-*it);
    if (shape.zero_multiplicity() > 0) roots.emplace_back(0);
    roots.insert(roots.end(), pos.begin(), pos.end());

    const MultiplicityVector flat = shape.flatten();
    std::vector<Rational> multiset;
    multiset.reserve(static_cast<size_t>(n));
    for (size_t f = 0; f < flat.size(); ++f)
        multiset.insert(multiset.end(), static_cast<size_t>(flat.part(f)), roots[f]);

    return SignedDraw{std::move(roots), Polynomial::from_roots(multiset, n)};
}

// Distinctness of -x_P*x_Q over pairs with combined multiplicity above n.
// Pairs through a zero root of P are excluded: the zero root transfers with
// its own multiplicity and never competes for a product location.
bool a_products_distinct(const MultiplicityVector& flat, const std::vector<int>& q_parts,
                         const std::vector<Rational>& p_roots,
                         const std::vector<Rational>& q_roots, int n) {
    std::set<Rational> seen;
    for (size_t i = 0; i < flat.size(); ++i) {
        if (p_roots[i] == 0) continue;
        for (size_t j = 0; j < q_parts.size(); ++j) {
            if (flat.part(i) + q_parts[j] <= n) continue;
            if (!seen.insert(-p_roots[i] * q_roots[j]).second) return false;
        }
    }
    return true;
}

std::string describe_instance(const RealizedInstance& inst) {
    std::ostringstream out;
    out << "n=" << inst.spec.n << " seed=" << inst.spec.seed
        << " P_shape=" << format_signed_multiplicity_vector(inst.spec.p_shape)
        << " Q_shape=" << format_multiplicity_vector(inst.spec.q_shape)
        << " P=[" << format_coefficients(inst.p) << "]"
        << " Q=[" << format_coefficients(inst.q) << "]";
    return out.str();
}

VerificationReport single_check(const char* property, std::string failure,
                                Clock::time_point start) {
    const int failed = failure.empty() ? 0 : 1;
    return VerificationReport{property, 1, failed, std::move(failure), seconds_since(start)};
}

}  // namespace

RealizedInstance realize(const InstanceSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("realize: degree must be at least 1");
    if (spec.p_shape.n() != spec.n)
        throw std::invalid_argument("realize: P shape does not partition n");
    if (spec.q_shape.n() != spec.n)
        throw std::invalid_argument("realize: Q shape does not partition n");
    if (spec.heights.numerator_bound(spec.n) < spec.n || spec.heights.denominator_bound < 1)
        throw std::invalid_argument("realize: height schedule cannot supply n distinct roots");

    std::mt19937_64 rng(spec.seed);
    const SignedMultiplicityVector q_signed(spec.q_shape.parts(), 0, {});
    const MultiplicityVector flat = spec.p_shape.flatten();

    for (int attempt = 0; attempt < 64; ++attempt) {
        SignedDraw pd = draw_signed(rng, spec.p_shape, spec.n, spec.heights);
        SignedDraw qd = draw_signed(rng, q_signed, spec.n, spec.heights);
        if (!a_products_distinct(flat, spec.q_shape.parts(), pd.roots, qd.roots, spec.n))
            continue;
        return RealizedInstance{spec, std::move(pd.poly), std::move(qd.poly),
                                std::move(pd.roots), std::move(qd.roots)};
    }
    throw invariant_violation("realize: pairwise product collisions persisted through 64 resamples");
}

void merge_report(VerificationReport& total, const VerificationReport& part) {
    if (total.property.empty()) total.property = part.property;
    total.trials += part.trials;
    total.failures += part.failures;
    if (total.first_counterexample.empty())
        total.first_counterexample = part.first_counterexample;
    total.elapsed_seconds += part.elapsed_seconds;
}

VerificationReport check_mult_prop(const RealizedInstance& inst) {
    const auto start = Clock::now();
    const Polynomial product = schur_szego(inst.p, inst.q);
    const MultiplicityVector flat = inst.spec.p_shape.flatten();
    const auto& q_parts = inst.spec.q_shape.parts();
    const int n = inst.spec.n;

    std::string failure = [&]() -> std::string {
        for (size_t i = 0; i < flat.size(); ++i) {
            if (inst.p_roots[i] == 0) continue;
            for (size_t j = 0; j < q_parts.size(); ++j) {
                const int excess = flat.part(i) + q_parts[j] - n;
                if (excess < 0) continue;
                const Rational point = -inst.p_roots[i] * inst.q_roots[j];
                if (excess == 0) {
                    if (evaluate(product, point) == 0)
                        return describe_instance(inst) + " | product point " +
                               format_rational(point) +
                               " must not be a root when the multiplicities sum to exactly n";
                    continue;
                }
                const Polynomial factor = pow(Polynomial::from_roots({point}, 1), excess);
                const auto quotient = exact_divide(product, factor);
                if (!quotient)
                    return describe_instance(inst) + " | (x - (" + format_rational(point) +
                           "))^" + std::to_string(excess) + " does not divide the composition";
                if (evaluate(*quotient, point) == 0)
                    return describe_instance(inst) + " | product root " +
                           format_rational(point) + " exceeds its predicted multiplicity " +
                           std::to_string(excess);
            }
        }
        const int zero_mult = inst.spec.p_shape.zero_multiplicity();
        if (product.order_at_zero() != zero_mult)
            return describe_instance(inst) + " | order of 0 in the composition is " +
                   std::to_string(product.order_at_zero()) + ", expected " +
                   std::to_string(zero_mult);
        return std::string();
    }();
    return single_check(kARootMultiplicity, std::move(failure), start);
}

VerificationReport check_root_bound(const RealizedInstance& inst, bool flip_q_positive) {
    const auto start = Clock::now();
    const int n = inst.spec.n;

    std::vector<Rational> q_root_values = inst.q_roots;
    Polynomial q_use = inst.q;
    if (flip_q_positive) {
        for (auto& r : q_root_values) r = -r;
        std::reverse(q_root_values.begin(), q_root_values.end());
        std::vector<Rational> multiset;
        multiset.reserve(static_cast<size_t>(n));
        const auto& q_parts = inst.spec.q_shape.parts();
        for (size_t j = 0; j < q_parts.size(); ++j)
            multiset.insert(multiset.end(), static_cast<size_t>(q_parts[j]), -inst.q_roots[j]);
        q_use = Polynomial::from_roots(multiset, n);
    }
    const Polynomial product = schur_szego(inst.p, q_use);
    const std::string label =
        describe_instance(inst) + (flip_q_positive ? " [Q mirrored to all-positive]" : "");

    bool have = false;
    Rational largest, smallest;
    for (const auto& xp : inst.p_roots)
        for (const auto& yq : q_root_values) {
            const Rational prod = xp * yq;
            if (!have) {
                largest = prod;
                smallest = prod;
                have = true;
            } else if (prod > largest) {
                largest = prod;
            } else if (prod < smallest) {
                smallest = prod;
            }
        }

    std::string failure = [&]() -> std::string {
        try {
            const MultiplicityStructure structure = multiplicity_structure(product);
            if (structure.total_multiplicity() != n) {
                std::ostringstream out;
                out << label << " | composition carries " << structure.total_multiplicity()
                    << " real roots with multiplicity, expected " << n;
                return out.str();
            }
        } catch (const non_hyperbolic_error& err) {
            return label + " | composition lost hyperbolicity: " + err.what();
        }
        // Enclosure [-largest, -smallest]; a root exactly at an endpoint is inside.
        const Rational lo = -largest;
        const Rational hi = -smallest;
        int outside_left =
            count_distinct_real_roots(product, Endpoint::minus_infinity(), Endpoint::at(lo));
        if (evaluate(product, lo) == 0) --outside_left;
        const int outside_right =
            count_distinct_real_roots(product, Endpoint::at(hi), Endpoint::plus_infinity());
        if (outside_left != 0 || outside_right != 0) {
            std::ostringstream out;
            out << label << " | " << outside_left << " roots below " << format_rational(lo)
                << " and " << outside_right << " roots above " << format_rational(hi)
                << " escape the enclosure";
            return out.str();
        }
        return std::string();
    }();
    return single_check(kRootBound, std::move(failure), start);
}

VerificationReport check_signature(const RealizedInstance& inst) {
    const auto start = Clock::now();
    const Polynomial product = schur_szego(inst.p, inst.q);
    const SignSignature expected = inst.spec.p_shape.signature();

    std::string failure = [&]() -> std::string {
        try {
            const SignSignature actual = sign_signature(product);
            if (!(actual == expected))
                return describe_instance(inst) + " | composition signature " +
                       format_sign_signature(actual) + " differs from P's " +
                       format_sign_signature(expected);
        } catch (const non_hyperbolic_error& err) {
            return describe_instance(inst) + " | composition lost hyperbolicity: " + err.what();
        }
        return std::string();
    }();
    return single_check(kSignaturePreservation, std::move(failure), start);
}

VerificationReport check_theorem_mv(const RealizedInstance& inst) {
    const auto start = Clock::now();
    const MultiplicityVector flat = inst.spec.p_shape.flatten();
    const std::string label = describe_instance(inst);

    std::string failure = [&]() -> std::string {
        try {
            const SignedMultiplicityVector p_round = signed_multiplicity_vector(inst.p);
            if (!(p_round == inst.spec.p_shape))
                return label + " | realized P reads back as " +
                       format_signed_multiplicity_vector(p_round) + ", requested " +
                       format_signed_multiplicity_vector(inst.spec.p_shape);
            const MultiplicityVector q_round = multiplicity_vector(inst.q);
            if (!(q_round == inst.spec.q_shape))
                return label + " | realized Q reads back as " +
                       format_multiplicity_vector(q_round) + ", requested " +
                       format_multiplicity_vector(inst.spec.q_shape);

            const Polynomial product = schur_szego(inst.p, inst.q);
            const SignedMultiplicityVector predicted =
                compose_signed(inst.spec.p_shape, inst.spec.q_shape);
            const MultiplicityStructure structure = multiplicity_structure(product);
            const SignedMultiplicityVector actual = structure.signed_multiplicity_vector();
            if (!(actual == predicted))
                return label + " | composition realizes " +
                       format_signed_multiplicity_vector(actual) +
                       ", partition algebra predicts " +
                       format_signed_multiplicity_vector(predicted);

            // Value-level check: every paired product root sits at its exact
            // predicted value with its exact predicted multiplicity, the zero
            // root of P transfers unchanged, and everything else is simple.
            std::vector<int> expected_mult(structure.size(), 1);
            const ABLabeling labeling = enumerate_a_pairs(flat, inst.spec.q_shape);
            for (const APair& pair : labeling.pairs) {
                if (inst.p_roots[pair.p_index] == 0) continue;
                const Rational point =
                    -inst.p_roots[pair.p_index] * inst.q_roots[pair.q_index];
                bool found = false;
                for (size_t e = 0; e < structure.size(); ++e) {
                    if (!structure.entries()[e].location.contains(point)) continue;
                    if (expected_mult[e] != 1)
                        return label + " | two predicted product roots landed in one location";
                    expected_mult[e] = pair.multiplicity;
                    found = true;
                    break;
                }
                if (!found)
                    return label + " | predicted product root " + format_rational(point) +
                           " is not a root of the composition";
            }
            const int zero_mult = inst.spec.p_shape.zero_multiplicity();
            if (zero_mult > 0) {
                bool found = false;
                for (size_t e = 0; e < structure.size(); ++e) {
                    const auto exact = structure.entries()[e].exact_value();
                    if (exact && *exact == 0) {
                        expected_mult[e] = zero_mult;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    return label + " | zero root of P did not transfer to the composition";
            }
            for (size_t e = 0; e < structure.size(); ++e) {
                if (structure.entries()[e].multiplicity == expected_mult[e]) continue;
                std::ostringstream out;
                out << label << " | root at " << format_interval(structure.entries()[e].location)
                    << " has multiplicity " << structure.entries()[e].multiplicity
                    << ", predicted " << expected_mult[e];
                return out.str();
            }
        } catch (const non_hyperbolic_error& err) {
            return label + " | composition lost hyperbolicity: " + err.what();
        }
        return std::string();
    }();
    return single_check(kMvComposition, std::move(failure), start);
}

VerificationReport check_star_identity(const Polynomial& p, const Polynomial& q) {
    const auto start = Clock::now();
    if (p.ambient_degree() != q.ambient_degree())
        throw std::invalid_argument("check_star_identity: operands must share an ambient degree");
    const int n = p.ambient_degree();

    std::vector<BigInt> factorial(static_cast<size_t>(n) + 1);
    factorial[0] = 1;
    for (int s = 1; s <= n; ++s)
        factorial[static_cast<size_t>(s)] = factorial[static_cast<size_t>(s) - 1] * s;

    const Rational one(1);
    std::vector<Rational> g_at(static_cast<size_t>(n) + 1);
    std::vector<Rational> q_at(static_cast<size_t>(n) + 1);
    Polynomial gd = reverse(p);
    for (int j = 0; j <= n; ++j) {
        g_at[static_cast<size_t>(j)] = evaluate(gd, one);
        if (j < n) gd = derivative(gd);
    }
    Polynomial qd = q;
    for (int j = 0; j <= n; ++j) {
        q_at[static_cast<size_t>(j)] = evaluate(qd, one);
        if (j < n) qd = derivative(qd);
    }

    // K_s = (s!/n!) G^{(n-s)}(1) with G = reverse(P); L_r = (r!/n!) Q^{(n-r)}(1).
    std::vector<Rational> k_val(static_cast<size_t>(n) + 1);
    std::vector<Rational> l_val(static_cast<size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
        const Rational ratio =
            make_rational(factorial[static_cast<size_t>(s)], factorial[static_cast<size_t>(n)]);
        k_val[static_cast<size_t>(s)] = ratio * g_at[static_cast<size_t>(n - s)];
        l_val[static_cast<size_t>(s)] = ratio * q_at[static_cast<size_t>(n - s)];
    }

    const auto& binom = binomial_row(n);
    Rational lhs(0);
    for (int j = 0; j <= n; ++j) {
        Rational term = make_rational(binom[static_cast<size_t>(j)], BigInt(1)) *
                        k_val[static_cast<size_t>(j)] * l_val[static_cast<size_t>(n - j)];
        if (j % 2 != 0) term = -term;
        lhs += term;
    }
    const Rational rhs = evaluate(schur_szego(p, q), Rational(-1));

    std::string failure;
    if (lhs != rhs) {
        std::ostringstream out;
        out << "n=" << n << " P=[" << format_coefficients(p) << "] Q=["
            << format_coefficients(q) << "] alternating sum " << format_rational(lhs)
            << " != (P*Q)(-1) = " << format_rational(rhs);
        failure = out.str();
    }
    return single_check(kStarIdentity, std::move(failure), start);
}

namespace {

// All-negative oracle: the realized composition's multiplicity vector against
// the partition algebra.
VerificationReport check_partition_oracle(const RealizedInstance& inst) {
    const auto start = Clock::now();
    if (inst.spec.p_shape.zero_multiplicity() != 0 ||
        !inst.spec.p_shape.positive_parts().empty())
        throw std::invalid_argument("check_partition_oracle: P must be all-negative");
    const MultiplicityVector p_mv = inst.spec.p_shape.flatten();

    std::string failure = [&]() -> std::string {
        try {
            const Polynomial product = schur_szego(inst.p, inst.q);
            const MultiplicityVector predicted = compose_partitions(p_mv, inst.spec.q_shape);
            const MultiplicityVector actual = multiplicity_vector(product);
            if (!(actual == predicted))
                return describe_instance(inst) + " | composition realizes " +
                       format_multiplicity_vector(actual) + ", partition algebra predicts " +
                       format_multiplicity_vector(predicted);
        } catch (const non_hyperbolic_error& err) {
            return describe_instance(inst) + " | composition lost hyperbolicity: " + err.what();
        }
        return std::string();
    }();
    return single_check(kPartitionOracle, std::move(failure), start);
}

VerificationReport check_semigroup_triple(int n, const MultiplicityVector& a,
                                          const MultiplicityVector& b,
                                          const MultiplicityVector& c) {
    const auto start = Clock::now();
    std::string failure = [&]() -> std::string {
        const MultiplicityVector id = identity_partition(n);
        const std::string label = "n=" + std::to_string(n) + " a=" +
                                  format_multiplicity_vector(a) + " b=" +
                                  format_multiplicity_vector(b) + " c=" +
                                  format_multiplicity_vector(c);
        if (!(compose_partitions(a, id) == a) || !(compose_partitions(id, a) == a))
            return label + " | identity law failed";
        if (!(compose_partitions(a, b) == compose_partitions(b, a)))
            return label + " | commutativity failed";
        const MultiplicityVector left = compose_partitions(compose_partitions(a, b), c);
        const MultiplicityVector right = compose_partitions(a, compose_partitions(b, c));
        if (!(left == right)) return label + " | associativity failed";
        return std::string();
    }();
    return single_check(kSemigroupLaws, std::move(failure), start);
}

Polynomial sample_dense_polynomial(std::mt19937_64& rng, int n, const HeightSchedule& heights) {
    const int num_bound = heights.numerator_bound(n);
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (auto& c : coeffs) {
        const int num = uniform_int(rng, -num_bound, num_bound);
        const int den = uniform_int(rng, 1, heights.denominator_bound);
        c = make_rational(BigInt(num), BigInt(den));
    }
    return Polynomial(std::move(coeffs), n);
}

VerificationReport run_fms_trial(std::mt19937_64& rng, int n, const HeightSchedule& heights) {
    const auto start = Clock::now();
    // A multiplier sequence by construction: entry j is coeff_j / C(n,j) of a
    // polynomial with all roots negative, so every entry is positive and the
    // top entry is 1.
    const MultiplicityVector char_parts = sample_ordered_partition(rng, n);
    const SignedMultiplicityVector char_shape(char_parts.parts(), 0, {});
    const SignedDraw char_draw = draw_signed(rng, char_shape, n, heights);
    const GammaSequence gamma(diagonal_of(char_draw.poly).entries());

    const SignedMultiplicityVector p_shape = sample_signed_shape(rng, n);
    const SignedDraw p_draw = draw_signed(rng, p_shape, n, heights);

    std::ostringstream label_out;
    label_out << "n=" << n << " gamma=[";
    for (int i = 0; i <= gamma.k(); ++i) {
        if (i > 0) label_out << ",";
        label_out << format_rational(gamma.entry(i));
    }
    label_out << "] P=[" << format_coefficients(p_draw.poly) << "]";
    const std::string label = label_out.str();

    std::string failure = [&]() -> std::string {
        if (!is_fms(gamma))
            return label + " | classification rejects a by-construction multiplier sequence";
        const Polynomial image = apply_sequence(gamma, p_draw.poly);
        if (image.effective_degree() != n)
            return label + " | image degree dropped below n";
        if (!is_hyperbolic(image))
            return label + " | image of a hyperbolic polynomial has non-real roots, image=[" +
                   format_coefficients(image) + "]";
        return std::string();
    }();
    return single_check(kFmsPreservation, std::move(failure), start);
}

VerificationReport run_trial(std::uint64_t id, std::mt19937_64& rng, int n,
                             const HeightSchedule& heights) {
    switch (id) {
        case 1: {
            const Polynomial p = sample_dense_polynomial(rng, n, heights);
            const Polynomial q = sample_dense_polynomial(rng, n, heights);
            return check_star_identity(p, q);
        }
        case 2:
            return check_mult_prop(realize(sample_instance_spec(rng, n, heights)));
        case 3: {
            const InstanceSpec spec = sample_instance_spec(rng, n, heights);
            const bool flip = (rng() & 1u) != 0;
            return check_root_bound(realize(spec), flip);
        }
        case 4:
            return check_signature(realize(sample_instance_spec(rng, n, heights)));
        case 5:
            return check_theorem_mv(realize(sample_instance_spec(rng, n, heights)));
        case 6: {
            const MultiplicityVector p_mv = sample_ordered_partition(rng, n);
            const MultiplicityVector q_mv = sample_ordered_partition(rng, n);
            const InstanceSpec spec{n, SignedMultiplicityVector(p_mv.parts(), 0, {}), q_mv,
                                    heights, rng()};
            return check_partition_oracle(realize(spec));
        }
        case 7: {
            const MultiplicityVector a = sample_ordered_partition(rng, n);
            const MultiplicityVector b = sample_ordered_partition(rng, n);
            const MultiplicityVector c = sample_ordered_partition(rng, n);
            return check_semigroup_triple(n, a, b, c);
        }
        case 8:
            return run_fms_trial(rng, n, heights);
        default:
            throw invariant_violation("run_trial: unmapped property id");
    }
}

}  // namespace

const std::vector<std::string>& all_property_names() {
    static const std::vector<std::string> names = {
        kStarIdentity,    kARootMultiplicity, kRootBound,      kSignaturePreservation,
        kMvComposition,   kPartitionOracle,   kSemigroupLaws,  kFmsPreservation};
    return names;
}

std::uint64_t property_id(const std::string& name) {
    const auto& names = all_property_names();
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i + 1;
    throw std::invalid_argument("unknown verification property: " + name);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t property, std::uint64_t n,
                       std::uint64_t trial) {
    std::uint64_t h = splitmix_round(seed);
    h = splitmix_round(h ^ (property * 0x9e3779b97f4a7c15ULL));
    h = splitmix_round(h ^ (n * 0xbf58476d1ce4e5b9ULL));
    h = splitmix_round(h ^ (trial * 0x94d049bb133111ebULL));
    return h;
}

MultiplicityVector sample_ordered_partition(std::mt19937_64& rng, int n) {
    if (n < 1) throw std::invalid_argument("sample_ordered_partition: n must be at least 1");
    std::vector<int> parts;
    int run = 1;
    for (int gap = 1; gap < n; ++gap) {
        if (rng() & 1u) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return MultiplicityVector(std::move(parts));
}

SignedMultiplicityVector sample_signed_shape(std::mt19937_64& rng, int n) {
    if (n < 1) throw std::invalid_argument("sample_signed_shape: n must be at least 1");
    const int u = uniform_int(rng, 0, n);
    const int v = uniform_int(rng, 0, n - u);
    const int w = n - u - v;
    std::vector<int> neg =
        u > 0 ? sample_ordered_partition(rng, u).parts() : std::vector<int>{};
    std::vector<int> pos =
        w > 0 ? sample_ordered_partition(rng, w).parts() : std::vector<int>{};
    return SignedMultiplicityVector(std::move(neg), v, std::move(pos));
}

InstanceSpec sample_instance_spec(std::mt19937_64& rng, int n, const HeightSchedule& heights) {
    return InstanceSpec{n, sample_signed_shape(rng, n), sample_ordered_partition(rng, n),
                        heights, rng()};
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min)
        throw std::invalid_argument("run_suite: degree range is empty or invalid");
    if (config.trials < 0) throw std::invalid_argument("run_suite: negative trial count");

    const std::vector<std::string> names =
        config.properties.empty() ? all_property_names() : config.properties;
    std::vector<VerificationReport> reports;
    reports.reserve(names.size());
    for (const auto& name : names) {
        const std::uint64_t id = property_id(name);
        VerificationReport total{name, 0, 0, "", 0.0};
        const auto start = Clock::now();
        for (int n = config.n_min; n <= config.n_max; ++n) {
            for (int trial = 0; trial < config.trials; ++trial) {
                std::mt19937_64 rng(mix_seed(config.seed, id,
                                             static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(trial)));
                merge_report(total, run_trial(id, rng, n, config.heights));
            }
        }
        total.elapsed_seconds = seconds_since(start);
        reports.push_back(std::move(total));
    }
    return reports;
}

std::vector<MultiplicityVector> all_ordered_partitions(int n) {
    if (n < 1) throw std::invalid_argument("all_ordered_partitions: n must be at least 1");
    std::vector<MultiplicityVector> out;
    out.reserve(static_cast<size_t>(1) << (n - 1));
    std::vector<int> current;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            current.push_back(first);
            self(self, rest - first);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

VerificationReport exhaustive_semigroup(int n) {
    const auto start = Clock::now();
    const std::vector<MultiplicityVector> all = all_ordered_partitions(n);
    const MultiplicityVector id = identity_partition(n);
    VerificationReport report{kSemigroupLaws, 0, 0, "", 0.0};

    auto record = [&report](bool ok, auto make_label) {
        ++report.trials;
        if (!ok) {
            ++report.failures;
            if (report.first_counterexample.empty()) report.first_counterexample = make_label();
        }
    };

    for (const auto& a : all)
        record(compose_partitions(a, id) == a && compose_partitions(id, a) == a, [&] {
            return "n=" + std::to_string(n) + " a=" + format_multiplicity_vector(a) +
                   " | identity law failed";
        });

    const size_t count = all.size();
    std::vector<std::vector<MultiplicityVector>> table;
    table.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::vector<MultiplicityVector> row;
        row.reserve(count);
        for (size_t j = 0; j < count; ++j) row.push_back(compose_partitions(all[i], all[j]));
        table.push_back(std::move(row));
    }

    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 1; j < count; ++j)
            record(table[i][j] == table[j][i], [&] {
                return "n=" + std::to_string(n) + " a=" + format_multiplicity_vector(all[i]) +
                       " b=" + format_multiplicity_vector(all[j]) + " | commutativity failed";
            });

    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
            for (size_t k = 0; k < count; ++k)
                record(compose_partitions(table[i][j], all[k]) ==
                           compose_partitions(all[i], table[j][k]),
                       [&] {
                           return "n=" + std::to_string(n) + " a=" +
                                  format_multiplicity_vector(all[i]) + " b=" +
                                  format_multiplicity_vector(all[j]) + " c=" +
                                  format_multiplicity_vector(all[k]) +
                                  " | associativity failed";
                       });

    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport sampled_semigroup(int n_min, int n_max, int triples, std::uint64_t seed) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("sampled_semigroup: degree range is empty or invalid");
    if (triples < 0) throw std::invalid_argument("sampled_semigroup: negative triple count");
    const auto start = Clock::now();
    const std::uint64_t id = property_id(kSemigroupLaws);
    VerificationReport report{kSemigroupLaws, 0, 0, "", 0.0};
    for (int t = 0; t < triples; ++t) {
        std::mt19937_64 rng(mix_seed(seed, id, 0, static_cast<std::uint64_t>(t)));
        const int n = uniform_int(rng, n_min, n_max);
        const MultiplicityVector a = sample_ordered_partition(rng, n);
        const MultiplicityVector b = sample_ordered_partition(rng, n);
        const MultiplicityVector c = sample_ordered_partition(rng, n);
        merge_report(report, check_semigroup_triple(n, a, b, c));
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport exhaustive_signature_grid(int n, std::uint64_t seed,
                                             const HeightSchedule& heights) {
    if (n < 1)
        throw std::invalid_argument("exhaustive_signature_grid: n must be at least 1");
    const auto start = Clock::now();
    const std::uint64_t id = property_id(kSignaturePreservation);
    VerificationReport report{kSignaturePreservation, 0, 0, "", 0.0};
    std::uint64_t cell = 0;
    for (int u = 0; u <= n; ++u) {
        for (int v = 0; u + v <= n; ++v) {
            const int w = n - u - v;
            std::mt19937_64 rng(mix_seed(seed, id, static_cast<std::uint64_t>(n), cell++));
            std::vector<int> neg =
                u > 0 ? sample_ordered_partition(rng, u).parts() : std::vector<int>{};
            std::vector<int> pos =
                w > 0 ? sample_ordered_partition(rng, w).parts() : std::vector<int>{};
            const InstanceSpec spec{n, SignedMultiplicityVector(std::move(neg), v, std::move(pos)),
                                    sample_ordered_partition(rng, n), heights, rng()};
            merge_report(report, check_signature(realize(spec)));
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport exhaustive_partition_oracle(int n, std::uint64_t seed,
                                               const HeightSchedule& heights) {
    if (n < 1)
        throw std::invalid_argument("exhaustive_partition_oracle: n must be at least 1");
    const auto start = Clock::now();
    const std::uint64_t id = property_id(kPartitionOracle);
    VerificationReport report{kPartitionOracle, 0, 0, "", 0.0};
    const std::vector<MultiplicityVector> all = all_ordered_partitions(n);
    std::uint64_t cell = 0;
    for (const auto& p_mv : all) {
        for (const auto& q_mv : all) {
            std::mt19937_64 rng(mix_seed(seed, id, static_cast<std::uint64_t>(n), cell++));
            const InstanceSpec spec{n, SignedMultiplicityVector(p_mv.parts(), 0, {}), q_mv,
                                    heights, rng()};
            merge_report(report, check_partition_oracle(realize(spec)));
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace szego::verify
