#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szego/multiplicity.hpp"
#include "szego/polynomial.hpp"

namespace szego {

// Entries gamma_0..gamma_k of a diagonal operator on Pol_k: the operator
// multiplies coefficient i by gamma_i.
class GammaSequence {
public:
    // entries.size() must be k+1.
    GammaSequence(std::vector<Rational> entries, int k);
    // k inferred as entries.size()-1; entries must be nonempty.
    explicit GammaSequence(std::vector<Rational> entries);
    // All-ones sequence: the identity operator.
    static GammaSequence identity(int k);

    int k() const { return k_; }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& entry(int i) const { return entries_[static_cast<size_t>(i)]; }

    bool operator==(const GammaSequence&) const = default;

private:
    int k_;
    std::vector<Rational> entries_;
};

// The polynomial whose coefficient j is C(k,j) * gamma_j: the image of
// (1+x)^k under the operator, and the object the classification inspects.
Polynomial fms_characteristic_poly(const GammaSequence& gamma);

enum class FmsVerdict {
    fms,         // operator preserves real-rootedness
    not_fms,     // concrete violation recorded in the certificate
    degenerate,  // all-zero sequence: the characteristic polynomial vanishes
};

enum class FmsSignClass { all_negative, all_positive, only_zero_roots };

enum class FmsViolation { non_real_roots, mixed_signs };

// Exact classification result. A sequence is a finite multiplier sequence
// exactly when its characteristic polynomial has only real roots and all its
// nonzero roots share one sign; zero roots are always permitted.
struct FmsCertificate {
    FmsVerdict verdict;
    // Set iff verdict == fms. Sequences whose characteristic polynomial has
    // no nonzero roots (a constant, or a pure power of x) report
    // only_zero_roots.
    std::optional<FmsSignClass> sign_class;
    // Set iff verdict == not_fms.
    std::optional<FmsViolation> violation;
    // Root counts with multiplicity of the characteristic polynomial's
    // effective part; absent when roots are not all real or the verdict is
    // degenerate.
    std::optional<SignSignature> root_signs;
    // Non-real roots with multiplicity; nonzero iff violation == non_real_roots.
    int real_root_deficit = 0;

    bool accepted() const { return verdict == FmsVerdict::fms; }
};

FmsCertificate classify_fms(const GammaSequence& gamma);

// classify_fms(gamma).accepted().
bool is_fms(const GammaSequence& gamma);

// Coefficient i of the result is gamma_i times coefficient i of p.
// Requires gamma.k() == p.ambient_degree().
Polynomial apply_sequence(const GammaSequence& gamma, const Polynomial& p);

// A hyperbolic input whose image under the sequence has non-real roots.
struct NonFmsWitness {
    Polynomial input;
    Polynomial output;
    int real_root_deficit;  // non-real roots of the output, with multiplicity
};

// Randomized search for a witness that a sequence is not a finite multiplier
// sequence. Classification never depends on this: a witness exists whenever
// classify_fms rejects, but this search is best-effort within the trial
// budget. Deterministic for a fixed seed.
std::optional<NonFmsWitness> find_non_fms_witness(const GammaSequence& gamma,
                                                  std::uint64_t seed, int trials);

}  // namespace szego
