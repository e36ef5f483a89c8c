#pragma once

#include <optional>
#include <vector>

#include "szego/rational.hpp"

namespace szego {

// An ordered partition of n: positive parts, order significant, summing to n.
// For a hyperbolic polynomial this lists root multiplicities in increasing
// root order; for the partition semigroup it is the element itself.
class MultiplicityVector {
public:
    // All parts must be positive. The empty vector is the partition of 0.
    explicit MultiplicityVector(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return parts_[i]; }
    size_t size() const { return parts_.size(); }
    int n() const { return n_; }

    bool operator==(const MultiplicityVector&) const = default;

private:
    std::vector<int> parts_;
    int n_;
};

// Root counts with multiplicity by sign class; components sum to n.
struct SignSignature {
    int negative = 0;
    int zero = 0;
    int positive = 0;

    int n() const { return negative + zero + positive; }

    bool operator==(const SignSignature&) const = default;
};

// A multiplicity vector split at the zero root: parts of negative roots
// (increasing root order), the multiplicity of 0 (0 if absent), parts of
// positive roots. Flattening gives back the plain multiplicity vector.
class SignedMultiplicityVector {
public:
    SignedMultiplicityVector(std::vector<int> negative_parts, int zero_multiplicity,
                             std::vector<int> positive_parts);

    const std::vector<int>& negative_parts() const { return negative_; }
    int zero_multiplicity() const { return zero_; }
    const std::vector<int>& positive_parts() const { return positive_; }
    int n() const;

    MultiplicityVector flatten() const;
    SignSignature signature() const;

    bool operator==(const SignedMultiplicityVector&) const = default;

private:
    std::vector<int> negative_;
    int zero_;
    std::vector<int> positive_;
};

// Location of one distinct real root: either an exact rational point
// (lo == hi) or a half-open interval (lo, hi] containing exactly one
// distinct root of the analyzed polynomial.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    IsolatingInterval(Rational lo_, Rational hi_);
    static IsolatingInterval point(const Rational& r) { return {r, r}; }

    bool is_point() const { return lo == hi; }
    // Membership of a rational value: the point itself, or lo < r <= hi.
    bool contains(const Rational& r) const;

    bool operator==(const IsolatingInterval&) const = default;
};

// One distinct root with its multiplicity. Locations produced by the root
// analyzer are sign-definite: a point, or an interval with hi <= 0 (negative
// root) or lo >= 0 (positive root); 0 itself is only ever a point location.
struct RootEntry {
    IsolatingInterval location;
    int multiplicity;

    // Exact value when the location is a point.
    std::optional<Rational> exact_value() const;
    // -1, 0, or +1. Requires a sign-definite location.
    int root_sign() const;

    bool operator==(const RootEntry&) const = default;
};

// All distinct real roots of a polynomial, strictly increasing, with
// multiplicities summing to its effective degree.
class MultiplicityStructure {
public:
    // Entries must be strictly ordered and separated: every value covered by
    // one entry's location is below every value covered by the next.
    explicit MultiplicityStructure(std::vector<RootEntry> entries);

    const std::vector<RootEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    int total_multiplicity() const;

    // Multiplicities in increasing root order.
    MultiplicityVector multiplicity_vector() const;
    SignSignature sign_signature() const;
    SignedMultiplicityVector signed_multiplicity_vector() const;

    bool operator==(const MultiplicityStructure&) const = default;

private:
    std::vector<RootEntry> entries_;
};

// True when every value covered by `first` is strictly below every value
// covered by `second` (the ordering used inside MultiplicityStructure).
bool strictly_ordered(const IsolatingInterval& first, const IsolatingInterval& second);

}  // namespace szego
