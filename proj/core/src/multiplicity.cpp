#include "szego/multiplicity.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "szego/error.hpp"

namespace szego {

namespace {

int checked_sum(const std::vector<int>& parts, const char* what) {
    int sum = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            std::ostringstream msg;
            msg << what << ": part " << i + 1 << " is " << parts[i] << ", must be positive";
            throw std::invalid_argument(msg.str());
        }
        sum += parts[i];
    }
    return sum;
}

}  // namespace

MultiplicityVector::MultiplicityVector(std::vector<int> parts)
    : parts_(std::move(parts)), n_(checked_sum(parts_, "MultiplicityVector")) {}

SignedMultiplicityVector::SignedMultiplicityVector(std::vector<int> negative_parts,
                                                   int zero_multiplicity,
                                                   std::vector<int> positive_parts)
    : negative_(std::move(negative_parts)),
      zero_(zero_multiplicity),
      positive_(std::move(positive_parts)) {
    checked_sum(negative_, "SignedMultiplicityVector negative block");
    checked_sum(positive_, "SignedMultiplicityVector positive block");
    if (zero_ < 0) {
        throw std::invalid_argument("SignedMultiplicityVector: negative zero multiplicity");
    }
}

int SignedMultiplicityVector::n() const {
    return std::accumulate(negative_.begin(), negative_.end(), zero_) +
           std::accumulate(positive_.begin(), positive_.end(), 0);
}

MultiplicityVector SignedMultiplicityVector::flatten() const {
    std::vector<int> parts = negative_;
    if (zero_ > 0) parts.push_back(zero_);
    parts.insert(parts.end(), positive_.begin(), positive_.end());
    return MultiplicityVector(std::move(parts));
}

SignSignature SignedMultiplicityVector::signature() const {
    return SignSignature{std::accumulate(negative_.begin(), negative_.end(), 0), zero_,
                         std::accumulate(positive_.begin(), positive_.end(), 0)};
}

IsolatingInterval::IsolatingInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("IsolatingInterval: lo > hi");
}

bool IsolatingInterval::contains(const Rational& r) const {
    if (is_point()) return r == lo;
    return lo < r && r <= hi;
}

std::optional<Rational> RootEntry::exact_value() const {
    if (location.is_point()) return location.lo;
    return std::nullopt;
}

int RootEntry::root_sign() const {
    if (location.is_point()) return sign_of(location.lo);
    // The root lies in the open interval (lo, hi); endpoints only bound it.
    if (sign_of(location.hi) <= 0) return -1;
    if (sign_of(location.lo) >= 0) return 1;
    throw invariant_violation("RootEntry: location straddles zero, sign undetermined");
}

bool strictly_ordered(const IsolatingInterval& first, const IsolatingInterval& second) {
    // Half-open intervals cover (lo, hi]; points cover {lo}.
    if (first.is_point()) {
        return second.is_point() ? first.lo < second.lo : first.lo <= second.lo;
    }
    return second.is_point() ? first.hi < second.lo : first.hi <= second.lo;
}

MultiplicityStructure::MultiplicityStructure(std::vector<RootEntry> entries)
    : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].multiplicity <= 0) {
            throw std::invalid_argument("MultiplicityStructure: non-positive multiplicity");
        }
        if (i > 0 && !strictly_ordered(entries_[i - 1].location, entries_[i].location)) {
            std::ostringstream msg;
            msg << "MultiplicityStructure: entries " << i - 1 << " and " << i
                << " are not strictly ordered";
            throw std::invalid_argument(msg.str());
        }
    }
}

int MultiplicityStructure::total_multiplicity() const {
    int sum = 0;
    for (const RootEntry& e : entries_) sum += e.multiplicity;
    return sum;
}

MultiplicityVector MultiplicityStructure::multiplicity_vector() const {
    std::vector<int> parts;
    parts.reserve(entries_.size());
    for (const RootEntry& e : entries_) parts.push_back(e.multiplicity);
    return MultiplicityVector(std::move(parts));
}

SignSignature MultiplicityStructure::sign_signature() const {
    SignSignature sig;
    for (const RootEntry& e : entries_) {
        const int s = e.root_sign();
        if (s < 0) {
            sig.negative += e.multiplicity;
        } else if (s == 0) {
            sig.zero += e.multiplicity;
        } else {
            sig.positive += e.multiplicity;
        }
    }
    return sig;
}

SignedMultiplicityVector MultiplicityStructure::signed_multiplicity_vector() const {
    std::vector<int> neg;
    int zero = 0;
    std::vector<int> pos;
    for (const RootEntry& e : entries_) {
        const int s = e.root_sign();
        if (s < 0) {
            neg.push_back(e.multiplicity);
        } else if (s == 0) {
            zero += e.multiplicity;
        } else {
            pos.push_back(e.multiplicity);
        }
    }
    return SignedMultiplicityVector(std::move(neg), zero, std::move(pos));
}

}  // namespace szego
