#include "szego/fms.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "szego/binomial.hpp"
#include "szego/roots.hpp"

namespace szego {

GammaSequence::GammaSequence(std::vector<Rational> entries, int k)
    : k_(k), entries_(std::move(entries)) {
    if (k_ < 0) throw std::invalid_argument("GammaSequence: negative degree");
    if (entries_.size() != static_cast<size_t>(k_) + 1) {
        std::ostringstream msg;
        msg << "GammaSequence: " << entries_.size() << " entries for degree " << k_
            << " (need " << k_ + 1 << ")";
        throw std::invalid_argument(msg.str());
    }
}

GammaSequence::GammaSequence(std::vector<Rational> entries)
    : k_(static_cast<int>(entries.size()) - 1), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("GammaSequence: no entries");
}

GammaSequence GammaSequence::identity(int k) {
    if (k < 0) throw std::invalid_argument("GammaSequence::identity: negative degree");
    return GammaSequence(std::vector<Rational>(static_cast<size_t>(k) + 1, Rational(1)),
                         k);
}

Polynomial fms_characteristic_poly(const GammaSequence& gamma) {
    const int k = gamma.k();
    const std::vector<BigInt>& row = binomial_row(k);
    std::vector<Rational> coeffs;
    coeffs.reserve(row.size());
    for (int j = 0; j <= k; ++j) {
        coeffs.push_back(gamma.entry(j) * Rational(row[static_cast<size_t>(j)]));
    }
    return Polynomial(std::move(coeffs), k);
}

FmsCertificate classify_fms(const GammaSequence& gamma) {
    const Polynomial characteristic = fms_characteristic_poly(gamma);
    if (characteristic.is_zero()) {
        return FmsCertificate{FmsVerdict::degenerate, std::nullopt, std::nullopt,
                              std::nullopt, 0};
    }
    // Work on the effective part: a short sequence (gamma_k = 0) is still a
    // limit of full-degree ones, and the sign test reads the actual roots.
    const Polynomial effective = characteristic.trimmed();
    SignSignature signs;
    try {
        signs = sign_signature(effective);
    } catch (const non_hyperbolic_error& e) {
        return FmsCertificate{FmsVerdict::not_fms, std::nullopt,
                              FmsViolation::non_real_roots, std::nullopt,
                              e.real_root_deficit()};
    }
    if (signs.negative > 0 && signs.positive > 0) {
        return FmsCertificate{FmsVerdict::not_fms, std::nullopt,
                              FmsViolation::mixed_signs, signs, 0};
    }
    FmsSignClass cls = FmsSignClass::only_zero_roots;
    if (signs.negative > 0) cls = FmsSignClass::all_negative;
    if (signs.positive > 0) cls = FmsSignClass::all_positive;
    return FmsCertificate{FmsVerdict::fms, cls, std::nullopt, signs, 0};
}

bool is_fms(const GammaSequence& gamma) { return classify_fms(gamma).accepted(); }

Polynomial apply_sequence(const GammaSequence& gamma, const Polynomial& p) {
    if (gamma.k() != p.ambient_degree()) {
        std::ostringstream msg;
        msg << "apply_sequence: sequence on Pol_" << gamma.k()
            << " applied to element of Pol_" << p.ambient_degree();
        throw std::invalid_argument(msg.str());
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (int i = 0; i <= p.ambient_degree(); ++i) {
        coeffs.push_back(gamma.entry(i) * p.coeff(i));
    }
    return Polynomial(std::move(coeffs), p.ambient_degree());
}

std::optional<NonFmsWitness> find_non_fms_witness(const GammaSequence& gamma,
                                                  std::uint64_t seed, int trials) {
    const int k = gamma.k();
    if (k == 0) return std::nullopt;  // constants cannot witness anything
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-8, 8);
    std::uniform_int_distribution<int> denominator(1, 4);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> roots;
        roots.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            roots.push_back(make_rational(numerator(rng), denominator(rng)));
        }
        const Polynomial input = Polynomial::from_roots(roots, k);
        const Polynomial output = apply_sequence(gamma, input);
        if (output.is_zero()) continue;
        try {
            multiplicity_structure(output);
        } catch (const non_hyperbolic_error& e) {
            return NonFmsWitness{input, output, e.real_root_deficit()};
        }
    }
    return std::nullopt;
}

}  // namespace szego
