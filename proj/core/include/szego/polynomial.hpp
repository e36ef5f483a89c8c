#pragma once

#include <optional>
#include <vector>

#include "szego/rational.hpp"

namespace szego {

// A dense polynomial over the rationals with an explicit ambient degree n:
// an element of Pol_n, the space of polynomials of degree at most n.
//
// The ambient degree is part of the value, not an implementation detail.
// The Schur-Szego composition divides coefficient i by C(n,i), so the same
// coefficient list means different things in Pol_n and Pol_{n+1}; operations
// that are ambient-sensitive (composition, diagonal application, reversal)
// reject mismatched operands instead of promoting silently.
//
// coeff(i) is the coefficient of x^i; the vector always has length n+1.
// The zero polynomial is representable at every ambient degree.
// Values are immutable after construction and safe to share across threads.
class Polynomial {
public:
    // coeffs may be shorter than n+1 (padded with zeros); longer is an error.
    Polynomial(std::vector<Rational> coeffs, int ambient_degree);

    static Polynomial zero(int ambient_degree);
    static Polynomial constant(const Rational& c, int ambient_degree);
    // Monic polynomial with exactly the given multiset of roots.
    // roots.size() must equal n.
    static Polynomial from_roots(const std::vector<Rational>& roots, int n);
    // (1+x)^n, the identity element of the composition.
    static Polynomial composition_identity(int n);

    int ambient_degree() const { return ambient_; }
    // Largest i with coeff(i) != 0, or -1 for the zero polynomial.
    int effective_degree() const;
    bool is_zero() const { return effective_degree() < 0; }
    const Rational& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient at the effective degree; zero polynomial is an error.
    const Rational& leading_coeff() const;
    // Multiplicity of 0 as a root: index of the lowest nonzero coefficient.
    // Zero polynomial is an error.
    int order_at_zero() const;

    // Same coefficients re-embedded at ambient degree n (n >= effective degree).
    Polynomial with_ambient(int n) const;
    // Copy with ambient degree shrunk to the effective degree (0 for zero).
    Polynomial trimmed() const;

    bool operator==(const Polynomial&) const = default;

private:
    int ambient_;
    std::vector<Rational> coeffs_;
};

// --- plain arithmetic -------------------------------------------------------

Rational evaluate(const Polynomial& p, const Rational& x);
// Ambient degree max(n-1, 0).
Polynomial derivative(const Polynomial& p);
// Ambient degree n_p + n_q.
Polynomial multiply(const Polynomial& p, const Polynomial& q);
// Ambient degree max(n_p, n_q).
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial scale(const Polynomial& p, const Rational& c);
// P(lambda * x); ambient degree unchanged.
Polynomial scale_argument(const Polynomial& p, const Rational& lambda);
// p^k for k >= 0; ambient degree k * n_p.
Polynomial pow(const Polynomial& p, int k);

// Quotient if divisor divides p exactly, nullopt if the remainder is nonzero.
// A zero divisor is an error (distinct from inexactness).
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& divisor);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
// Euclidean division by a nonzero divisor.
DivisionResult divmod(const Polynomial& p, const Polynomial& divisor);

// Monic gcd; gcd(p, 0) = monic(p). Both zero is an error.
Polynomial monic_gcd(const Polynomial& p, const Polynomial& q);

// Coefficient reversal within Pol_n: x^n * P(1/x).
Polynomial reverse(const Polynomial& p);

// --- diagonal calculus and the composition ----------------------------------

// The diagonal sequence of P in Pol_n: a_i = coeff_i / C(n,i). The operator
// it defines acts on the monomial basis as x^i -> a_i x^i and is determined
// by sending (1+x)^n to P.
class DiagonalSequence {
public:
    DiagonalSequence(std::vector<Rational> entries, int ambient_degree);

    int ambient_degree() const { return ambient_; }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& entry(int i) const { return entries_[static_cast<size_t>(i)]; }

    bool operator==(const DiagonalSequence&) const = default;

private:
    int ambient_;
    std::vector<Rational> entries_;
};

DiagonalSequence diagonal_of(const Polynomial& p);
// Coefficient-wise product: result coeff i = entries[i] * p.coeff(i).
// Ambient degrees must match.
Polynomial apply_diagonal(const DiagonalSequence& t, const Polynomial& p);

// The Schur-Szego composition: coefficient i of P*Q is
// coeff_i(P) * coeff_i(Q) / C(n,i). Ambient degrees must match.
// Commutative and associative, with (1+x)^n as identity.
Polynomial schur_szego(const Polynomial& p, const Polynomial& q);

}  // namespace szego
