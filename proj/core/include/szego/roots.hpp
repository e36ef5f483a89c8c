#pragma once

#include <stdexcept>
#include <vector>

#include "szego/multiplicity.hpp"
#include "szego/polynomial.hpp"
#include "szego/rational.hpp"

namespace szego {

// Raised by root-structure queries on polynomials with non-real roots.
// The deficit is the number of non-real roots counted with multiplicity.
class non_hyperbolic_error : public std::invalid_argument {
public:
    non_hyperbolic_error(const std::string& what, int deficit)
        : std::invalid_argument(what), deficit_(deficit) {}

    int real_root_deficit() const { return deficit_; }

private:
    int deficit_;
};

// A point on the extended real line, for root-count queries.
class Endpoint {
public:
    static Endpoint minus_infinity() { return Endpoint(Kind::minus_inf, 0); }
    static Endpoint at(Rational value) { return Endpoint(Kind::finite, std::move(value)); }
    static Endpoint plus_infinity() { return Endpoint(Kind::plus_inf, 0); }

    bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_inf; }
    bool is_finite() const { return kind_ == Kind::finite; }
    // Only valid when finite.
    const Rational& value() const { return value_; }

    // Strict order on the extended line.
    bool operator<(const Endpoint& other) const;

private:
    enum class Kind { minus_inf, finite, plus_inf };
    Endpoint(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

// Sturm remainder sequence of a square-free polynomial. sturm_chain reduces
// its input to the square-free part first, so distinct-root counts are
// insensitive to multiplicities.
struct SturmChain {
    std::vector<Polynomial> sequence;
};

SturmChain sturm_chain(const Polynomial& p);

// Exact number of distinct real roots in the half-open interval (lo, hi].
// Exact even when an endpoint is itself a root (a root at lo is excluded,
// a root at hi included), so callers never need to nudge endpoints.
int count_distinct_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi);
// Whole real line.
int count_distinct_real_roots(const Polynomial& p);

// True iff every root of p is real (square-free part has as many distinct
// real roots as its degree). Ignores the ambient degree; membership of
// Hyp_n additionally needs effective degree == n, which the structure
// queries below enforce.
bool is_hyperbolic(const Polynomial& p);

struct SquarefreeFactor {
    Polynomial factor;  // monic, square-free
    int exponent;
};

// Yun decomposition: p == leading_coeff * prod factor_k^{exponent_k} with the
// factors pairwise coprime and exponents strictly increasing. Constants
// decompose into the empty product.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

// 1 + max_i |c_i / c_d|: every real root lies strictly inside (-bound, bound).
Rational cauchy_root_bound(const Polynomial& p);

// Distinct real roots of a hyperbolic p in increasing order, each with its
// multiplicity; locations are disjoint sign-definite intervals or exact
// points. Throws non_hyperbolic_error when p has non-real roots.
MultiplicityStructure multiplicity_structure(const Polynomial& p);

// The ordered partition of n given by root multiplicities in increasing root
// order. Requires effective degree == ambient degree (a degree-deficient
// polynomial has too few roots to partition n) in addition to hyperbolicity.
MultiplicityVector multiplicity_vector(const Polynomial& p);

// Root counts with multiplicity by sign class; same preconditions.
SignSignature sign_signature(const Polynomial& p);

// The multiplicity vector split into negative / zero / positive blocks;
// same preconditions.
SignedMultiplicityVector signed_multiplicity_vector(const Polynomial& p);

}  // namespace szego
