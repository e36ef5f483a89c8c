#pragma once

#include <string>
#include <vector>

#include "szego/multiplicity.hpp"
#include "szego/polynomial.hpp"
#include "szego/rational.hpp"

namespace szego {

// Exact rational I/O: values are written `p/q` or as a plain integer.
// Decimal notation is rejected outright rather than approximated.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

// Comma-separated lists. Surrounding whitespace per item is ignored; an
// empty or all-whitespace string is the empty list.
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

// Canonical polynomial text: coefficients low-to-high, comma-separated.
std::string format_coefficients(const Polynomial& p);
// Secondary human-readable monomial form, highest degree first.
std::string format_polynomial_pretty(const Polynomial& p);

// Multiplicity vector text: `1,2,3`.
MultiplicityVector parse_multiplicity_vector(const std::string& text, int n);
std::string format_multiplicity_vector(const MultiplicityVector& mv);

// Signed multiplicity vector text: `neg:1,2|zero:1|pos:3`, all three
// sections always present; an empty block is written with nothing after
// the colon.
SignedMultiplicityVector parse_signed_multiplicity_vector(const std::string& text, int n);
std::string format_signed_multiplicity_vector(const SignedMultiplicityVector& smv);

// Sign signature text: `neg:2|zero:1|pos:3` (counts with multiplicity).
std::string format_sign_signature(const SignSignature& sig);

// Root locations: an exact root prints `r:m`, an isolated one `(lo,hi]:m`.
std::string format_interval(const IsolatingInterval& iv);
std::string format_multiplicity_structure(const MultiplicityStructure& ms);

}  // namespace szego
