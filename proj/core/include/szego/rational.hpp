#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace szego {

// Exact arbitrary-precision arithmetic. Rational is always stored in lowest
// terms with a positive denominator; equality is value equality. All core
// computations use these types exclusively -- no floating point anywhere.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num) / Rational(den);
}

}  // namespace szego
