#pragma once

#include <vector>

#include "szego/rational.hpp"

namespace szego {

// Row n of Pascal's triangle: C(n,0) .. C(n,n), exact integers.
// Rows are cached per degree; the cache is safe for concurrent use
// (lookup takes a lock, returned references stay valid for the
// lifetime of the program).
const std::vector<BigInt>& binomial_row(int n);

// C(n,k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace szego
