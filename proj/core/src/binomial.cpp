#include "szego/binomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace szego {

namespace {

std::mutex g_cache_mutex;
std::map<int, std::vector<BigInt>>& cache() {
    static std::map<int, std::vector<BigInt>> rows;
    return rows;
}

}  // namespace

const std::vector<BigInt>& binomial_row(int n) {
    if (n < 0) throw std::invalid_argument("binomial_row: negative degree");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& rows = cache();
    auto it = rows.find(n);
    if (it != rows.end()) return it->second;

    // Build every missing row up to n; each is derived from its predecessor.
    int start = rows.empty() ? 0 : rows.rbegin()->first + 1;
    for (int m = start; m <= n; ++m) {
        std::vector<BigInt> row(static_cast<size_t>(m) + 1, BigInt(1));
        if (m > 0) {
            const auto& prev = rows.at(m - 1);
            for (int k = 1; k < m; ++k) row[k] = prev[k - 1] + prev[k];
        }
        rows.emplace(m, std::move(row));
    }
    return rows.at(n);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    return binomial_row(n)[static_cast<size_t>(k)];
}

}  // namespace szego
