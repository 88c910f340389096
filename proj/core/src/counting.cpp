#include "mupart/counting.hpp"

#include <stdexcept>

namespace mupart {

void CountTable::grow(std::int64_t n) {
    if (static_cast<std::size_t>(n) < dp_.size()) return;
    if (n == 0) {
        dp_.assign(1, mpz_class(1));
        return;
    }
    // Complete-knapsack DP over allowed parts; rebuilt when the horizon grows.
    std::vector<std::int64_t> parts = r_.parts_up_to(n);
    dp_.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
    dp_[0] = 1;
    for (std::int64_t p : parts)
        for (std::int64_t j = p; j <= n; ++j)
            dp_[static_cast<std::size_t>(j)] += dp_[static_cast<std::size_t>(j - p)];
}

const mpz_class& CountTable::count(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("count: n must be >= 0");
    grow(n);
    return dp_[static_cast<std::size_t>(n)];
}

mpz_class CountTable::count_with_max_parts(std::int64_t n, std::int64_t max_parts) const {
    if (n < 0 || max_parts < 0)
        throw std::invalid_argument("count_with_max_parts: arguments must be >= 0");
    if (n == 0) return 1;
    if (max_parts == 0) return 0;

    std::vector<std::int64_t> parts = r_.parts_up_to(n);
    std::int64_t budget = std::min(max_parts, n);  // no partition of n has > n parts

    // dp[j][b] = partitions of j with at most b parts (parts seen so far).
    std::size_t cols = static_cast<std::size_t>(budget) + 1;
    std::vector<std::vector<mpz_class>> dp(static_cast<std::size_t>(n) + 1,
                                           std::vector<mpz_class>(cols, mpz_class(0)));
    for (std::size_t b = 0; b < cols; ++b) dp[0][b] = 1;
    for (std::int64_t p : parts)
        for (std::int64_t j = p; j <= n; ++j)
            for (std::int64_t b = 1; b <= budget; ++b)
                dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] +=
                    dp[static_cast<std::size_t>(j - p)][static_cast<std::size_t>(b - 1)];
    return dp[static_cast<std::size_t>(n)][static_cast<std::size_t>(budget)];
}

mpz_class count(std::int64_t n, const Restriction& r) {
    CountTable table(r);
    return table.count(n);
}

mpz_class count_with_max_parts(std::int64_t n, std::int64_t max_parts, const Restriction& r) {
    CountTable table(r);
    return table.count_with_max_parts(n, max_parts);
}

}  // namespace mupart
