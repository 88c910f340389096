#pragma once

// Independent oracles for the test suites.  Everything here is deliberately
// written against the definitions, not against the library code paths it
// checks: partition generation is a different recursion than the production
// DP/enumerator, polygamma values come from exact harmonic sums, and the
// chi-squared tail uses the incomplete gamma directly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace oracles {

// --------------------------------------------------------------------------
// Partitions by brute force: top-down recursion over an ascending part list.
// --------------------------------------------------------------------------

inline void gen_partitions_rec(std::int64_t remaining, std::size_t max_idx,
                               const std::vector<std::int64_t>& parts,
                               std::vector<std::int64_t>& current,
                               std::vector<std::vector<std::int64_t>>& out) {
    if (remaining == 0) {
        std::vector<std::int64_t> p = current;
        std::sort(p.begin(), p.end(), std::greater<>());
        out.push_back(std::move(p));
        return;
    }
    for (std::size_t i = 0; i < max_idx; ++i) {
        if (parts[i] > remaining) break;
        current.push_back(parts[i]);
        gen_partitions_rec(remaining - parts[i], i + 1, parts, current, out);
        current.pop_back();
    }
}

// All partitions of n from the given ascending part list, each as a
// descending vector (unspecified order overall).
inline std::vector<std::vector<std::int64_t>> brute_force_partitions(
    std::int64_t n, const std::vector<std::int64_t>& parts_ascending) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> current;
    gen_partitions_rec(n, parts_ascending.size(), parts_ascending, current, out);
    return out;
}

inline std::int64_t brute_force_count(std::int64_t n,
                                      const std::vector<std::int64_t>& parts_ascending) {
    if (n == 0) return 1;
    std::int64_t total = 0;
    std::vector<std::int64_t> current;
    std::vector<std::vector<std::int64_t>> out;
    gen_partitions_rec(n, parts_ascending.size(), parts_ascending, current, out);
    total = static_cast<std::int64_t>(out.size());
    return total;
}

// --------------------------------------------------------------------------
// Polygamma at positive integers, from the exact series:
//   psi(k)   = -gamma + sum_{j<k} 1/j
//   psi'(k)  = pi^2/6 - sum_{j<k} 1/j^2
//   psi''(k) = -2 zeta(3) + sum_{j<k} 2/j^3
// --------------------------------------------------------------------------

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPiSqOver6 = 1.6449340668482264364724151666460252;
inline constexpr double kZeta3 = 1.2020569031595942853997381615114500;

inline double psi(std::int64_t k) {
    double h = 0.0;
    for (std::int64_t j = 1; j < k; ++j) h += 1.0 / static_cast<double>(j);
    return -kEulerGamma + h;
}

inline double psi1(std::int64_t k) {
    double h = 0.0;
    for (std::int64_t j = 1; j < k; ++j) h += 1.0 / (static_cast<double>(j) * static_cast<double>(j));
    return kPiSqOver6 - h;
}

inline double psi2(std::int64_t k) {
    double h = 0.0;
    for (std::int64_t j = 1; j < k; ++j) {
        double dj = static_cast<double>(j);
        h += 2.0 / (dj * dj * dj);
    }
    return -2.0 * kZeta3 + h;
}

// Moments of the order-k Gumbel law (the law of -log Gamma(k,1)):
//   E[x]   = -psi(k)
//   E[x^2] = psi(k)^2 + psi'(k)
//   E[x^3] = -(psi(k)^3 + 3 psi(k) psi'(k) + psi''(k))
inline double gumbel_moment1(std::int64_t k) { return -psi(k); }
inline double gumbel_moment2(std::int64_t k) { return psi(k) * psi(k) + psi1(k); }
inline double gumbel_moment3(std::int64_t k) {
    return -(psi(k) * psi(k) * psi(k) + 3.0 * psi(k) * psi1(k) + psi2(k));
}

// Regularized upper incomplete gamma at integer order, via the Poisson sum
// Q(k, x) = e^{-x} sum_{j<k} x^j/j! evaluated in log space.
inline double upper_gamma_q_int(std::int64_t k, double x) {
    if (x <= 0.0) return 1.0;
    double sum = 0.0;
    double log_x = std::log(x);
    for (std::int64_t j = 0; j < k; ++j)
        sum += std::exp(static_cast<double>(j) * log_x - x - std::lgamma(static_cast<double>(j) + 1.0));
    return std::min(1.0, sum);
}

// Chi-squared upper tail probability with df degrees of freedom.
inline double chi_squared_pvalue(double statistic, double df) {
    return boost::math::gamma_q(0.5 * df, 0.5 * statistic);
}

// Chi-squared statistic for observed counts against a uniform null.
inline double chi_squared_uniform(const std::map<std::vector<std::int64_t>, std::uint64_t>& observed,
                                  std::uint64_t total, std::uint64_t categories) {
    double expected = static_cast<double>(total) / static_cast<double>(categories);
    double stat = 0.0;
    std::uint64_t seen = 0;
    for (const auto& [key, count] : observed) {
        double d = static_cast<double>(count) - expected;
        stat += d * d / expected;
        ++seen;
    }
    // Categories never observed still contribute (0 - E)^2 / E.
    stat += static_cast<double>(categories - seen) * expected;
    return stat;
}

}  // namespace oracles
