#include "mupart/graphical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mupart {

bool is_graphical_nash_williams(const std::vector<std::int64_t>& parts_desc) {
    std::int64_t sum = std::accumulate(parts_desc.begin(), parts_desc.end(), std::int64_t{0});
    if (sum % 2 != 0) return false;

    // Prefix sums of R_k = Y_k - X_k for k up to the Durfee square.  X_k is
    // tracked with a two-pointer: parts_desc is weakly decreasing, so the
    // count of parts >= k only shrinks as k grows.
    std::int64_t np = static_cast<std::int64_t>(parts_desc.size());
    std::int64_t xk = np;
    std::int64_t prefix = 0;
    for (std::int64_t k = 1;
         k <= np && parts_desc[static_cast<std::size_t>(k - 1)] >= k; ++k) {
        while (xk > 0 && parts_desc[static_cast<std::size_t>(xk - 1)] < k) --xk;
        prefix += parts_desc[static_cast<std::size_t>(k - 1)] - xk;
        if (prefix > -k) return false;
    }
    return true;
}

bool is_graphical_nash_williams(const Partition& p) {
    return is_graphical_nash_williams(p.parts);
}

bool is_graphical_erdos_gallai(const std::vector<std::int64_t>& parts_desc) {
    std::int64_t sum = std::accumulate(parts_desc.begin(), parts_desc.end(), std::int64_t{0});
    if (sum % 2 != 0) return false;

    std::int64_t np = static_cast<std::int64_t>(parts_desc.size());
    std::int64_t lhs = 0;
    for (std::int64_t k = 1; k <= np; ++k) {
        lhs += parts_desc[static_cast<std::size_t>(k - 1)];
        std::int64_t rhs = k * (k - 1);
        for (std::int64_t i = k; i < np; ++i)
            rhs += std::min(parts_desc[static_cast<std::size_t>(i)], k);
        if (lhs > rhs) return false;
    }
    return true;
}

bool is_graphical_erdos_gallai(const Partition& p) {
    return is_graphical_erdos_gallai(p.parts);
}

namespace {

// Backtracking over vertices in degree order: vertex i picks its neighbors
// among vertices > i.  With <= 8 vertices this is exhaustive over all simple
// graphs up to isomorphism of the remaining-degree multiset.
bool realize(std::vector<std::int64_t>& rem, std::size_t i) {
    std::size_t v = rem.size();
    if (i == v) {
        for (std::int64_t d : rem)
            if (d != 0) return false;
        return true;
    }
    if (rem[i] == 0) return realize(rem, i + 1);

    // Choose rem[i] neighbors among indices > i with remaining degree > 0.
    std::vector<std::size_t> candidates;
    for (std::size_t j = i + 1; j < v; ++j)
        if (rem[j] > 0) candidates.push_back(j);
    std::int64_t need = rem[i];
    if (static_cast<std::int64_t>(candidates.size()) < need) return false;

    std::vector<std::size_t> chosen;
    auto pick = [&](auto&& self, std::size_t from, std::int64_t left) -> bool {
        if (left == 0) {
            for (std::size_t j : chosen) --rem[j];
            std::int64_t saved = rem[i];
            rem[i] = 0;
            bool ok = realize(rem, i + 1);
            rem[i] = saved;
            for (std::size_t j : chosen) ++rem[j];
            return ok;
        }
        for (std::size_t c = from; c + static_cast<std::size_t>(left) <= candidates.size(); ++c) {
            chosen.push_back(candidates[c]);
            if (self(self, c + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(pick, 0, need);
}

}  // namespace

bool is_realizable_bruteforce(const Partition& p) {
    if (p.size() > 8)
        throw std::domain_error("is_realizable_bruteforce: more than 8 parts");
    if (p.empty()) return true;

    std::int64_t v = static_cast<std::int64_t>(p.size());
    if (p.parts.front() > v - 1) return false;  // degree exceeds available vertices
    if (p.sum() % 2 != 0) return false;

    std::vector<std::int64_t> rem = p.parts;
    return realize(rem, 0);
}

FractionReport graphical_fraction(std::int64_t n, const Restriction& r) {
    if (n < 0) throw std::domain_error("graphical_fraction: n must be >= 0");
    if (n % 2 != 0) throw std::domain_error("graphical_fraction: n must be even");

    FractionReport report;
    report.n = n;
    std::uint64_t total = 0, graphical = 0;
    for_each_partition(n, r, [&](const std::vector<std::int64_t>& parts) {
        ++total;
        if (is_graphical_nash_williams(parts)) ++graphical;
    });
    report.total = mpz_class(static_cast<unsigned long>(total));
    report.graphical = mpz_class(static_cast<unsigned long>(graphical));
    if (total > 0) {
        report.fraction = mpq_class(report.graphical, report.total);
        report.fraction.canonicalize();
        report.fraction_value = report.fraction.get_d();
        report.scaled = report.fraction_value * std::sqrt(static_cast<double>(n));
    }
    return report;
}

std::vector<FractionReport> fraction_scaling_table(std::span<const std::int64_t> n_values,
                                                   const Restriction& r) {
    std::vector<FractionReport> out;
    out.reserve(n_values.size());
    for (std::int64_t n : n_values) out.push_back(graphical_fraction(n, r));
    return out;
}

}  // namespace mupart
