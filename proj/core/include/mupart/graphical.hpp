#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mupart/partition.hpp"
#include "mupart/restriction.hpp"

namespace mupart {

// Nash-Williams rank criterion: graphical iff the sum is even and
// sum_{l<=k} R_l <= -k for every k up to the Durfee square.
// The empty partition is graphical.
bool is_graphical_nash_williams(const std::vector<std::int64_t>& parts_desc);
bool is_graphical_nash_williams(const Partition& p);

// Erdos-Gallai inequalities, used as an independent criterion:
// sum even and for all k: sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
bool is_graphical_erdos_gallai(const std::vector<std::int64_t>& parts_desc);
bool is_graphical_erdos_gallai(const Partition& p);

// Ground-truth realizability by exhaustive search over simple graphs on
// (number of parts) labeled vertices.  Throws std::domain_error beyond
// 8 parts.
bool is_realizable_bruteforce(const Partition& p);

// Exact graphical census of the restricted partitions of an even n.
struct FractionReport {
    std::int64_t n = 0;
    mpz_class total;
    mpz_class graphical;
    mpq_class fraction;          // graphical / total, exact (0 when total = 0)
    double fraction_value = 0.0;
    double scaled = 0.0;         // fraction * sqrt(n)
};

// Throws std::domain_error for odd n.
FractionReport graphical_fraction(std::int64_t n, const Restriction& r);

std::vector<FractionReport> fraction_scaling_table(std::span<const std::int64_t> n_values,
                                                   const Restriction& r);

}  // namespace mupart
