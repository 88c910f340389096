#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "mupart/restriction.hpp"

namespace mupart {

// Exact counts of restricted partitions by dynamic programming over the
// ordered allowed-part list.  Counts are arbitrary precision: identity counts
// overflow 64 bits near n ~ 400.
//
// count(n) tables grow on demand and are cached; count_with_max_parts runs a
// dedicated (remainder, parts-budget) table per call.
class CountTable {
public:
    explicit CountTable(Restriction r) : r_(std::move(r)) {}

    const Restriction& restriction() const { return r_; }

    // Number of restricted partitions of n (count(0) = 1).
    const mpz_class& count(std::int64_t n);

    // Number of restricted partitions of n with at most max_parts parts.
    mpz_class count_with_max_parts(std::int64_t n, std::int64_t max_parts) const;

private:
    void grow(std::int64_t n);

    Restriction r_;
    std::vector<mpz_class> dp_;  // dp_[j] = count(j), valid once built
};

mpz_class count(std::int64_t n, const Restriction& r);
mpz_class count_with_max_parts(std::int64_t n, std::int64_t max_parts, const Restriction& r);

}  // namespace mupart
