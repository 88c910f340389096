#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mupart/restriction.hpp"

namespace mupart {

// A partition: weakly decreasing positive parts.
struct Partition {
    std::vector<std::int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        for (std::int64_t v : parts)
            if (v < 1) throw std::invalid_argument("partition parts must be positive");
    }

    std::int64_t sum() const {
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    }
    std::size_t size() const { return parts.size(); }
    bool empty() const { return parts.empty(); }
};

// Per-partition statistics, 1-indexed through the accessors:
//   X_k = number of parts >= k          (k = 1..largest part)
//   Y_k = k-th largest part             (k = 1..number of parts)
//   R_k = Y_k - X_k                     (k = 1..K)
//   K   = Durfee square: largest k with k <= Y_k (0 for the empty partition)
struct PartitionStats {
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> y;
    std::vector<std::int64_t> r;
    std::int64_t durfee = 0;

    std::int64_t X(std::int64_t k) const { return at(x, k); }
    std::int64_t Y(std::int64_t k) const { return at(y, k); }
    std::int64_t R(std::int64_t k) const { return at(r, k); }

private:
    static std::int64_t at(const std::vector<std::int64_t>& v, std::int64_t k) {
        if (k < 1 || static_cast<std::size_t>(k) > v.size())
            throw std::out_of_range("statistic index out of range");
        return v[static_cast<std::size_t>(k - 1)];
    }
};

PartitionStats stats(const Partition& p);

// Number of parts >= k for a descending part list (X_k without building the
// full stats object).
std::int64_t count_parts_at_least(const std::vector<std::int64_t>& parts_desc, std::int64_t k);

// Durfee square of a descending part list.
std::int64_t durfee_square(const std::vector<std::int64_t>& parts_desc);

// Enumerate every partition of n with parts restricted to r, each exactly
// once, in lexicographically decreasing order of part lists.  fn receives the
// current (descending) part list; the buffer is reused between calls.
// n = 0 yields exactly the empty partition.
template <class Fn>
void for_each_partition(std::int64_t n, const Restriction& r, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<std::int64_t> parts;  // ascending
    if (n > 0) parts = r.parts_up_to(n);
    std::vector<std::int64_t> current;

    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t cap) -> void {
        if (remaining == 0) {
            fn(const_cast<const std::vector<std::int64_t>&>(current));
            return;
        }
        std::int64_t bound = std::min(remaining, cap);
        auto it = std::upper_bound(parts.begin(), parts.end(), bound);
        for (auto i = static_cast<std::ptrdiff_t>(it - parts.begin()) - 1; i >= 0; --i) {
            current.push_back(parts[static_cast<std::size_t>(i)]);
            self(self, remaining - parts[static_cast<std::size_t>(i)],
                 parts[static_cast<std::size_t>(i)]);
            current.pop_back();
        }
    };
    rec(rec, n, n);
}

std::vector<Partition> enumerate(std::int64_t n, const Restriction& r);

}  // namespace mupart
