#include "mupart/partition.hpp"

namespace mupart {

std::int64_t count_parts_at_least(const std::vector<std::int64_t>& parts_desc,
                                  std::int64_t k) {
    // parts_desc is weakly decreasing; first index with part < k ends the run.
    auto it = std::lower_bound(parts_desc.begin(), parts_desc.end(), k, std::greater_equal<>());
    return static_cast<std::int64_t>(it - parts_desc.begin());
}

std::int64_t durfee_square(const std::vector<std::int64_t>& parts_desc) {
    std::int64_t k = 0;
    while (static_cast<std::size_t>(k) < parts_desc.size() &&
           parts_desc[static_cast<std::size_t>(k)] >= k + 1)
        ++k;
    return k;
}

PartitionStats stats(const Partition& p) {
    PartitionStats st;
    if (p.empty()) return st;

    const auto& d = p.parts;
    std::int64_t y1 = d.front();

    st.y.assign(d.begin(), d.end());
    st.x.reserve(static_cast<std::size_t>(y1));
    for (std::int64_t k = 1; k <= y1; ++k) st.x.push_back(count_parts_at_least(d, k));

    st.durfee = durfee_square(d);
    st.r.reserve(static_cast<std::size_t>(st.durfee));
    for (std::int64_t k = 1; k <= st.durfee; ++k)
        st.r.push_back(st.y[static_cast<std::size_t>(k - 1)] -
                       st.x[static_cast<std::size_t>(k - 1)]);
    return st;
}

std::vector<Partition> enumerate(std::int64_t n, const Restriction& r) {
    std::vector<Partition> out;
    for_each_partition(n, r, [&](const std::vector<std::int64_t>& parts) {
        Partition p;
        p.parts = parts;
        out.push_back(std::move(p));
    });
    return out;
}

}  // namespace mupart
