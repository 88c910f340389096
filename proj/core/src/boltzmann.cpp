#include "mupart/boltzmann.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mupart/errors.hpp"

namespace mupart {

namespace {

constexpr std::int64_t kNoPart = std::numeric_limits<std::int64_t>::max();

double term(double alpha, std::int64_t m) {
    double e = std::exp(-alpha * static_cast<double>(m));
    return static_cast<double>(m) * e / (1.0 - e);
}

// Expected size sum_{m} m q^m/(1-q^m) truncated at relative mass 1e-15 * n.
double expected_size_at(double alpha, const Restriction& r, std::int64_t n) {
    const double cutoff = 1e-15 * static_cast<double>(n);
    double inv_alpha = 1.0 / alpha;
    double sum = 0.0;
    Restriction::PartCursor cursor(r);
    for (std::int64_t count = 0; count < 100'000'000; ++count) {
        std::int64_t m = cursor.next();
        if (m == kNoPart) break;
        double t = term(alpha, m);
        sum += t;
        // m q^m/(1-q^m) is decreasing past m ~ 1/alpha; safe to stop there.
        if (t < cutoff && static_cast<double>(m) > inv_alpha) break;
    }
    return sum;
}

// splitmix64: the counter-based stream generator.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in (0, 1), keyed by (seed, part, attempt).
double uniform_at(std::uint64_t seed, std::int64_t part, std::uint64_t attempt) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(part));
    h = splitmix64(h ^ attempt);
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

double BoltzmannParams::expected_size() const {
    double sum = 0.0;
    for (std::int64_t m : parts) sum += term(alpha, m);
    return sum;
}

BoltzmannParams solve_q(std::int64_t n, const Restriction& r, double tol) {
    if (n < 1) throw std::invalid_argument("solve_q: n must be >= 1");
    if (!(tol > 0.0) || tol > 1e-6)
        throw std::invalid_argument("solve_q: tol must lie in (0, 1e-6]");

    const double target = static_cast<double>(n);

    // alpha <= pi/sqrt(6n) for every restriction, so the identity value is an
    // upper bracket in alpha (expected size decreases in alpha).
    double alpha_hi = M_PI / std::sqrt(6.0 * target);
    int expansions = 0;
    while (expected_size_at(alpha_hi, r, n) > target) {
        alpha_hi *= 2.0;
        if (++expansions > 200) throw SolverError("solve_q: failed to bracket the saddle point");
    }

    double alpha_lo = alpha_hi;
    expansions = 0;
    while (expected_size_at(alpha_lo, r, n) < target) {
        alpha_lo *= 0.5;
        if (++expansions > 200) throw SolverError("solve_q: failed to bracket the saddle point");
    }

    double alpha = 0.5 * (alpha_lo + alpha_hi);
    bool converged = false;
    for (int i = 0; i < 400; ++i) {
        alpha = 0.5 * (alpha_lo + alpha_hi);
        double s = expected_size_at(alpha, r, n);
        if (std::fabs(s - target) <= tol * target) {
            converged = true;
            break;
        }
        if (s > target)
            alpha_lo = alpha;
        else
            alpha_hi = alpha;
    }
    if (!converged) throw SolverError("solve_q: residual target not reached");

    BoltzmannParams params;
    params.n = n;
    params.alpha = alpha;
    params.q = std::exp(-alpha);
    params.restriction = r;

    const double cutoff = 1e-15 * target;
    Restriction::PartCursor cursor(r);
    for (std::int64_t count = 0; count < 100'000'000; ++count) {
        std::int64_t m = cursor.next();
        if (m == kNoPart) break;
        double t = term(alpha, m);
        params.parts.push_back(m);
        if (t < cutoff && static_cast<double>(m) > 1.0 / alpha) break;
    }
    return params;
}

double expected_multiplicity(const BoltzmannParams& params, std::int64_t m) {
    if (!params.restriction.is_part(m))
        throw std::domain_error("expected_multiplicity: " + std::to_string(m) +
                                " is not an allowed part");
    double e = std::exp(-params.alpha * static_cast<double>(m));
    return e / (1.0 - e);
}

std::int64_t MultiplicityVector::weight() const {
    std::int64_t w = 0;
    for (const auto& [m, count] : z) w += m * count;
    return w;
}

Partition MultiplicityVector::to_partition() const {
    Partition p;
    for (auto it = z.rbegin(); it != z.rend(); ++it)
        for (std::int64_t c = 0; c < it->second; ++c) p.parts.push_back(it->first);
    return p;
}

MultiplicityVector sample(const BoltzmannParams& params, std::uint64_t seed,
                          std::uint64_t attempt) {
    MultiplicityVector mv;
    const double log_q = -params.alpha;
    for (std::int64_t m : params.parts) {
        double u = uniform_at(seed, m, attempt);
        // Inverse transform: P(Z >= j) = q^{m j}.
        auto zm = static_cast<std::int64_t>(std::log(u) / (static_cast<double>(m) * log_q));
        if (zm > 0) mv.z.emplace(m, zm);
    }
    return mv;
}

namespace {

// Shared by sample_conditioned and empirical_laws so the two agree on the
// acceptance rule and the error report.
MultiplicityVector conditioned_draw(const BoltzmannParams& params, double window,
                                    std::uint64_t max_tries, std::uint64_t seed,
                                    std::uint64_t& attempt_counter, std::uint64_t accepts_so_far) {
    const double target = static_cast<double>(params.n);
    const double lo = target * (1.0 - window);
    const double hi = target * (1.0 + window);
    for (std::uint64_t t = 0; t < max_tries; ++t) {
        MultiplicityVector mv = sample(params, seed, attempt_counter++);
        auto w = static_cast<double>(mv.weight());
        if (w >= lo && w <= hi) return mv;
    }
    throw RejectionFailure(attempt_counter, accepts_so_far);
}

}  // namespace

Partition sample_conditioned(const BoltzmannParams& params, double window,
                             std::uint64_t max_tries, std::uint64_t seed,
                             bool allow_large_exact) {
    if (window < 0.0 || window >= 1.0)
        throw std::invalid_argument("sample_conditioned: window must lie in [0, 1)");
    if (window == 0.0 && params.n > 200 && !allow_large_exact)
        throw std::invalid_argument(
            "sample_conditioned: exact conditioning beyond n = 200 needs an explicit override");
    std::uint64_t attempts = 0;
    return conditioned_draw(params, window, max_tries, seed, attempts, 0).to_partition();
}

StatisticSpec parse_statistic(const std::string& text) {
    auto parse_k = [&](std::size_t pos) -> std::int64_t {
        std::string arg = text.substr(pos);
        std::size_t used = 0;
        long long k = std::stoll(arg, &used);
        if (used != arg.size() || k < 1)
            throw std::invalid_argument("statistic index must be a positive integer");
        return k;
    };
    if (text == "X1") return {Statistic::NumPartsAtLeastK, 1};
    if (text.rfind("X:", 0) == 0) return {Statistic::NumPartsAtLeastK, parse_k(2)};
    if (text.rfind("Yk:", 0) == 0) return {Statistic::KthLargestPart, parse_k(3)};
    if (text.rfind("Y:", 0) == 0) return {Statistic::KthLargestPart, parse_k(2)};
    if (text.rfind("muY:", 0) == 0) return {Statistic::MuOfKthLargestPart, parse_k(4)};
    if (text.rfind("R:", 0) == 0) return {Statistic::KthRank, parse_k(2)};
    throw std::invalid_argument("unknown statistic: '" + text + "'");
}

std::int64_t evaluate_statistic(const std::vector<std::int64_t>& parts_desc,
                                const StatisticSpec& spec, const Restriction& r) {
    auto kth_largest = [&]() -> std::int64_t {
        return static_cast<std::size_t>(spec.k) <= parts_desc.size()
                   ? parts_desc[static_cast<std::size_t>(spec.k - 1)]
                   : 0;
    };
    switch (spec.stat) {
        case Statistic::NumPartsAtLeastK:
            return count_parts_at_least(parts_desc, spec.k);
        case Statistic::KthLargestPart:
            return kth_largest();
        case Statistic::MuOfKthLargestPart: {
            double v = r.mu(static_cast<double>(kth_largest()));
            if (v >= 9.2e18) return std::numeric_limits<std::int64_t>::max();  // saturate
            return std::llround(v);
        }
        case Statistic::KthRank:
            return kth_largest() - count_parts_at_least(parts_desc, spec.k);
    }
    return 0;
}

std::map<std::int64_t, double> EmpiricalLaw::frequencies() const {
    std::map<std::int64_t, double> freq;
    if (samples == 0) return freq;
    for (const auto& [v, c] : counts)
        freq[v] = static_cast<double>(c) / static_cast<double>(samples);
    return freq;
}

std::vector<EmpiricalLaw> empirical_laws(const BoltzmannParams& params,
                                         std::span<const StatisticSpec> stats,
                                         std::uint64_t samples, double window,
                                         std::uint64_t seed, std::uint64_t max_tries_per_sample,
                                         bool allow_large_exact) {
    if (samples < 1) throw std::invalid_argument("empirical_laws: samples must be >= 1");
    if (window < 0.0 || window >= 1.0)
        throw std::invalid_argument("empirical_laws: window must lie in [0, 1)");
    if (window == 0.0 && params.n > 200 && !allow_large_exact)
        throw std::invalid_argument(
            "empirical_laws: exact conditioning beyond n = 200 needs an explicit override");

    std::vector<EmpiricalLaw> laws(stats.size());
    std::uint64_t attempts = 0;
    std::vector<std::int64_t> buffer;
    for (std::uint64_t i = 0; i < samples; ++i) {
        MultiplicityVector mv =
            conditioned_draw(params, window, max_tries_per_sample, seed, attempts, i);
        buffer.clear();
        for (auto it = mv.z.rbegin(); it != mv.z.rend(); ++it)
            for (std::int64_t c = 0; c < it->second; ++c) buffer.push_back(it->first);
        for (std::size_t s = 0; s < stats.size(); ++s) {
            ++laws[s].counts[evaluate_statistic(buffer, stats[s], params.restriction)];
            ++laws[s].samples;
        }
    }
    for (auto& law : laws) law.attempts = attempts;
    return laws;
}

EmpiricalLaw empirical_law(const BoltzmannParams& params, const StatisticSpec& spec,
                           std::uint64_t samples, double window, std::uint64_t seed) {
    StatisticSpec specs[1] = {spec};
    return empirical_laws(params, specs, samples, window, seed)[0];
}

double total_variation(const std::map<std::int64_t, double>& a,
                       const std::map<std::int64_t, double>& b) {
    double sum = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            sum += std::fabs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            sum += std::fabs(ib->second);
            ++ib;
        } else {
            sum += std::fabs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * sum;
}

double total_variation(const EmpiricalLaw& a, const EmpiricalLaw& b) {
    return total_variation(a.frequencies(), b.frequencies());
}

}  // namespace mupart
