#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mupart/partition.hpp"
#include "mupart/restriction.hpp"

namespace mupart {

// Saddle parameters for the size-n Boltzmann measure: q solves
// n = sum_{m in mu(N)} m q^m / (1 - q^m), alpha = -log q.  The retained part
// list is truncated where the expected mass m q^m/(1-q^m) drops below
// 1e-15 * n; larger parts are unobservable at double precision.
//
// The measure's normalizing constant is deliberately absent everywhere:
// multiplicities factorize over parts and rejection conditioning cancels it.
struct BoltzmannParams {
    std::int64_t n = 0;
    double q = 0.0;
    double alpha = 0.0;
    Restriction restriction = Restriction::identity();
    std::vector<std::int64_t> parts;  // retained (truncated) part list

    double expected_size() const;  // sum over retained parts, ~ n after solving
};

// Bisection on alpha = -log q; the expected size is strictly decreasing in
// alpha.  Residual target |S(q) - n| <= tol * n.  Throws SolverError on
// non-convergence, std::invalid_argument on a bad tolerance (tol in (0, 1e-6]).
BoltzmannParams solve_q(std::int64_t n, const Restriction& r, double tol = 1e-9);

// E[Z_m] = q^m / (1 - q^m).  Throws std::domain_error if m is not allowed.
double expected_multiplicity(const BoltzmannParams& params, std::int64_t m);

// Geometric multiplicities of one free (unconditioned) sample.
struct MultiplicityVector {
    std::map<std::int64_t, std::int64_t> z;  // part -> multiplicity, zeros omitted

    std::int64_t weight() const;  // sum of m * Z_m
    Partition to_partition() const;
};

// One draw of all retained multiplicities: Z_m = floor(log U / (m log q)),
// with U from a counter-based stream keyed by (seed, part, attempt).
// Deterministic and reproducible across platforms and thread counts.
MultiplicityVector sample(const BoltzmannParams& params, std::uint64_t seed,
                          std::uint64_t attempt = 0);

// Rejection sampling until the sampled weight lands in
// [n(1-window), n(1+window)]; window = 0 demands the weight exactly n and is
// refused above n = 200 unless allow_large_exact is set (acceptance decays
// polynomially; the windowed path is the large-n route).
// Throws RejectionFailure when max_tries is exhausted.
Partition sample_conditioned(const BoltzmannParams& params, double window,
                             std::uint64_t max_tries, std::uint64_t seed,
                             bool allow_large_exact = false);

// Per-partition statistics of the conditioned law.
enum class Statistic {
    NumPartsAtLeastK,      // X_k
    KthLargestPart,        // Y_k
    MuOfKthLargestPart,    // mu(Y_k), int64-saturating
    KthRank,               // R_k = Y_k - X_k
};

struct StatisticSpec {
    Statistic stat = Statistic::NumPartsAtLeastK;
    std::int64_t k = 1;
};

// Parses "X1", "X:2", "Yk:3", "Y:3", "muY:2", "R:1".  Throws
// std::invalid_argument on anything else.
StatisticSpec parse_statistic(const std::string& text);

std::int64_t evaluate_statistic(const std::vector<std::int64_t>& parts_desc,
                                const StatisticSpec& spec, const Restriction& r);

// Empirical histogram over conditioned samples; counts sum to `samples`.
struct EmpiricalLaw {
    std::map<std::int64_t, std::uint64_t> counts;
    std::uint64_t samples = 0;
    std::uint64_t attempts = 0;  // rejection attempts consumed for the stream

    std::map<std::int64_t, double> frequencies() const;  // total mass 1
    double acceptance_rate() const {
        return attempts > 0 ? static_cast<double>(samples) / static_cast<double>(attempts) : 0.0;
    }
};

// Laws of several statistics measured on the same conditioned sample stream
// (one pass).  Deterministic given seed.
std::vector<EmpiricalLaw> empirical_laws(const BoltzmannParams& params,
                                         std::span<const StatisticSpec> stats,
                                         std::uint64_t samples, double window,
                                         std::uint64_t seed,
                                         std::uint64_t max_tries_per_sample = 2'000'000,
                                         bool allow_large_exact = false);

EmpiricalLaw empirical_law(const BoltzmannParams& params, const StatisticSpec& spec,
                           std::uint64_t samples, double window, std::uint64_t seed);

// Half L1 distance between two (normalized) histograms.
double total_variation(const EmpiricalLaw& a, const EmpiricalLaw& b);
double total_variation(const std::map<std::int64_t, double>& a,
                       const std::map<std::int64_t, double>& b);

}  // namespace mupart
