#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mupart/restriction.hpp"

namespace mupart {

// eta(y) = alpha*y + log(alpha * mu'(mu^-1(y))), the normalization under
// which the extreme parts follow the order-k Gumbel laws.
struct EtaTransform {
    double alpha;
    Restriction restriction;

    double eta(double y) const;

    // Monotone bisection to 1e-12 absolute.  Throws std::domain_error when a
    // monotone bracket cannot be established (eta is non-monotone for some
    // restrictions on parts of the negative axis).
    double eta_inv(double x) const;
};

// Order-k limit law: density e^{-e^{-x}} e^{-kx} / (k-1)!, mode at -log k.
double gumbel_order_pdf(std::int64_t k, double x);

// CDF of the order-k law: the regularized upper incomplete gamma Q(k, e^{-y}).
double gumbel_order_cdf(std::int64_t k, double y);

// E_k[f]: adaptive quadrature of f against the order-k density over
// [-log k - 40, 40] with mode-centered breakpoints.  Throws IntegrationError
// on non-convergence.
double gumbel_expect(std::int64_t k, const std::function<double(double)>& f,
                     double rel_tol = 1e-10);

// |E_n[g^3]| / E_n[g^2]^{3/2} with g(x) = x - mu^-1(x) under the odd
// extension; the full graphical-fraction bound is this ratio times n^{-1/2}.
// Exactly linear restrictions use the cancelled form |E_n[x^3]|/E_n[x^2]^{3/2}
// (the 0/0 limit of the general expression as mu -> identity).
// Throws std::domain_error when the second moment degenerates for a
// nonlinear restriction.
double fraction_ratio(std::int64_t n, const Restriction& r);

// Berry-Esseen-type bound 6 r_n / s_n^3 from per-term variances and third
// absolute moments.
struct EsseenInputs {
    std::vector<double> sigma_sq;  // sigma_k^2
    std::vector<double> rho;       // rho_k

    double s_sq() const;
    double r_sum() const;
};
double esseen_bound(const EsseenInputs& e);

// First three moments of the rank limit law under the alpha-cancelled
// simplification: E_k[g], E_k[g^2], E_k[g^3] with g(x) = x - mu^-1(x).
// The cancelled moments do not depend on alpha (it is validated and kept for
// parity with rank_density, which does).
struct RankMoments {
    double mean;
    double second;
    double third;
};
RankMoments rank_moments(std::int64_t k, const Restriction& r, double alpha);

// Rank limit density: the convolution density of (eta(W) - eta(mu^-1(V)))/alpha
// with W, V independent order-k Gumbel variables, evaluated by nested
// quadrature on each grid point.  Failures are reported per point.
struct RankDensityPoint {
    double r = 0.0;
    double value = 0.0;
    bool converged = false;
};
std::vector<RankDensityPoint> rank_density(std::int64_t k, const Restriction& r, double alpha,
                                           std::span<const double> grid);

// Saddle-point log-asymptotic for the law of the number of parts:
// -e^{-alpha*mu(x)} / (alpha*mu'(x)).  Throws std::domain_error when
// mu'(x) = 0.
double log_cdf_num_parts(double x, const Restriction& r, double alpha);

// Critical lower bound l_n = mu(log n) - log n (natural logarithm), n >= 3.
double critical_lower_bound(std::int64_t n, const Restriction& r);

}  // namespace mupart
