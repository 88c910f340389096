#include "mupart/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "mupart/errors.hpp"
#include "mupart/quadrature.hpp"

namespace mupart {

double EtaTransform::eta(double y) const {
    double slope = restriction.mu_prime(restriction.mu_inv(y));
    return alpha * y + std::log(alpha * slope);
}

double EtaTransform::eta_inv(double x) const {
    if (alpha <= 0.0) throw std::domain_error("eta_inv: alpha must be positive");

    // mu' is the constant m for the exactly-linear family, so eta inverts in
    // closed form.
    if (restriction.exactly_linear()) {
        double c = std::log(alpha * static_cast<double>(restriction.linear_slope()));
        return (x - c) / alpha;
    }

    // Prefer the analytic branch y >= 1, where eta is increasing for the
    // builtin restrictions.  Below eta(1) fall back to the extended domain;
    // there eta can fold (binary does on (-1/alpha, -1)), which the residual
    // check turns into a domain error instead of a wrong-branch answer.
    double lo, hi;
    if (x >= eta(1.0)) {
        lo = 1.0;
        hi = std::max(2.0, x / alpha);
        int iter = 0;
        while (eta(hi) < x) {
            hi *= 2.0;
            if (++iter > 200)
                throw std::domain_error("eta_inv: no upper bracket (eta non-monotone?)");
        }
    } else {
        hi = 1.0;
        lo = std::min(-1.0, x / alpha);
        double step = std::max(1.0, 0.5 * std::fabs(lo));
        int iter = 0;
        while (eta(lo) > x) {
            lo -= step;
            step *= 2.0;
            if (++iter > 200)
                throw std::domain_error("eta_inv: no lower bracket (eta non-monotone?)");
        }
    }

    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (eta(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    double y = 0.5 * (lo + hi);
    if (std::fabs(eta(y) - x) > 1e-8 * std::max(1.0, std::fabs(x)))
        throw std::domain_error("eta_inv: bisection residual too large (eta non-monotone?)");
    return y;
}

double gumbel_order_pdf(std::int64_t k, double x) {
    if (k < 1) throw std::invalid_argument("gumbel_order_pdf: k must be >= 1");
    // exp(-e^{-x} - kx - lgamma(k)), recentred at the mode -log k:
    // with delta = x + log k the exponent is -k(e^{-delta} - 1 + delta) plus a
    // constant.  The direct form cancels three ~k log k sized terms and the
    // k = 10^6 integrands inherit O(k eps) noise; expm1 keeps the
    // delta-dependence fully accurate.
    double kk = static_cast<double>(k);
    double delta = x + std::log(kk);
    double shape = std::expm1(-delta) + delta;  // >= 0, ~ delta^2/2 near 0
    double log_norm = kk * (std::log(kk) - 1.0) - std::lgamma(kk);
    return std::exp(log_norm - kk * shape);
}

double gumbel_order_cdf(std::int64_t k, double y) {
    if (k < 1) throw std::invalid_argument("gumbel_order_cdf: k must be >= 1");
    // P(eta-normalized order-k extreme <= y) = Q(k, e^{-y}).
    double t = std::exp(-y);
    if (t == 0.0) return 1.0;
    return boost::math::gamma_q(static_cast<double>(k), t);
}

namespace {

std::vector<double> mode_breakpoints(std::int64_t k) {
    double mode = -std::log(static_cast<double>(k));
    double s = 1.0 / std::sqrt(static_cast<double>(k));
    return {mode - 30.0 * s, mode - 8.0 * s, mode - 2.0 * s, mode,
            mode + 2.0 * s, mode + 8.0 * s, mode + 30.0 * s,
            mode + 2.0,     mode + 10.0};
}

double expect_impl(std::int64_t k, const std::function<double(double)>& f, double rel_tol) {
    double mode = -std::log(static_cast<double>(k));
    double lo = mode - 40.0;
    double hi = 40.0;
    auto integrand = [&](double x) { return f(x) * gumbel_order_pdf(k, x); };
    return quad::integrate(integrand, lo, hi, mode_breakpoints(k), rel_tol, 1e-250);
}

}  // namespace

double gumbel_expect(std::int64_t k, const std::function<double(double)>& f, double rel_tol) {
    if (k < 1) throw std::invalid_argument("gumbel_expect: k must be >= 1");
    return expect_impl(k, f, rel_tol);
}

double fraction_ratio(std::int64_t n, const Restriction& r) {
    if (n < 2) throw std::invalid_argument("fraction_ratio: n must be >= 2");

    if (r.exactly_linear()) {
        // g(x) = x(1 - 1/m); the ratio cancels m, and the m = 1 limit is the
        // plain-moment form.
        double e2 = gumbel_expect(n, [](double x) { return x * x; });
        double e3 = gumbel_expect(n, [](double x) { return x * x * x; });
        return std::fabs(e3) / std::pow(e2, 1.5);
    }

    auto g = [&r](double x) { return x - r.mu_inv(x); };
    double e2 = gumbel_expect(n, [&](double x) { return g(x) * g(x); });
    double e3 = gumbel_expect(n, [&](double x) { return g(x) * g(x) * g(x); });
    if (e2 < 1e-30)
        throw std::domain_error("fraction_ratio: degenerate second moment for nonlinear mu");
    return std::fabs(e3) / std::pow(e2, 1.5);
}

double EsseenInputs::s_sq() const {
    double s = 0.0;
    for (double v : sigma_sq) {
        if (!(v >= 0.0)) throw std::invalid_argument("EsseenInputs: sigma_k^2 must be >= 0");
        s += v;
    }
    return s;
}

double EsseenInputs::r_sum() const {
    double s = 0.0;
    for (double v : rho) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("EsseenInputs: rho_k must be finite and >= 0");
        s += v;
    }
    return s;
}

double esseen_bound(const EsseenInputs& e) {
    double s2 = e.s_sq();
    if (s2 <= 0.0) throw std::domain_error("esseen_bound: degenerate variance (s_n^2 = 0)");
    return 6.0 * e.r_sum() / std::pow(s2, 1.5);
}

RankMoments rank_moments(std::int64_t k, const Restriction& r, double alpha) {
    if (k < 1) throw std::invalid_argument("rank_moments: k must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("rank_moments: alpha must be positive");

    auto g = [&r](double x) { return x - r.mu_inv(x); };
    RankMoments m{};
    m.mean = gumbel_expect(k, [&](double x) { return g(x); });
    m.second = gumbel_expect(k, [&](double x) { return g(x) * g(x); });
    m.third = gumbel_expect(k, [&](double x) { return g(x) * g(x) * g(x); });
    return m;
}

std::vector<RankDensityPoint> rank_density(std::int64_t k, const Restriction& r, double alpha,
                                           std::span<const double> grid) {
    if (k < 1) throw std::invalid_argument("rank_density: k must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("rank_density: alpha must be positive");

    EtaTransform t{alpha, r};

    // Density of A - B at alpha*r, scaled by alpha, where A = eta(W) and
    // B = eta(mu^-1(V)) with W, V iid order-k Gumbel.  Substituting the
    // Gumbel variable of B turns the inner integral into an expectation
    // against the order-k density; f_A needs eta^-1 by bisection.
    const bool linear_family = r.exactly_linear();
    auto eta_prime = [&](double u) {
        if (linear_family) return alpha;  // log mu' term is constant
        double h = 1e-4 * std::max(1.0, std::fabs(u));
        return (t.eta(u + h) - t.eta(u - h)) / (2.0 * h);
    };
    auto f_A = [&](double y) {
        double u = t.eta_inv(y);
        double slope = eta_prime(u);
        if (!(slope > 0.0)) throw std::domain_error("rank_density: eta not increasing");
        return gumbel_order_pdf(k, u) / slope;
    };

    double mode = -std::log(static_cast<double>(k));
    double lo = mode - 40.0;
    double hi = 40.0;
    auto breakpoints = mode_breakpoints(k);

    std::vector<RankDensityPoint> out;
    out.reserve(grid.size());
    for (double rv : grid) {
        RankDensityPoint point;
        point.r = rv;
        try {
            auto integrand = [&](double v) {
                return f_A(alpha * rv + t.eta(r.mu_inv(v))) * gumbel_order_pdf(k, v);
            };
            // The density itself is O(1); far-tail points need an absolute
            // floor or the refinement chases noise.
            quad::Result res = quad::integrate_adaptive(integrand, lo, hi, breakpoints, 1e-8, 1e-12);
            point.value = alpha * res.value;
            point.converged = res.converged;
        } catch (const std::domain_error&) {
            point.value = std::numeric_limits<double>::quiet_NaN();
            point.converged = false;
        }
        out.push_back(point);
    }
    return out;
}

double log_cdf_num_parts(double x, const Restriction& r, double alpha) {
    if (x < 1.0) throw std::invalid_argument("log_cdf_num_parts: x must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("log_cdf_num_parts: alpha must be positive");
    double slope = r.mu_prime(x);
    if (slope == 0.0) throw std::domain_error("log_cdf_num_parts: mu'(x) = 0");
    return -std::exp(-alpha * r.mu(x)) / (alpha * slope);
}

double critical_lower_bound(std::int64_t n, const Restriction& r) {
    if (n < 3) throw std::invalid_argument("critical_lower_bound: n must be >= 3");
    double logn = std::log(static_cast<double>(n));
    return r.mu(logn) - logn;
}

}  // namespace mupart
