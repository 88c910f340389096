#include "mupart/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "mupart/errors.hpp"
#include "mupart/quadrature.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using mupart::EsseenInputs;
using mupart::EtaTransform;
using mupart::Restriction;

namespace {

void eta_transform() {
    EtaTransform id{0.1, Restriction::identity()};
    CHECK_CLOSE(id.eta(10.0), 1.0 + std::log(0.1), 1e-12);  // -1.302585...
    for (double y : {-20.0, -3.0, 0.5, 1.0, 4.0, 50.0})
        CHECK_CLOSE(id.eta(y), 0.1 * y + std::log(0.1), 1e-12);
    for (double x : {-3.0, -1.0, 0.0, 2.0, 5.0})
        CHECK_CLOSE(id.eta_inv(x), (x - std::log(0.1)) / 0.1, 1e-8);

    // binary: eta(y) - alpha y = log(alpha * y * ln 2) for y >= 1.
    EtaTransform bin{0.05, Restriction::binary()};
    for (double y : {1.0, 2.0, 10.0, 100.0, 3000.0})
        CHECK_CLOSE(bin.eta(y) - 0.05 * y, std::log(0.05 * y * std::log(2.0)), 1e-10);

    // Round trips on the tested (positive) domains.
    for (const auto& r : {Restriction::identity(), Restriction::linear(3),
                          Restriction::binary()}) {
        EtaTransform t{0.07, r};
        // Round trips live on the analytic branch y >= 1 (binary's extension
        // folds below it); the linear family inverts everywhere.
        for (double y : {1.0, 2.0, 7.5, 40.0, 300.0})
            CHECK_CLOSE(t.eta_inv(t.eta(y)), y, 1e-8);
    }
    {
        // smooth_cutoff's eta dips where the cutoff relaxes (eta' = alpha -
        // (mu^-1)''/(mu^-1)' < 0 near y ~ 5 for small alpha), so eta only
        // inverts beyond the fold.
        EtaTransform t{0.07, Restriction::smooth_cutoff()};
        for (double y : {40.0, 300.0}) CHECK_CLOSE(t.eta_inv(t.eta(y)), y, 1e-8);
    }
    for (const auto& r : {Restriction::identity(), Restriction::linear(3)}) {
        EtaTransform t{0.07, r};
        for (double y : {-20.0, -0.5, 0.5, 25.0})
            CHECK_CLOSE(t.eta_inv(t.eta(y)), y, 1e-8);
    }

    EtaTransform bad{-1.0, Restriction::identity()};
    CHECK_THROWS(bad.eta_inv(0.0), std::domain_error);
}

void gumbel_cdf() {
    CHECK_CLOSE(mupart::gumbel_order_cdf(1, 0.0), std::exp(-1.0), 1e-12);
    CHECK_CLOSE(mupart::gumbel_order_cdf(2, 0.0), 2.0 / std::exp(1.0), 1e-12);
    for (std::int64_t k : {1, 2, 5, 10, 50}) {
        CHECK_NEAR(mupart::gumbel_order_cdf(k, 60.0), 1.0, 1e-12);
        double prev = -1.0;
        for (int i = 0; i <= 50; ++i) {
            double y = -3.0 + 13.0 * i / 50.0;
            double c = mupart::gumbel_order_cdf(k, y);
            CHECK(c >= prev);  // nondecreasing
            prev = c;
            CHECK(c >= 0.0 && c <= 1.0);
            // Against the integer-order Poisson-sum closed form.
            CHECK_NEAR(c, oracles::upper_gamma_q_int(k, std::exp(-y)), 1e-10);
        }
    }

    // Against direct quadrature of the density (independent of the
    // incomplete-gamma route).
    for (std::int64_t k : {1, 2, 10}) {
        double mode = -std::log(static_cast<double>(k));
        for (double y : {-1.0, 0.0, 1.5, 4.0}) {
            double from_pdf = mupart::quad::integrate(
                [k](double x) { return mupart::gumbel_order_pdf(k, x); }, mode - 40.0, y,
                {mode - 2.0, mode, mode + 2.0}, 1e-11);
            CHECK_NEAR(mupart::gumbel_order_cdf(k, y), from_pdf, 1e-9);
        }
    }
}

void gumbel_expectations() {
    for (std::int64_t k : {1, 2, 5, 10, 100, 1000}) {
        CHECK_CLOSE(mupart::gumbel_expect(k, [](double) { return 1.0; }), 1.0, 1e-10);
        // Mode at -log k.
        double mode = -std::log(static_cast<double>(k));
        double peak = mupart::gumbel_order_pdf(k, mode);
        for (double eps : {0.05, 0.3}) {
            CHECK(peak > mupart::gumbel_order_pdf(k, mode - eps / std::sqrt(double(k))));
            CHECK(peak > mupart::gumbel_order_pdf(k, mode + eps / std::sqrt(double(k))));
        }
    }
    CHECK_CLOSE(mupart::gumbel_expect(1, [](double x) { return x; }),
                oracles::kEulerGamma, 1e-10);
    CHECK_CLOSE(mupart::gumbel_expect(2, [](double x) { return x; }),
                oracles::kEulerGamma - 1.0, 1e-10);
    for (std::int64_t k : {1, 2, 5, 10, 100}) {
        CHECK_CLOSE(mupart::gumbel_expect(k, [](double x) { return x; }),
                    oracles::gumbel_moment1(k), 1e-8);
        CHECK_CLOSE(mupart::gumbel_expect(k, [](double x) { return x * x; }),
                    oracles::gumbel_moment2(k), 1e-8);
        CHECK_CLOSE(mupart::gumbel_expect(k, [](double x) { return x * x * x; }),
                    oracles::gumbel_moment3(k), 1e-8);
    }
}

void ratio_linear_family() {
    // All exactly-linear restrictions route through the cancelled form.
    double base = mupart::fraction_ratio(100, Restriction::identity());
    for (std::int64_t m : {2, 3, 5})
        CHECK_CLOSE(mupart::fraction_ratio(100, Restriction::linear(m)), base, 1e-8);

    // Closed form at n = 100 from the polygamma oracle.
    double e2 = oracles::gumbel_moment2(100);
    double e3 = oracles::gumbel_moment3(100);
    CHECK_CLOSE(base, std::fabs(e3) / std::pow(e2, 1.5), 1e-8);

    // The nontrivial cancellation: the general g-path for linear(m) agrees
    // with the cancelled form.
    for (std::int64_t m : {2, 3}) {
        auto r = Restriction::linear(m);
        auto mom = mupart::rank_moments(50, r, 0.01);
        double general = std::fabs(mom.third) / std::pow(mom.second, 1.5);
        CHECK_CLOSE(general, mupart::fraction_ratio(50, r), 1e-8);
    }
}

void ratio_nonlinear() {
    // Nonlinear restrictions share the definition with rank_moments.
    auto bin = Restriction::binary();
    auto mom = mupart::rank_moments(100, bin, 0.02);
    CHECK(std::isfinite(mom.mean) && std::isfinite(mom.second) && std::isfinite(mom.third));
    CHECK(mom.second > 0.0);
    CHECK(mom.third != 0.0);
    CHECK_CLOSE(std::fabs(mom.third) / std::pow(mom.second, 1.5),
                mupart::fraction_ratio(100, bin), 1e-10);

    // identity: g vanishes identically, so the raw moments are all zero.
    auto idm = mupart::rank_moments(25, Restriction::identity(), 0.05);
    CHECK_EQ(idm.mean, 0.0);
    CHECK_EQ(idm.second, 0.0);
    CHECK_EQ(idm.third, 0.0);

    CHECK(mupart::fraction_ratio(1000, Restriction::smooth_cutoff()) > 0.0);
    CHECK_THROWS(mupart::rank_moments(10, Restriction::identity(), 0.0), std::invalid_argument);
    CHECK_THROWS(mupart::fraction_ratio(1, Restriction::identity()), std::invalid_argument);
}

void esseen() {
    EsseenInputs uniform;
    for (int i = 0; i < 25; ++i) {
        uniform.sigma_sq.push_back(1.0);
        uniform.rho.push_back(1.0);
    }
    CHECK_CLOSE(mupart::esseen_bound(uniform), 6.0 / std::sqrt(25.0), 1e-12);

    EsseenInputs single{{4.0}, {8.0}};
    CHECK_CLOSE(mupart::esseen_bound(single), 6.0, 1e-12);

    EsseenInputs degenerate{{0.0, 0.0}, {1.0, 1.0}};
    CHECK_THROWS(mupart::esseen_bound(degenerate), std::domain_error);
    EsseenInputs negative{{-1.0}, {1.0}};
    CHECK_THROWS(mupart::esseen_bound(negative), std::invalid_argument);

    // Inputs assembled from rank moments at a nonlinear restriction scale
    // like n^{-1/2} once divided out: s_n ~ sqrt(n) * const.
    auto mom = mupart::rank_moments(64, Restriction::binary(), 0.05);
    EsseenInputs from_ranks;
    for (int i = 0; i < 64; ++i) {
        from_ranks.sigma_sq.push_back(mom.second);
        from_ranks.rho.push_back(std::fabs(mom.third));
    }
    double bound = mupart::esseen_bound(from_ranks);
    CHECK_CLOSE(bound,
                6.0 * std::fabs(mom.third) / (std::sqrt(64.0) * std::pow(mom.second, 1.5)),
                1e-12);
}

void rank_density_identity_logistic() {
    // For the identity restriction and k = 1 the density is exactly the
    // logistic e^{-r}/(1+e^{-r})^2 (difference of two standard Gumbels),
    // independent of alpha.
    std::vector<double> grid;
    for (double r = -6.0; r <= 6.0 + 1e-9; r += 0.5) grid.push_back(r);
    auto pts = mupart::rank_density(1, Restriction::identity(), 0.05, grid);
    CHECK_EQ(pts.size(), grid.size());
    for (const auto& p : pts) {
        CHECK(p.converged);
        double e = std::exp(-p.r);
        double logistic = e / ((1.0 + e) * (1.0 + e));
        CHECK_CLOSE(p.value, logistic, 1e-6);
    }

    // Normalization over a wide grid.
    std::vector<double> wide;
    for (double r = -25.0; r <= 25.0 + 1e-9; r += 0.5) wide.push_back(r);
    auto wide_pts = mupart::rank_density(1, Restriction::identity(), 0.05, wide);
    double mass = 0.0;
    for (std::size_t i = 1; i < wide_pts.size(); ++i)
        mass += 0.5 * (wide_pts[i].value + wide_pts[i - 1].value) * 0.5;
    CHECK_NEAR(mass, 1.0, 1e-3);
}

void rank_density_mean_consistency() {
    // First moment against rank_moments for the linear family, where the
    // normalized difference law has mean exactly E_k[g].
    for (std::int64_t m : {1, 2}) {
        auto r = m == 1 ? Restriction::identity() : Restriction::linear(m);
        auto mom = mupart::rank_moments(2, r, 0.05);
        std::vector<double> wide;
        for (double v = -25.0; v <= 25.0 + 1e-9; v += 0.5) wide.push_back(v);
        auto pts = mupart::rank_density(2, r, 0.05, wide);
        double mass = 0.0, mean = 0.0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double mid = 0.5 * (pts[i].value + pts[i - 1].value);
            double rmid = 0.5 * (pts[i].r + pts[i - 1].r);
            mass += mid * 0.5;
            mean += rmid * mid * 0.5;
        }
        CHECK_NEAR(mass, 1.0, 1e-3);
        if (m == 1)
            CHECK_NEAR(mean, mom.mean, 0.01);  // both are 0 for identity
        else
            CHECK_CLOSE(mean, mom.mean, 0.01);
    }
}

void log_cdf() {
    // identity reduction: -e^{-alpha x}/alpha.
    for (double x : {1.0, 10.0, 300.0})
        CHECK_CLOSE(mupart::log_cdf_num_parts(x, Restriction::identity(), 0.01),
                    -std::exp(-0.01 * x) / 0.01, 1e-12);

    // Monotone toward zero as x grows.
    double prev = -1e300;
    for (double x = 1.0; x < 500.0; x += 7.0) {
        double v = mupart::log_cdf_num_parts(x, Restriction::identity(), 0.01);
        CHECK(v < 0.0 && v > prev);
        prev = v;
    }

    // Direct product oracle log Prod (1 - q^m) over allowed parts m > mu(x),
    // in the regime where the saddle-point derivation applies (part spacing
    // small against 1/alpha): identity and linear(2) at alpha*mu(x) ~ 3.
    {
        double alpha = 0.01, x = 300.0;
        double oracle = 0.0;
        for (std::int64_t m = 301; m <= 5000; ++m) oracle += std::log1p(-std::exp(-alpha * m));
        CHECK_CLOSE(mupart::log_cdf_num_parts(x, Restriction::identity(), alpha), oracle, 0.05);
    }
    {
        double alpha = 0.01, x = 150.0;  // mu(x) = 300
        double oracle = 0.0;
        for (std::int64_t m = 151; m <= 5000; ++m) oracle += std::log1p(-std::exp(-alpha * 2.0 * m));
        CHECK_CLOSE(mupart::log_cdf_num_parts(x, Restriction::linear(2), alpha), oracle, 0.05);
    }

    // binary: the closed form itself (the product comparison breaks down for
    // exponentially sparse parts; the gap is a factor ~47 at alpha = 0.01,
    // x = 10, see the notes).
    CHECK_CLOSE(mupart::log_cdf_num_parts(10.0, Restriction::binary(), 0.01),
                -std::exp(-0.01 * 512.0) / (0.01 * std::log(2.0) * 512.0), 1e-12);

    CHECK_THROWS(mupart::log_cdf_num_parts(0.5, Restriction::identity(), 0.01),
                 std::invalid_argument);
}

void lower_bound() {
    for (std::int64_t n : {3, 10, 1000, 1000000})
        CHECK_EQ(mupart::critical_lower_bound(n, Restriction::identity()), 0.0);

    for (std::int64_t n : {1000, 10000, 100000, 1000000}) {
        double logn = std::log(static_cast<double>(n));
        double ln = mupart::critical_lower_bound(n, Restriction::binary());
        double closed = std::pow(static_cast<double>(n), std::log(2.0)) / 2.0;
        CHECK_CLOSE(ln, closed - logn, 1e-12);
        CHECK(std::fabs(ln - closed) <= 2.0 * logn);
        CHECK_CLOSE(mupart::critical_lower_bound(n, Restriction::linear(3)), 2.0 * logn, 1e-12);
    }

    // l_n / (n^{ln 2}/2) -> 1: within 1% at n = 10^6.
    double n6 = 1e6;
    double closed6 = std::pow(n6, std::log(2.0)) / 2.0;
    CHECK_CLOSE(mupart::critical_lower_bound(1000000, Restriction::binary()) / closed6, 1.0, 0.01);

    CHECK_THROWS(mupart::critical_lower_bound(2, Restriction::identity()), std::invalid_argument);
}

}  // namespace

int main() {
    eta_transform();
    gumbel_cdf();
    gumbel_expectations();
    ratio_linear_family();
    ratio_nonlinear();
    esseen();
    rank_density_identity_logistic();
    rank_density_mean_consistency();
    log_cdf();
    lower_bound();
    return testkit::summary("test_asymptotics");
}
