#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mupart {

// An arithmetic restriction on partition parts.  The restriction is a
// strictly increasing function mu with mu(k) a positive integer for integer
// k >= 1; the allowed parts are the set { mu(k) : k in N }.
//
// The continuous extension used by the asymptotic layer evaluates mu, mu'
// and mu^-1 on the whole real line:
//   - analytic on x >= 1,
//   - linearly interpolated between (0,0) and (1, mu(1)) on (0,1),
//   - odd through the origin: mu(-x) = -mu(x), mu(0) = 0.
// smooth_cutoff is defined through its analytic inverse x(1 - e^{-x/10}),
// which is kept on all of (0, inf); mu itself is recovered by bracketed
// bisection and mu' = 1 / ((mu^-1)' o mu).
//
// A lower bound l drops the allowed parts below l.  The continuous view is
// shifted vertically so that mu(1) lands on the smallest surviving part:
// mu_l(x) = mu(x) + (smallest surviving part - mu(1)).
//
// Instances are immutable and safe to share across threads.
class Restriction {
public:
    enum class Kind { Identity, Linear, Binary, SmoothCutoff };

    static Restriction identity();
    static Restriction linear(std::int64_t m);
    static Restriction binary();
    static Restriction smooth_cutoff();

    // Catalog lookup: "identity", "linear:3" (or "linear(3)"), "binary",
    // "smooth_cutoff".  Unknown names throw std::invalid_argument.
    static Restriction from_spec(const std::string& spec);

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    double lower_shift() const { return lower_bound_; }

    double mu(double x) const;
    double mu_prime(double x) const;
    double mu_inv(double y) const;

    // True for mu(x) = m*x through the origin with no lower bound applied.
    bool exactly_linear() const;
    std::int64_t linear_slope() const { return slope_; }

    // Discrete part set.
    std::int64_t smallest_part() const;
    bool is_part(std::int64_t m) const;
    std::vector<std::int64_t> parts_up_to(std::int64_t limit) const;

    Restriction with_lower_bound(double l) const;

    // Lazy strictly increasing stream over the allowed parts.  Exhaustion
    // (parts beyond the int64 range) is signalled by returning max int64.
    class PartCursor {
    public:
        explicit PartCursor(const Restriction& r);
        std::int64_t next();

    private:
        const Restriction* r_;
        std::int64_t index_;
        std::int64_t last_;
    };

private:
    Restriction(Kind kind, std::int64_t slope, std::string name);

    double base_mu(double x) const;        // analytic, x >= 1 (x > 0 for smooth_cutoff)
    double base_mu_prime(double x) const;
    double base_mu_inv(double y) const;
    std::int64_t base_part(std::int64_t k) const;

    void apply_lower_bound(double l);

    Kind kind_;
    std::int64_t slope_ = 1;      // m for Kind::Linear
    std::string name_;
    double lower_bound_ = 0.0;    // requested lower bound on parts
    std::int64_t base_index_ = 1; // index of the smallest surviving base part
    double shift_ = 0.0;          // smallest surviving part - base mu(1)
};

}  // namespace mupart
