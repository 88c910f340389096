#include "mupart/restriction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mupart {

namespace {

constexpr std::int64_t kNoPart = std::numeric_limits<std::int64_t>::max();

// d/dx of the smooth-cutoff inverse x(1 - e^{-x/10}).
double smooth_inv(double x) { return x * (1.0 - std::exp(-x / 10.0)); }
double smooth_inv_prime(double x) {
    return 1.0 + std::exp(-x / 10.0) * (x / 10.0 - 1.0);
}

// Solve smooth_inv(y) = x for y > 0.  smooth_inv(y) <= y and
// y - smooth_inv(y) = y e^{-y/10} <= 10/e, so [x, x+8] brackets the root.
double smooth_mu(double x) {
    double lo = x, hi = x + 8.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (smooth_inv(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Restriction::Restriction(Kind kind, std::int64_t slope, std::string name)
    : kind_(kind), slope_(slope), name_(std::move(name)) {}

Restriction Restriction::identity() { return Restriction(Kind::Identity, 1, "identity"); }

Restriction Restriction::linear(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("linear restriction needs m >= 1");
    return Restriction(Kind::Linear, m, "linear:" + std::to_string(m));
}

Restriction Restriction::binary() { return Restriction(Kind::Binary, 1, "binary"); }

Restriction Restriction::smooth_cutoff() {
    return Restriction(Kind::SmoothCutoff, 1, "smooth_cutoff");
}

Restriction Restriction::from_spec(const std::string& spec) {
    if (spec == "identity") return identity();
    if (spec == "binary") return binary();
    if (spec == "smooth_cutoff") return smooth_cutoff();
    if (spec.rfind("linear", 0) == 0) {
        std::string arg;
        if (spec.size() > 6 && spec[6] == ':') {
            arg = spec.substr(7);
        } else if (spec.size() > 7 && spec[6] == '(' && spec.back() == ')') {
            arg = spec.substr(7, spec.size() - 8);
        } else if (spec == "linear") {
            arg = "1";
        }
        if (!arg.empty()) {
            std::size_t pos = 0;
            long long m = std::stoll(arg, &pos);
            if (pos == arg.size() && m >= 1) return linear(m);
        }
    }
    throw std::invalid_argument("unknown restriction: '" + spec + "'");
}

double Restriction::base_mu(double x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::Linear: return static_cast<double>(slope_) * x;
        case Kind::Binary: return std::exp2(x - 1.0);
        case Kind::SmoothCutoff: return smooth_mu(x);
    }
    return x;
}

double Restriction::base_mu_prime(double x) const {
    switch (kind_) {
        case Kind::Identity: return 1.0;
        case Kind::Linear: return static_cast<double>(slope_);
        case Kind::Binary: return std::log(2.0) * std::exp2(x - 1.0);
        case Kind::SmoothCutoff: return 1.0 / smooth_inv_prime(smooth_mu(x));
    }
    return 1.0;
}

double Restriction::base_mu_inv(double y) const {
    switch (kind_) {
        case Kind::Identity: return y;
        case Kind::Linear: return y / static_cast<double>(slope_);
        case Kind::Binary: return 1.0 + std::log2(y);
        case Kind::SmoothCutoff: return smooth_inv(y);
    }
    return y;
}

std::int64_t Restriction::base_part(std::int64_t k) const {
    switch (kind_) {
        case Kind::Identity: return k;
        case Kind::Linear: return slope_ * k;
        case Kind::Binary: return k <= 63 ? (std::int64_t{1} << (k - 1)) : kNoPart;
        case Kind::SmoothCutoff: return std::llround(smooth_mu(static_cast<double>(k)));
    }
    return k;
}

double Restriction::mu(double x) const {
    if (x < 0.0) return -mu(-x);
    if (x == 0.0) return 0.0;
    if (x < 1.0) {
        if (kind_ == Kind::SmoothCutoff && shift_ == 0.0) return base_mu(x);
        return x * (base_mu(1.0) + shift_);
    }
    return base_mu(x) + shift_;
}

double Restriction::mu_prime(double x) const {
    if (x < 0.0) return mu_prime(-x);
    if (x < 1.0) {
        if (kind_ == Kind::SmoothCutoff && shift_ == 0.0 && x > 0.0) return base_mu_prime(x);
        return base_mu(1.0) + shift_;
    }
    return base_mu_prime(x);
}

double Restriction::mu_inv(double y) const {
    if (y < 0.0) return -mu_inv(-y);
    if (y == 0.0) return 0.0;
    if (kind_ == Kind::SmoothCutoff && shift_ == 0.0) return base_mu_inv(y);
    double m1 = base_mu(1.0) + shift_;
    if (y < m1) return y / m1;
    return base_mu_inv(y - shift_);
}

bool Restriction::exactly_linear() const {
    return (kind_ == Kind::Identity || kind_ == Kind::Linear) && shift_ == 0.0;
}

std::int64_t Restriction::smallest_part() const { return base_part(base_index_); }

bool Restriction::is_part(std::int64_t m) const {
    if (m < smallest_part()) return false;
    // Invert to an index estimate; rounding collisions (smooth_cutoff) make
    // the candidate off by at most one in either direction.
    std::int64_t k = std::llround(base_mu_inv(static_cast<double>(m)));
    for (std::int64_t c = std::max<std::int64_t>(base_index_, k - 1); c <= k + 1; ++c)
        if (base_part(c) == m) return true;
    return false;
}

std::vector<std::int64_t> Restriction::parts_up_to(std::int64_t limit) const {
    if (limit < 1) throw std::invalid_argument("parts_up_to: limit must be >= 1");
    std::vector<std::int64_t> out;
    PartCursor cursor(*this);
    for (std::int64_t p = cursor.next(); p <= limit; p = cursor.next()) out.push_back(p);
    return out;
}

void Restriction::apply_lower_bound(double l) {
    lower_bound_ = l;
    std::int64_t k = std::max<std::int64_t>(
        1, std::llround(std::floor(base_mu_inv(std::max(l, base_mu(1.0))))) - 2);
    while (static_cast<double>(base_part(k)) < l) ++k;
    while (k > 1 && static_cast<double>(base_part(k - 1)) >= l) --k;
    base_index_ = k;
    // A bound below the smallest part drops nothing and must not move mu.
    shift_ = k == 1 ? 0.0 : static_cast<double>(base_part(base_index_)) - base_mu(1.0);
}

Restriction Restriction::with_lower_bound(double l) const {
    if (l < 0.0) throw std::invalid_argument("lower bound must be nonnegative");
    Restriction out = *this;
    out.apply_lower_bound(std::max(l, lower_bound_));
    return out;
}

Restriction::PartCursor::PartCursor(const Restriction& r)
    : r_(&r), index_(r.base_index_), last_(0) {}

std::int64_t Restriction::PartCursor::next() {
    // The rounded smooth_cutoff lattice can repeat a value; skip duplicates so
    // the stream stays strictly increasing.
    while (true) {
        std::int64_t p = r_->base_part(index_);
        if (p == kNoPart) return kNoPart;
        ++index_;
        if (p > last_) {
            last_ = p;
            return p;
        }
    }
}

}  // namespace mupart
