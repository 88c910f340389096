#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mupart {

// Root-finder failed to meet its residual target within the iteration cap.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditioned rejection sampling exhausted its attempt budget.  Carries an
// estimate of the acceptance rate seen so far so callers can widen the window
// or raise the budget.
class RejectionFailure : public std::runtime_error {
public:
    RejectionFailure(std::uint64_t attempts, std::uint64_t accepts)
        : std::runtime_error("rejection sampling failed: " + std::to_string(accepts) +
                             " accepts in " + std::to_string(attempts) +
                             " attempts (acceptance rate <= " +
                             std::to_string(rate_estimate(attempts, accepts)) + ")"),
          attempts_(attempts),
          accepts_(accepts) {}

    std::uint64_t attempts() const { return attempts_; }
    std::uint64_t accepts() const { return accepts_; }
    double acceptance_rate_estimate() const { return rate_estimate(attempts_, accepts_); }

private:
    static double rate_estimate(std::uint64_t attempts, std::uint64_t accepts) {
        if (attempts == 0) return 0.0;
        // When nothing was accepted, report the resolution limit of the budget.
        return accepts > 0 ? static_cast<double>(accepts) / static_cast<double>(attempts)
                           : 1.0 / static_cast<double>(attempts);
    }

    std::uint64_t attempts_;
    std::uint64_t accepts_;
};

}  // namespace mupart
