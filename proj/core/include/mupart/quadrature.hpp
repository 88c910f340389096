#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mupart::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    std::int64_t panels = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b].  Breakpoints seed the initial panel
// boundaries (callers center them on known integrand features; the rule will
// not find a spike it never samples).  Tolerance is relative to the integral
// magnitude with abs_tol as a floor for integrals near zero.
Result integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const std::vector<double>& breakpoints, double rel_tol,
                          double abs_tol = 1e-300, int max_depth = 52);

// Same, throwing IntegrationError when the tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, double rel_tol,
                 double abs_tol = 1e-300);

}  // namespace mupart::quad
