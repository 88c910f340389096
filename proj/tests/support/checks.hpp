#pragma once

// Minimal assertion harness shared by the test binaries.  Checks never abort:
// every failure prints file:line plus context and the binary exits nonzero.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testkit {

inline int failures = 0;
inline int checks = 0;

inline bool report(bool ok, const char* file, int line, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::fprintf(stderr, "[FAIL] %s:%d  %s\n", file, line, what.c_str());
    }
    return ok;
}

inline bool close_rel(double a, double b, double rel_tol) {
    if (a == b) return true;
    double denom = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= rel_tol * denom;
}

inline bool close_abs(double a, double b, double abs_tol) {
    return std::fabs(a - b) <= abs_tol;
}

inline int summary(const char* name) {
    if (failures == 0) {
        std::printf("%s: all %d checks passed\n", name, checks);
        return 0;
    }
    std::printf("%s: %d of %d checks FAILED\n", name, failures, checks);
    return 1;
}

inline std::string stringify(const std::string& s) { return s; }
inline std::string stringify(const char* s) { return s; }
template <class T>
std::string stringify(const T& v) {
    using std::to_string;
    return to_string(v);
}

}  // namespace testkit

#define CHECK(cond) ::testkit::report((cond), __FILE__, __LINE__, #cond)

#define CHECK_EQ(a, b)                                                              \
    ::testkit::report((a) == (b), __FILE__, __LINE__,                               \
                      std::string(#a " == " #b "  (got ") + ::testkit::stringify(a) + \
                          " vs " + ::testkit::stringify(b) + ")")

#define CHECK_CLOSE(a, b, rel)                                                      \
    ::testkit::report(::testkit::close_rel((a), (b), (rel)), __FILE__, __LINE__,    \
                      std::string(#a) + " ~ " + #b + "  (got " + std::to_string(a) + \
                          " vs " + std::to_string(b) + ", rel " + #rel + ")")

#define CHECK_NEAR(a, b, abs)                                                       \
    ::testkit::report(::testkit::close_abs((a), (b), (abs)), __FILE__, __LINE__,    \
                      std::string(#a) + " ~ " + #b + "  (got " + std::to_string(a) + \
                          " vs " + std::to_string(b) + ", abs " + #abs + ")")

#define CHECK_THROWS(expr, exception_type)                                          \
    do {                                                                            \
        bool caught_ = false;                                                       \
        try {                                                                       \
            (void)(expr);                                                           \
        } catch (const exception_type&) {                                           \
            caught_ = true;                                                         \
        } catch (...) {                                                             \
        }                                                                           \
        ::testkit::report(caught_, __FILE__, __LINE__,                              \
                          #expr " should throw " #exception_type);                  \
    } while (0)
