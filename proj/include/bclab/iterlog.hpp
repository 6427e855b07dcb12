#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bclab {

// Iterated logarithms with explicit domain guards.
//
// log log x is positive only for x > e, and log log log x only for x > e^e.
// Condition checkers skip smaller indices (and count the skips); envelope
// formulas treat small arguments as a domain error, since the bounds they
// evaluate are asymptotic statements.

inline constexpr double kE   = 2.718281828459045235360287471352662498;
inline const double kEE      = std::exp(kE);        // e^e  ~ 15.154
inline const double kEEE     = std::exp(std::exp(kE));  // e^(e^e) ~ 3.8e6

inline double log2x(double x) { return std::log(std::log(x)); }
inline double log3x(double x) { return std::log(std::log(std::log(x))); }

inline double checked_log2x(double x, const char* who) {
    if (!(x > kE))
        throw std::domain_error(std::string(who) + ": argument " + std::to_string(x) +
                                " not in the log log domain (need x > e)");
    return log2x(x);
}

inline double checked_log3x(double x, const char* who) {
    if (!(x > kEE))
        throw std::domain_error(std::string(who) + ": argument " + std::to_string(x) +
                                " not in the log log log domain (need x > e^e)");
    return log3x(x);
}

}  // namespace bclab
