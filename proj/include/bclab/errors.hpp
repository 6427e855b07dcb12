#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bclab {

// Thrown when an operation would exceed its configured work or memory budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a fit has no usable signal. Carries the lags that were usable.
class insufficient_signal_error : public std::runtime_error {
public:
    insufficient_signal_error(const std::string& what, std::vector<long long> usable)
        : std::runtime_error(what), usable_lags(std::move(usable)) {}
    std::vector<long long> usable_lags;
};

// Thrown when a regression grid is dominated by zero/degenerate observations.
class degenerate_fit_error : public std::runtime_error {
public:
    explicit degenerate_fit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is not defined for the given input kind
// (e.g. simulating exact-equality events for a continuous law).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a schedule or experiment cannot be constructed from its inputs.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the experiment runner on invalid configuration.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bclab
