#pragma once

#include <stdexcept>
#include <string>

namespace dmf {

// Raised when an input lies outside an operation's domain (zero polynomial,
// constant level, dependent frame, ...).  CLI exit code 3.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a result cannot be certified at the requested precision.
// Never silently degraded to a boolean or a truncated value.  CLI exit code 2.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a computation would exceed a configured resource cap.
// CLI exit code 4.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dmf
