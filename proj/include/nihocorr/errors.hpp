#pragma once

#include <stdexcept>
#include <string>

namespace nihocorr {

// Factorization or search effort exceeded the configured budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A structural bound asserted by the analytic counting path was breached.
// Either an implementation bug or a counterexample; verification must halt.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

// The requested quantity is undefined for the given parameters.
class NotApplicableError : public std::logic_error {
public:
    explicit NotApplicableError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nihocorr
