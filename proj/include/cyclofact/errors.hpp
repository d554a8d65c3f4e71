#pragma once

#include <stdexcept>
#include <string>

namespace cyclofact {

/// Input outside the mathematical domain of an operation (bad regime,
/// zero polynomial where a nonzero one is required, malformed literal).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A search hit its configured budget before finishing.
class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclofact
