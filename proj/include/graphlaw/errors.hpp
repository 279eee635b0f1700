#pragma once

#include <stdexcept>
#include <string>

namespace graphlaw {

// Malformed input text or byte sequences (files, codes).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition (unknown vertex, radius mismatch, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exploration exceeded its safety cap.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace graphlaw
