#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bcstar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: rank mismatch, index out of range, malformed intervals.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the grammar; `position` is a 0-based
/// offset into the parsed string.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised before any enumeration work when the family count estimate
/// exceeds the configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
        : Error("estimated " + std::to_string(estimate) +
                " path families exceeds budget " + std::to_string(budget)),
          estimate_(estimate), budget_(budget) {}

    std::uint64_t estimate() const noexcept { return estimate_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t estimate_;
    std::uint64_t budget_;
};

} // namespace bcstar
