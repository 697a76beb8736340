#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vpec {

/// Parameters violate a precondition of the requested operation.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what + " (requires " + std::to_string(required) + ", budget " +
                             std::to_string(budget) + ")"),
          required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Malformed input file or flag value.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default limit on exhaustively enumerated spaces.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Saturating integer power, returns UINT64_MAX on overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) noexcept;

/// Saturating binomial coefficient.
std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Throws BudgetExceeded when `required > budget`.
void require_budget(const std::string& what, std::uint64_t required, std::uint64_t budget);

}  // namespace vpec
