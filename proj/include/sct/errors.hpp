#pragma once

#include <stdexcept>
#include <string>

namespace sct {

// Raised when a computation would exceed a configured enumeration or
// summation budget.  Budgets refuse rather than truncate: a partial orbit
// sum is meaningless.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, unsigned long long required,
              unsigned long long budget)
      : std::runtime_error(what + " (requires " + std::to_string(required) +
                           ", budget " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  unsigned long long required() const { return required_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

// Raised when two routes that must agree exactly do not.  Signals a bug in
// an orbit computation or decomposition, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

struct Budget {
  // Maximum number of group elements any single enumeration may produce.
  unsigned long long max_elements = 1ull << 20;
  // Maximum |G|^2 for one superinduction double sum.
  unsigned long long max_summands = 1ull << 22;
};

}  // namespace sct
