#pragma once

#include <stdexcept>

namespace grove {

// Malformed input text (edge lists, tree files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator or search was asked to exceed its configured size budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grove
