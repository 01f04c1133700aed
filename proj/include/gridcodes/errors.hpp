#pragma once

#include <stdexcept>
#include <string>

namespace gridcodes {

/// Invalid input: out-of-grid point, malformed spec, undefined quantity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation refused to run because it would exceed a configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridcodes
