#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace schur {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed something outside an operation's domain (mismatched groups,
/// non-subgroups, ill-defined maps, out-of-family groups, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A partition or JSON document failed S-ring validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured cap or search budget was exhausted before completion.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultMaxOrder = 243;
inline constexpr std::size_t kDefaultChainBudget = 1'000'000;
inline constexpr std::size_t kDefaultSearchBudget = 50'000'000;

/// Caps shared by the expensive operations. Every field mirrors a CLI flag.
struct Budget {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t chain_budget = kDefaultChainBudget;    // transversal entries
  std::size_t search_budget = kDefaultSearchBudget;  // backtrack nodes
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw BudgetExceeded("time limit exceeded");
  }
};

}  // namespace schur
