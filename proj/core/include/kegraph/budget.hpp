#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kegraph {

/// An exact computation ran out of its work allowance. Never silently
/// replaced by an approximate answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work allowance for exponential routines (branch-and-bound nodes,
/// enumerated sets). Applies per top-level call.
struct Budget {
  static constexpr std::uint64_t kDefaultNodes = 50'000'000;

  std::uint64_t max_nodes = kDefaultNodes;

  /// Reads KEGRAPH_BUDGET; falls back to kDefaultNodes when unset or invalid.
  static Budget from_environment();
};

/// Counts work against a Budget and throws BudgetExceeded when it is spent.
class WorkMeter {
 public:
  explicit WorkMeter(Budget budget, const char* what) : limit_(budget.max_nodes), what_(what) {}

  void tick(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw BudgetExceeded(std::string(what_) + ": work budget of " + std::to_string(limit_) +
                           " exhausted");
    }
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* what_;
};

}  // namespace kegraph
