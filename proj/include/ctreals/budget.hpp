#ifndef CTREALS_BUDGET_HPP
#define CTREALS_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctreals {

/// Raised when an operation that is total only on well-behaved inputs runs
/// out of its work budget. The message names the operation and how far it
/// got, so a silent divergence becomes a diagnostic.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A down-counting tick budget shared along one call tree.
class Budget {
 public:
  explicit Budget(std::uint64_t ticks) : left_(ticks) {}

  void spend(std::uint64_t ticks, const char* where) {
    if (ticks > left_) throw BudgetExhausted(std::string("work budget exhausted in ") + where);
    left_ -= ticks;
  }
  std::uint64_t left() const { return left_; }

 private:
  std::uint64_t left_;
};

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

}  // namespace ctreals

#endif
