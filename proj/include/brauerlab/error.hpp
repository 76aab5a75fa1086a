#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "brauerlab/perm.hpp"

namespace brauerlab {

/// A subgroup argument is not contained in the ambient group it was paired with.
class ContainmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration exceeded its configured cap on intermediate objects.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t budget)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// An assignment of generator images that does not extend to a
/// homomorphism: the images of g*h and of g, h disagree.
class HomomorphismError : public std::invalid_argument {
 public:
  HomomorphismError(const std::string& what, Permutation g, Permutation h)
      : std::invalid_argument(what), g_(std::move(g)), h_(std::move(h)) {}
  const Permutation& g() const { return g_; }
  const Permutation& h() const { return h_; }

 private:
  Permutation g_;
  Permutation h_;
};

/// Default cap on intermediate subgroups during enumeration.
inline constexpr std::size_t kDefaultSubgroupBudget = 200'000;

/// Reads BRAUERLAB_BUDGET, falling back to kDefaultSubgroupBudget.
std::size_t budget_from_environment();

}  // namespace brauerlab
