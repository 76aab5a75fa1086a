#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brauerlab/error.hpp"
#include "brauerlab/perm_group.hpp"

namespace brauerlab {

/// Largest group whose subgroup lattice is enumerated.
inline constexpr std::size_t kMaxEnumeratedOrder = 256;

using ElementSet = std::bitset<kMaxEnumeratedOrder>;

/// Multiplication table of a small group, elements in canonical order with
/// the identity at index 0.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g);

  std::size_t size() const { return elements_.size(); }
  int degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation& p) const;
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * elements_.size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Subgroup generated by the given element indices.
  ElementSet closure(std::span<const std::size_t> generators) const;
  std::vector<Permutation> members(const ElementSet& s) const;
  PermGroup group(const ElementSet& s) const;
  /// Greedy generators: scan members in canonical order, keep those not yet generated.
  std::vector<std::size_t> greedy_generators(const ElementSet& s) const;
  /// Lexicographically first generating tuple of minimal length for the
  /// whole group, or nullopt if none has at most max_rank entries.
  std::optional<std::vector<std::size_t>> shortest_generators(std::size_t max_rank) const;

 private:
  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
};

/// Every subgroup of the table's group, ordered by (order, canonical key).
/// Built by cyclic extension from the trivial group; `reverse` flips the
/// order in which extending elements are tried (the result must not change).
std::vector<ElementSet> enumerate_subgroups(const ElementTable& table, std::size_t budget = budget_from_environment(),
                                            bool reverse = false);

/// (order, canonical key) comparison of element sets inside one table.
bool canonical_less(const ElementTable& table, const ElementSet& a, const ElementSet& b);

struct SubgroupClass {
  PermGroup representative;
  PermGroup ambient;
  /// Number of members of the class found among the enumerated subgroups.
  std::optional<std::uint64_t> class_size;
  /// The representative's elements in canonical order.
  std::vector<Permutation> canonical_key;
};

/// Groups `subgroups` (all <= ambient) into ambient-conjugacy classes. Input
/// order decides the representatives; output keeps first-occurrence order.
std::vector<SubgroupClass> fuse_classes(const ElementTable& table, const std::vector<ElementSet>& subgroups,
                                        const PermGroup& ambient);

/// All subgroups of p up to ambient-conjugacy, ordered by (order, key).
/// Requires p <= ambient and |p| <= 256.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& p, const PermGroup& ambient,
                                                     std::size_t budget = budget_from_environment());

}  // namespace brauerlab
