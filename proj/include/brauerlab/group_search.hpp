#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "brauerlab/perm_group.hpp"

namespace brauerlab {

/// Property tested during a backtrack over a stabilizer chain. The search
/// visits elements h level by level; after level `depth` the images of base
/// points 0..depth under h are final.
class SearchProperty {
 public:
  virtual ~SearchProperty() = default;
  /// Called before the search of a level; h then fixes base points < level.
  virtual void begin(std::size_t level) { (void)level; }
  /// Partial test; false prunes the whole subtree.
  virtual bool consistent(const Permutation& h, std::size_t depth) = 0;
  /// Exact test on a full candidate.
  virtual bool accept(const Permutation& h) = 0;
};

/// Finds the first element (in search order) of `group` with the property.
/// The property must hold on all of the pointwise stabilizer of the first
/// `levels` base points or on none of it; only levels < `levels` are searched.
std::optional<Permutation> search_element(const PermGroup& group, std::size_t levels, SearchProperty& property);

/// The subgroup of `group` whose elements have the property (which must be
/// closed under products). Same level convention as search_element. `seed`
/// lists elements already known to qualify.
PermGroup search_subgroup(const PermGroup& group, std::size_t levels, SearchProperty& property,
                          const std::vector<Permutation>& seed = {});

/// Points of supp(q) ordered breadth-first along q's generators, so that
/// each point after the first of its orbit is the image of an earlier one.
std::vector<int> search_base(const PermGroup& q);

/// C_ambient(q). Throws ContainmentError unless q <= ambient.
PermGroup centralizer(const PermGroup& ambient, const PermGroup& q);
/// C_g(g).
PermGroup center(const PermGroup& g);
/// N_ambient(q). Throws ContainmentError unless q <= ambient.
PermGroup normalizer(const PermGroup& ambient, const PermGroup& q);

/// Some g in ambient with g a g^-1 = b, if one exists.
/// Throws ContainmentError unless a, b <= ambient.
std::optional<Permutation> conjugating_element(const PermGroup& ambient, const PermGroup& a, const PermGroup& b);
bool is_conjugate_subgroup(const PermGroup& ambient, const PermGroup& a, const PermGroup& b);

/// Cheap conjugation invariant: order, sorted cycle types of elements and
/// orbit sizes. Equal for conjugate subgroups of a symmetric group.
struct SubgroupSignature {
  std::uint64_t order = 0;
  std::vector<std::pair<std::vector<int>, int>> cycle_types;
  std::vector<int> orbit_sizes;
  friend bool operator==(const SubgroupSignature&, const SubgroupSignature&) = default;
  friend auto operator<=>(const SubgroupSignature&, const SubgroupSignature&) = default;
};
SubgroupSignature signature(const PermGroup& g);
SubgroupSignature signature(const std::vector<Permutation>& elements, int degree);

}  // namespace brauerlab
