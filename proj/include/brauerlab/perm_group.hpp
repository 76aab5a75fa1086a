#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerlab/perm.hpp"

namespace brauerlab {

/// One level of a stabilizer chain: the stabilizer G^(i) of the earlier base
/// points, its orbit on base point i, and a transversal for that orbit.
struct ChainLevel {
  int base_point = 0;
  std::vector<Permutation> generators;
  std::vector<int> orbit;
  /// Index into `transversal` for each point of the orbit, -1 elsewhere.
  std::array<int, kMaxDegree> slot{};
  /// transversal[k](base_point) == orbit[k]
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;

  bool in_orbit(int point) const { return slot[static_cast<std::size_t>(point)] >= 0; }
  const Permutation& coset_rep(int point) const {
    return transversal[static_cast<std::size_t>(slot[static_cast<std::size_t>(point)])];
  }
};

/// A permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  PermGroup() : PermGroup(1) {}
  /// Group generated by `generators` on `degree` points. The chain's base
  /// starts with `base_prefix` (kept even where the basic orbit is trivial).
  explicit PermGroup(int degree, std::vector<Permutation> generators = {},
                     std::span<const int> base_prefix = {});

  static PermGroup trivial(int degree) { return PermGroup(degree); }
  static PermGroup symmetric(int degree);
  static PermGroup alternating(int degree);
  /// Symmetric / alternating group on a subset of the points.
  static PermGroup symmetric_on(int degree, std::span<const int> points);
  static PermGroup alternating_on(int degree, std::span<const int> points);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  std::vector<int> base() const;
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  /// All elements in canonical (lexicographic) order. Intended for small groups.
  std::vector<Permutation> elements() const;
  /// Same group, chain rebuilt so the base begins with `prefix`.
  PermGroup with_base_prefix(std::span<const int> prefix) const;
  /// Points moved by some generator, ascending.
  std::vector<int> support() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  void build(std::span<const int> base_prefix);
  void rebuild_level(std::size_t i);
  /// Sifts g through levels from `start`; returns the residue and the level
  /// at which sifting stopped (chain size if it went all the way through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
};

/// Group generated by a non-empty list of permutations of equal degree.
PermGroup generate(std::span<const Permutation> generators);

/// Orbits as sorted 0-based point lists, ordered by (size desc, min point).
std::vector<std::vector<int>> orbits(const PermGroup& g);
/// Orbits of the group generated by an explicit element set.
std::vector<std::vector<int>> orbits_of(std::span<const Permutation> elements, int degree);
/// Orbit sizes, descending.
std::vector<int> orbit_sizes(const PermGroup& g);

/// Formats a group's generators as "<(1,2),(3,4)>".
std::string describe(const PermGroup& g);

}  // namespace brauerlab
