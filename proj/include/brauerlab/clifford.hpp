#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauerlab/perm_group.hpp"

namespace brauerlab {

/// Finite abelian group C_{f_1} x ... x C_{f_k}; elements are exponent
/// tuples, ordered lexicographically.
class AbelianGroup {
 public:
  using Element = std::vector<int>;

  /// Every factor must be at least 2; no factors gives the trivial group.
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const;
  Element zero() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  /// The i-th standard generator.
  Element unit(std::size_t i) const;
  std::vector<Element> elements() const;
  std::size_t index_of(const Element& a) const;
  /// "C2 x C2", "1" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<int> factors_;
};

/// Integer matrix acting on exponent tuples as column vectors:
/// (A x)_i = sum_j A[i][j] x_j mod f_i.
using EndoMatrix = std::vector<std::vector<int>>;

/// A character of H / O_p(H), i.e. of prod C_{m_i} with m_i the p'-part of
/// f_i, stored by its exponents e_i in [0, m_i): on the i-th generator it
/// takes the value e_i * (M / m_i) in Z/M, M = lcm(m_i).
struct CharacterLabel {
  std::vector<int> exponents;
  friend auto operator<=>(const CharacterLabel&, const CharacterLabel&) = default;
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
  /// "(1,0)".
  std::string to_string() const;
};

/// p'-parts m_i of the invariant factors. p must be prime.
std::vector<int> p_prime_parts(const AbelianGroup& h, int p);
/// M = lcm(m_i), the order of the cyclic target group.
int character_target_order(const AbelianGroup& h, int p);
/// All |H|_{p'} characters in lexicographic order.
std::vector<CharacterLabel> characters(const AbelianGroup& h, int p);
int character_value(const AbelianGroup& h, int p, const CharacterLabel& chi, const AbelianGroup::Element& x);

/// A validated action alpha of a permutation group U on H by automorphisms.
class SemidirectAction {
 public:
  /// `alpha` pairs generators of U with automorphism matrices. Throws
  /// HomomorphismError (with witness) if they violate a relation of U, and
  /// std::invalid_argument if a matrix is not an automorphism of H or the
  /// listed elements do not generate U.
  static SemidirectAction build(AbelianGroup h, PermGroup u, const std::vector<std::pair<Permutation, EndoMatrix>>& alpha);
  /// U acting trivially.
  static SemidirectAction trivial(AbelianGroup h, PermGroup u);

  const AbelianGroup& h() const { return h_; }
  const PermGroup& u() const { return u_; }
  const std::vector<Permutation>& u_generators() const { return gens_; }
  AbelianGroup::Element act(const Permutation& g, const AbelianGroup::Element& x) const;
  /// chi composed with alpha(g)^-1.
  CharacterLabel act_on_character(int p, const Permutation& g, const CharacterLabel& chi) const;

 private:
  SemidirectAction(AbelianGroup h, PermGroup u) : h_(std::move(h)), u_(std::move(u)) {}
  AbelianGroup h_;
  PermGroup u_;
  std::vector<Permutation> gens_;
  /// alpha(g) as a permutation of element indices of H.
  std::unordered_map<Permutation, std::vector<std::size_t>, PermutationHash> alpha_;
  std::vector<AbelianGroup::Element> elements_;
};

/// T_{U,alpha}(chi) = {g in U : chi o alpha(g)^-1 = chi}.
PermGroup inertia_subgroup(const SemidirectAction& action, int p, const CharacterLabel& chi);

struct InventoryRow {
  CharacterLabel representative;
  PermGroup inertia;
  std::size_t orbit_size = 0;
  std::vector<CharacterLabel> orbit;
};

/// One row per U-orbit on characters, representative = least label of the
/// orbit, rows ordered by (orbit size, representative).
std::vector<InventoryRow> inertia_inventory(const SemidirectAction& action, int p);

}  // namespace brauerlab
