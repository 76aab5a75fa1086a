#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerlab/perm_group.hpp"
#include "brauerlab/subgroups.hpp"

namespace brauerlab {

/// (x, d, |Z(Q)|): half the size of the moved-point set, the index
/// [C_{Sym(Omega)}(Q) : C_{Alt(Omega)}(Q)] and the order of the center.
struct ScClassification {
  int x = 0;
  int d = 1;
  std::uint64_t z_order = 1;
  friend bool operator==(const ScClassification&, const ScClassification&) = default;
};

struct WeightMultiplicity {
  int w = 0;
  int w_tilde = 0;
  int multiplicity = 1;
  friend bool operator==(const WeightMultiplicity&, const WeightMultiplicity&) = default;
};

enum class ExceptionalKind { none, cyclic_plus_two, v4_three_twos };
std::string exceptional_name(ExceptionalKind k);

struct OrbitAnalysis {
  /// Sizes of the non-trivial orbits, descending.
  std::vector<int> orbit_sizes;
  /// |Q| / orbit size, aligned with orbit_sizes.
  std::vector<std::uint64_t> stabilizer_orders;
  /// No two non-trivial orbits are isomorphic Q-sets.
  bool pairwise_noniso = true;
  ExceptionalKind exceptional_kind = ExceptionalKind::none;
};

struct ScCandidate {
  SubgroupClass q_class;
  std::uint64_t q_order = 1;
  std::uint64_t z_order = 1;
  int x = 0;
  int d = 1;
  int w = 0;
  int w_tilde = 0;
  int multiplicity = 1;
  bool exceptional = false;
  /// Lexicographically first shortest generating tuple (greedy above order 64).
  std::vector<Permutation> display_generators;
  std::string type_hint;
};

/// (Omega, fixed): the union of non-trivial orbits and the fixed points.
std::pair<std::vector<int>, std::vector<int>> support_split(const PermGroup& q);

/// C_{Alt(omega_hat)}(Q) = Z(Q). Throws ContainmentError if Q moves a point
/// outside omega_hat.
bool sc_condition(const PermGroup& q, std::span<const int> omega_hat);

ScClassification classification_data(const PermGroup& q);

/// Weight data for block weight w in A_n. Cases: n in {2x, 2x+1} forces
/// w = x with multiplicity 1; otherwise w - x is 1 (w odd, d = 1) or 0
/// (w odd with d = 2, or w even), and the multiplicity is 2 exactly for
/// w even with d = 1. nullopt when (x, d, n, w) fits none of these.
std::optional<WeightMultiplicity> weight_and_multiplicity(const ScClassification& c, int n, int w);
/// Every weight w for which weight_and_multiplicity(c, n, w) is defined.
std::vector<WeightMultiplicity> admissible_weights(const ScClassification& c, int n);

/// Rows of the table for A_n, block weight w, p = 2: one row per
/// self-centralizing candidate class, repeated per multiplicity, ordered by
/// (|Q|, canonical key). Requires 2w <= n <= 16 and n - 2w triangular.
/// `progress` receives short status lines (may be empty).
std::vector<ScCandidate> enumerate_sc_candidates(int n, int w,
                                                 const std::function<void(const std::string&)>& progress = {});

/// Same table computed with A_n-fusion directly, without the symmetric-group
/// shortcut used for n >= 2w + 2. For cross-checking.
std::vector<ScCandidate> enumerate_sc_candidates_direct(int n, int w);

/// True when the S_n-class of q splits into two A_n-classes, i.e. no odd
/// permutation normalizes q.
bool splits_in_alternating(const PermGroup& q, int n);

OrbitAnalysis orbit_analysis(const PermGroup& q);

/// 2w <= |Q| + 2 and |Q_{2w}| <= (|Q| + 2)!/2.
bool bound_check(const ScCandidate& c);

/// V4, C4, D8, Q8, C2^3, C_n, otherwise the order with abelian invariants
/// (of Q/[Q,Q] when Q is not abelian).
std::string isomorphism_hint(const PermGroup& q);
std::vector<Permutation> display_generators(const PermGroup& q);

}  // namespace brauerlab
