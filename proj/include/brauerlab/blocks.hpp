#pragma once

#include <string>
#include <vector>

#include "brauerlab/bigint.hpp"
#include "brauerlab/partitions.hpp"

namespace brauerlab {

enum class GroupFamily { Sym, Alt, TildeSym, WeylB, WeylD };

std::string family_name(GroupFamily f);
/// Accepts sym, alt, tildesym, weylb, weyld (any case).
GroupFamily parse_family(const std::string& name);

/// A block label: one (core, weight) for S_n, A_n and the spin covers
/// (bar cores there), a pair of them for B_n at odd p.
struct BlockLabel {
  GroupFamily family = GroupFamily::Sym;
  int n = 0;
  int p = 2;
  std::vector<Partition> cores;
  std::vector<int> weights;
  BigInt defect_order = 1;

  std::string core_text() const;
  std::string weight_text() const;
};

struct AltCovering {
  BlockLabel parent;
  bool split = false;
  bool defect_zero = false;
  /// Order of a defect group of each covered A_n-block.
  BigInt defect_order = 1;
};

struct BoundReport {
  GroupFamily family = GroupFamily::Sym;
  int p = 2;
  BigInt q_order = 1;
  BigInt bound = 1;
  char formula_tag = 'a';
};

/// p^{nu_p((p w)!)}, the order of a defect group of a weight-w block of S_n.
BigInt defect_group_order_sym(int w, int p);

/// All (core, weight) with |core| + p*weight = n; ordered by weight
/// descending, then core lexicographically.
std::vector<BlockLabel> blocks_of_sym(int n, int p);
/// Covering data of a p = 2 block of S_n for A_n.
AltCovering alt_covering(const BlockLabel& b);
/// A_n blocks at p = 2 (weight-0 labels appear once, flagged split).
std::vector<AltCovering> blocks_of_alt(int n);
/// Spin block labels (p-bar core, bar weight) of the double covers, odd p.
std::vector<BlockLabel> blocks_of_tilde_sym(int n, int p);
/// Pairs ((core0, w0), (core1, w1)) with n0 + n1 = n, for B_n at odd p.
std::vector<BlockLabel> blocks_of_weylB(int n, int p);

/// Bound on |P| for the given family, prime and vertex order |Q|.
/// Throws std::invalid_argument for combinations the theorem does not cover
/// or when q_order is not a power of p.
BoundReport feit_bound(GroupFamily family, int p, const BigInt& q_order);

}  // namespace brauerlab
