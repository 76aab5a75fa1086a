#pragma once

#include "brauerlab/perm_group.hpp"

namespace brauerlab {

// Weyl groups as signed permutations on 2n points: the i-th sign flip is the
// transposition (2i-1, 2i) and S_n* permutes the blocks {2i-1, 2i}.
// Degrees are limited to 2n <= 16.

enum class WeylType { B, D };

/// The block permutation of S_n* induced by sigma (degree n).
Permutation lift_to_blocks(const Permutation& sigma);

/// C_2 wr S_n, generated by (1,2) and the block swaps of (i, i+1).
PermGroup weylB(int n);
/// weylB(n) intersected with A_{2n}: (1,2)(3,4) and the block swaps.
PermGroup weylD(int n);
/// The base group H = <(1,2), (3,4), ...>.
PermGroup base_group(int n);
/// H for type B, H intersected with A_{2n} for type D.
PermGroup base_group(WeylType type, int n);

/// n >= 2 for B, n >= 4 for D. Smaller n are still constructed.
bool in_standard_range(WeylType type, int n);

/// C_W(H) = H for W = weylB(n), or C_W(H') = H' for W = weylD(n) and
/// H' = H intersected with A_{2n}.
bool base_selfcentralizing_check(int n, WeylType type = WeylType::B);

/// H <= q. Throws ContainmentError unless q <= weylB(n).
bool vertex_contains_base(int n, const PermGroup& q);

/// C_2 wr (S_{n0} x S_{n-n0}), the first n0 blocks forming the first factor.
PermGroup inertia_group_weylB(int n, int n0);

/// H extended by the block lifts of a Sylow 2-subgroup of S_n.
PermGroup sylow2_weylB(int n);

}  // namespace brauerlab
