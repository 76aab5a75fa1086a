#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brauerlab/perm_group.hpp"

namespace brauerlab {

enum class SylowKind { symmetric, alternating };

/// p-adic shape of the Sylow subgroup: r is the largest multiple of p not
/// exceeding n and r = sum of multiplicity * p^exponent.
struct SylowLabel {
  int n = 0;
  int p = 0;
  SylowKind kind = SylowKind::symmetric;
  int r = 0;
  /// (exponent, multiplicity), exponents strictly decreasing.
  std::vector<std::pair<int, int>> padic_parts;
};

SylowLabel sylow_label(int n, int p, SylowKind kind = SylowKind::symmetric);

/// Generators of P_n, the Sylow p-subgroup of S_n, on n points: for each
/// block of size p^i (largest first) the wreath generators g_1, ..., g_i.
std::vector<Permutation> sylow_sym_generators(int n, int p);
/// Generators of Q_n = P_n intersected with A_n, p = 2.
std::vector<Permutation> sylow_alt_generators(int n);

PermGroup sylow_sym(int n, int p);
PermGroup sylow_alt(int n);

/// Base generator g_j of the Sylow subgroup of S_{p^m}, shifted by `offset`
/// points, in degree `degree`.
Permutation wreath_generator(int degree, int p, int j, int offset);

/// Centralizer structure of Q_n for even n >= 4, with the raw groups kept
/// so callers can re-verify.
struct CentralizerProfile {
  int n = 0;
  /// 0 when n is divisible by 4, 2 otherwise.
  int residue_mod4 = 0;
  PermGroup p_n;
  PermGroup q_n;
  PermGroup c_sym;   // C_{S_n}(Q_n)
  PermGroup c_alt;   // C_{A_n}(Q_n)
  PermGroup z_q;     // Z(Q_n)
  PermGroup z_p;     // Z(P_n)
  PermGroup z_blocks;  // product of the centers of the block factors of P_n
  std::vector<std::pair<std::string, bool>> checks;
  bool all_hold() const;
};

CentralizerProfile centralizer_profile(int n);

}  // namespace brauerlab
