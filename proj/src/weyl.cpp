#include "brauerlab/weyl.hpp"

#include <stdexcept>

#include "brauerlab/error.hpp"
#include "brauerlab/group_search.hpp"
#include "brauerlab/sylow.hpp"

namespace brauerlab {

namespace {

void check_rank(int n) {
  if (n < 1 || 2 * n > kMaxDegree) throw std::invalid_argument("Weyl group rank must lie in [1, 8]");
}

Permutation sign_flip(int n, int i) { return Permutation::cycle(2 * n, {2 * i, 2 * i + 1}); }

/// Block swap of blocks i and i+1 (0-based).
Permutation block_swap(int n, int i) {
  return Permutation::cycle(2 * n, {2 * i, 2 * i + 2}) * Permutation::cycle(2 * n, {2 * i + 1, 2 * i + 3});
}

}  // namespace

Permutation lift_to_blocks(const Permutation& sigma) {
  const int n = sigma.degree();
  check_rank(n);
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(2 * i)] = 2 * sigma(i);
    images[static_cast<std::size_t>(2 * i + 1)] = 2 * sigma(i) + 1;
  }
  return Permutation::from_images(images);
}

PermGroup weylB(int n) {
  check_rank(n);
  std::vector<Permutation> gens{sign_flip(n, 0)};
  for (int i = 0; i + 1 < n; ++i) gens.push_back(block_swap(n, i));
  return PermGroup(2 * n, gens);
}

PermGroup weylD(int n) {
  check_rank(n);
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(sign_flip(n, 0) * sign_flip(n, 1));
  for (int i = 0; i + 1 < n; ++i) gens.push_back(block_swap(n, i));
  return PermGroup(2 * n, gens);
}

PermGroup base_group(int n) {
  check_rank(n);
  std::vector<Permutation> gens;
  for (int i = 0; i < n; ++i) gens.push_back(sign_flip(n, i));
  return PermGroup(2 * n, gens);
}

PermGroup base_group(WeylType type, int n) {
  if (type == WeylType::B) return base_group(n);
  check_rank(n);
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(sign_flip(n, i) * sign_flip(n, i + 1));
  return PermGroup(2 * n, gens);
}

bool in_standard_range(WeylType type, int n) { return type == WeylType::B ? n >= 2 : n >= 4; }

bool base_selfcentralizing_check(int n, WeylType type) {
  const PermGroup w = type == WeylType::B ? weylB(n) : weylD(n);
  const PermGroup h = base_group(type, n);
  return centralizer(w, h) == h;
}

bool vertex_contains_base(int n, const PermGroup& q) {
  const PermGroup w = weylB(n);
  if (q.degree() != 2 * n || !q.is_subgroup_of(w))
    throw ContainmentError("vertex_contains_base: " + describe(q) + " is not contained in weylB(" + std::to_string(n) + ")");
  return base_group(n).is_subgroup_of(q);
}

PermGroup inertia_group_weylB(int n, int n0) {
  check_rank(n);
  if (n0 < 0 || n0 > n) throw std::invalid_argument("need 0 <= n0 <= n");
  std::vector<Permutation> gens;
  for (int i = 0; i < n; ++i) gens.push_back(sign_flip(n, i));
  for (int i = 0; i + 1 < n; ++i)
    if (i + 1 != n0) gens.push_back(block_swap(n, i));
  return PermGroup(2 * n, gens);
}

PermGroup sylow2_weylB(int n) {
  check_rank(n);
  std::vector<Permutation> gens = base_group(n).generators();
  for (const auto& s : sylow_sym_generators(n, 2)) gens.push_back(lift_to_blocks(s));
  return PermGroup(2 * n, gens);
}

}  // namespace brauerlab
