#include "brauerlab/sylow.hpp"

#include <algorithm>
#include <stdexcept>

#include "brauerlab/group_search.hpp"

namespace brauerlab {

namespace {

void require_prime(int p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

struct Block {
  int offset;
  int exponent;
};

/// Consecutive blocks of sizes p^i, largest exponent first.
std::vector<Block> blocks_of(const SylowLabel& label) {
  std::vector<Block> out;
  int offset = 0;
  for (auto [exponent, multiplicity] : label.padic_parts)
    for (int c = 0; c < multiplicity; ++c) {
      out.push_back({offset, exponent});
      offset += ipow(label.p, exponent);
    }
  return out;
}

}  // namespace

SylowLabel sylow_label(int n, int p, SylowKind kind) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  require_prime(p);
  if (kind == SylowKind::alternating && p != 2)
    throw std::invalid_argument("alternating Sylow constructor is for p = 2 only");
  SylowLabel label{n, p, kind, n - n % p, {}};
  std::vector<int> digits;
  for (int r = label.r; r > 0; r /= p) digits.push_back(r % p);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    if (digits[static_cast<std::size_t>(i)] > 0) label.padic_parts.emplace_back(i, digits[static_cast<std::size_t>(i)]);
  return label;
}

Permutation wreath_generator(int degree, int p, int j, int offset) {
  const int step = ipow(p, j - 1);
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) images[static_cast<std::size_t>(x)] = x;
  for (int k = 0; k < step; ++k)
    for (int t = 0; t < p; ++t) {
      const int from = offset + k + t * step;
      const int to = offset + k + ((t + 1) % p) * step;
      images[static_cast<std::size_t>(from)] = to;
    }
  return Permutation::from_images(images);
}

std::vector<Permutation> sylow_sym_generators(int n, int p) {
  const SylowLabel label = sylow_label(n, p);
  std::vector<Permutation> gens;
  for (const Block& b : blocks_of(label))
    for (int j = 1; j <= b.exponent; ++j) gens.push_back(wreath_generator(n, p, j, b.offset));
  return gens;
}

std::vector<Permutation> sylow_alt_generators(int n) {
  const SylowLabel label = sylow_label(n, 2, SylowKind::alternating);
  const std::vector<Block> blocks = blocks_of(label);
  std::vector<Permutation> gens;
  if (blocks.empty() || (blocks.size() == 1 && blocks[0].exponent == 1)) return gens;
  if (blocks.size() == 1) {
    const int m = blocks[0].exponent;
    const int half = ipow(2, m - 1);
    gens.push_back(Permutation::cycle(n, {0, 1}) * Permutation::cycle(n, {half, half + 1}));
    for (int j = 2; j <= m; ++j) gens.push_back(wreath_generator(n, 2, j, 0));
    return gens;
  }
  const Block& last = blocks.back();
  const Permutation last_first = wreath_generator(n, 2, 1, last.offset);
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b)
    gens.push_back(last_first * wreath_generator(n, 2, 1, blocks[b].offset));
  for (const Block& b : blocks)
    for (int k = 2; k <= b.exponent; ++k) gens.push_back(wreath_generator(n, 2, k, b.offset));
  return gens;
}

PermGroup sylow_sym(int n, int p) { return PermGroup(n, sylow_sym_generators(n, p)); }
PermGroup sylow_alt(int n) { return PermGroup(n, sylow_alt_generators(n)); }

bool CentralizerProfile::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

CentralizerProfile centralizer_profile(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("centralizer_profile needs even n >= 4");
  CentralizerProfile r;
  r.n = n;
  r.residue_mod4 = n % 4;
  r.p_n = sylow_sym(n, 2);
  r.q_n = sylow_alt(n);
  r.c_sym = centralizer(PermGroup::symmetric(n), r.q_n);
  r.c_alt = centralizer(PermGroup::alternating(n), r.q_n);
  r.z_q = center(r.q_n);
  r.z_p = center(r.p_n);

  std::vector<Permutation> block_centers;
  for (const Block& b : blocks_of(sylow_label(n, 2))) {
    std::vector<Permutation> gens;
    for (int j = 1; j <= b.exponent; ++j) gens.push_back(wreath_generator(n, 2, j, b.offset));
    const PermGroup z = center(PermGroup(n, gens));
    block_centers.insert(block_centers.end(), z.generators().begin(), z.generators().end());
  }
  r.z_blocks = PermGroup(n, block_centers);

  auto check = [&](std::string name, bool ok) { r.checks.emplace_back(std::move(name), ok); };
  check("Z(P_n) = Z(P_n1) x ... x Z(P_ns)", r.z_p == r.z_blocks);
  if (r.residue_mod4 == 0) {
    check("C_S(Q_n) = C_A(Q_n)", r.c_sym == r.c_alt);
    check("C_A(Q_n) = Z(Q_n)", r.c_alt == r.z_q);
    if (n == 4)
      check("Z(Q_4) = Q_4", r.z_q == r.q_n);
    else
      check("Z(Q_n) = Z(P_n)", r.z_q == r.z_p);
  } else {
    const Permutation last = Permutation::cycle(n, {n - 2, n - 1});
    std::vector<Permutation> gens = r.z_q.generators();
    gens.push_back(last);
    const PermGroup z_times_p2(n, gens);
    check("C_S(Q_n) = Z(P_n)", r.c_sym == r.z_p);
    check("C_S(Q_n) = Z(Q_n) x P_2", r.c_sym == z_times_p2 && z_times_p2.order() == 2 * r.z_q.order());
    check("C_A(Q_n) = Z(Q_n)", r.c_alt == r.z_q);
    check("[C_S(Q_n) : C_A(Q_n)] = 2", r.c_sym.order() == 2 * r.c_alt.order());
  }
  return r;
}

}  // namespace brauerlab
