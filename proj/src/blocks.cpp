#include "brauerlab/blocks.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace brauerlab {

namespace {

void require_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::Sym: return "sym";
    case GroupFamily::Alt: return "alt";
    case GroupFamily::TildeSym: return "tildesym";
    case GroupFamily::WeylB: return "weylb";
    case GroupFamily::WeylD: return "weyld";
  }
  return "?";
}

GroupFamily parse_family(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (GroupFamily f : {GroupFamily::Sym, GroupFamily::Alt, GroupFamily::TildeSym, GroupFamily::WeylB, GroupFamily::WeylD})
    if (family_name(f) == lower) return f;
  throw std::invalid_argument("unknown group family: " + name);
}

std::string BlockLabel::core_text() const {
  if (cores.size() == 1) return cores[0].to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < cores.size(); ++i) out += (i ? "," : "") + cores[i].to_string();
  return out + ")";
}

std::string BlockLabel::weight_text() const {
  if (weights.size() == 1) return std::to_string(weights[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + std::to_string(weights[i]);
  return out + ")";
}

BigInt defect_group_order_sym(int w, int p) {
  if (w < 0) throw std::invalid_argument("negative weight");
  require_prime(p);
  return power(p, legendre_exponent(p * w, p));
}

std::vector<BlockLabel> blocks_of_sym(int n, int p) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  require_prime(p);
  std::vector<BlockLabel> out;
  for (int w = n / p; w >= 0; --w)
    for (auto& core : enumerate_p_cores(n - p * w, p))
      out.push_back({GroupFamily::Sym, n, p, {std::move(core)}, {w}, defect_group_order_sym(w, p)});
  return out;
}

AltCovering alt_covering(const BlockLabel& b) {
  if (b.family != GroupFamily::Sym || b.p != 2 || b.weights.size() != 1)
    throw std::invalid_argument("alt_covering needs a p = 2 label of a symmetric group");
  const int w = b.weights[0];
  AltCovering c;
  c.parent = b;
  c.split = w == 0;
  c.defect_zero = w <= 1;
  c.defect_order = w == 0 ? BigInt(1) : power(2, legendre_exponent(2 * w, 2) - 1);
  return c;
}

std::vector<AltCovering> blocks_of_alt(int n) {
  std::vector<AltCovering> out;
  for (const auto& b : blocks_of_sym(n, 2)) out.push_back(alt_covering(b));
  return out;
}

std::vector<BlockLabel> blocks_of_tilde_sym(int n, int p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("spin block labels are for odd p");
  std::vector<BlockLabel> out;
  for (int w = n / p; w >= 0; --w)
    for (const auto& core : strict_partitions_of(n - p * w))
      if (is_p_bar_core(core, p))
        out.push_back({GroupFamily::TildeSym, n, p, {core.as_partition()}, {w}, defect_group_order_sym(w, p)});
  return out;
}

std::vector<BlockLabel> blocks_of_weylB(int n, int p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("blocks_of_weylB: p = 2 gives the principal block only");
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<BlockLabel> out;
  for (int n0 = n; n0 >= 0; --n0) {
    const auto side0 = blocks_of_sym(n0, p);
    const auto side1 = blocks_of_sym(n - n0, p);
    for (const auto& a : side0)
      for (const auto& b : side1)
        out.push_back({GroupFamily::WeylB, n, p, {a.cores[0], b.cores[0]}, {a.weights[0], b.weights[0]},
                       a.defect_order * b.defect_order});
  }
  return out;
}

BoundReport feit_bound(GroupFamily family, int p, const BigInt& q_order) {
  require_prime(p);
  const int k = exact_log(q_order, p);
  if (k < 0) throw std::invalid_argument("|Q| = " + to_string(q_order) + " is not a power of " + std::to_string(p));
  if (q_order > 1000) throw std::invalid_argument("|Q| too large for an exact factorial bound");
  const int q = static_cast<int>(q_order);
  BoundReport r{family, p, q_order, 0, 'a'};
  switch (family) {
    case GroupFamily::Sym:
      r.bound = factorial(q);
      r.formula_tag = 'a';
      break;
    case GroupFamily::Alt:
      if (p != 2) throw std::invalid_argument("the alternating-group bound is stated for p = 2");
      r.bound = factorial(q + 2) / 2;
      r.formula_tag = 'b';
      break;
    case GroupFamily::TildeSym:
      if (p < 3) throw std::invalid_argument("the double-cover bound is stated for p >= 3");
      r.bound = factorial(q);
      r.formula_tag = 'c';
      break;
    case GroupFamily::WeylB:
      r.bound = p == 2 ? q_order * factorial(k) : factorial(q);
      r.formula_tag = p == 2 ? 'e' : 'd';
      break;
    case GroupFamily::WeylD:
      if (p != 2) throw std::invalid_argument("the type D bound is stated for p = 2");
      r.bound = q_order * factorial(k + 1);
      r.formula_tag = 'f';
      break;
  }
  return r;
}

}  // namespace brauerlab
