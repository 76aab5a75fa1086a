#include "brauerlab/brauer_sc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "brauerlab/bigint.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/group_search.hpp"
#include "brauerlab/sc_kernels.hpp"
#include "brauerlab/sylow.hpp"

namespace brauerlab {

namespace {

std::vector<int> range_points(int count) {
  std::vector<int> pts(static_cast<std::size_t>(count));
  std::iota(pts.begin(), pts.end(), 0);
  return pts;
}

bool has_odd_generator(const PermGroup& g) {
  return std::any_of(g.generators().begin(), g.generators().end(), [](const Permutation& s) { return !s.is_even(); });
}

bool is_triangular(int m) {
  for (int k = 0; k * (k + 1) / 2 <= m; ++k)
    if (k * (k + 1) / 2 == m) return true;
  return false;
}

/// Q_{2w} on the first 2w of n points.
PermGroup defect_group(int n, int w) {
  std::vector<Permutation> gens;
  if (2 * w >= 2)
    for (const auto& g : sylow_alt_generators(2 * w)) gens.push_back(g.extended(n));
  return PermGroup(n, gens);
}

bool is_cyclic(const std::vector<Permutation>& elements) {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const Permutation& g) { return static_cast<std::size_t>(g.order()) == elements.size(); });
}

/// Invariant factors of an abelian p-group given the number of elements of
/// each order-dividing-p^k count (`counts[k]` = #{g : g^{p^k} = 1}).
std::vector<std::uint64_t> invariants_from_counts(const std::vector<std::uint64_t>& counts, std::uint64_t p) {
  std::vector<int> logs;
  for (std::uint64_t c : counts) {
    int e = 0;
    for (std::uint64_t x = c; x > 1; x /= p) ++e;
    logs.push_back(e);
  }
  std::vector<std::uint64_t> factors;
  for (std::size_t k = logs.size(); k-- > 1;) {
    const int at_least_k = logs[k] - logs[k - 1];
    const int at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
    std::uint64_t f = 1;
    for (std::size_t i = 0; i < k; ++i) f *= p;
    for (int i = 0; i < at_least_k - at_least_next; ++i) factors.push_back(f);
  }
  return factors;
}

std::string invariant_text(const std::vector<std::uint64_t>& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "]";
}

std::vector<ScCandidate> enumerate_impl(int n, int w, bool use_shortcut,
                                        const std::function<void(const std::string&)>& progress) {
  if (w < 0 || 2 * w > n) throw std::invalid_argument("need 0 <= 2w <= n");
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("n must lie in [1, 16]");
  if (!is_triangular(n - 2 * w))
    throw std::invalid_argument("A_" + std::to_string(n) + " has no 2-block of weight " + std::to_string(w) +
                                " (n - 2w = " + std::to_string(n - 2 * w) + " is not triangular)");
  auto say = [&](const std::string& s) {
    if (progress) progress(s);
  };

  const PermGroup q2w = defect_group(n, w);
  const ElementTable table(q2w);
  const std::vector<ElementSet> subgroups = enumerate_subgroups(table);
  say("Q_" + std::to_string(2 * w) + " of order " + std::to_string(table.size()) + ": " +
      std::to_string(subgroups.size()) + " subgroups");

  FilterContext ctx{&table, n, w, {}};
  for (const auto& z : center(q2w).elements()) ctx.q2w_center.set(table.index_of(z));
  const std::vector<FilterVerdict> verdicts = filter_candidates_omp(ctx, subgroups);

  std::vector<ElementSet> survivors;
  std::map<std::vector<Permutation>, FilterVerdict> verdict_of;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (verdicts[i].keep) {
      survivors.push_back(subgroups[i]);
      verdict_of.emplace(table.members(subgroups[i]), verdicts[i]);
    }
  say(std::to_string(survivors.size()) + " subgroups pass the filters");

  const bool shortcut = use_shortcut && n >= 2 * w + 2;
  const std::vector<int> block = range_points(2 * w);
  const PermGroup ambient = shortcut ? PermGroup::symmetric_on(n, block) : PermGroup::alternating(n);
  const std::vector<SubgroupClass> classes = fuse_classes(table, survivors, ambient);
  say(std::to_string(classes.size()) + " classes under " + (shortcut ? "S_" + std::to_string(2 * w) : "A_" + std::to_string(n)) +
      "-conjugacy");

  std::vector<ScCandidate> rows;
  for (const auto& cls : classes) {
    const FilterVerdict& v = verdict_of.at(cls.canonical_key);
    ScCandidate c;
    c.q_class = cls;
    c.q_class.ambient = PermGroup::alternating(n);
    c.q_order = cls.representative.order();
    c.z_order = v.data.z_order;
    c.x = v.data.x;
    c.d = v.data.d;
    c.w = v.weight.w;
    c.w_tilde = v.weight.w_tilde;
    c.multiplicity = v.weight.multiplicity;
    c.exceptional = orbit_analysis(cls.representative).exceptional_kind != ExceptionalKind::none;
    c.display_generators = display_generators(cls.representative);
    c.type_hint = isomorphism_hint(cls.representative);
    for (int m = 0; m < c.multiplicity; ++m) rows.push_back(c);
  }
  return rows;
}

}  // namespace

std::string exceptional_name(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::none: return "none";
    case ExceptionalKind::cyclic_plus_two: return "cyclic_plus_two";
    case ExceptionalKind::v4_three_twos: return "v4_three_twos";
  }
  return "?";
}

std::pair<std::vector<int>, std::vector<int>> support_split(const PermGroup& q) {
  std::vector<int> omega, fixed;
  for (const auto& o : orbits(q)) {
    auto& target = o.size() > 1 ? omega : fixed;
    target.insert(target.end(), o.begin(), o.end());
  }
  std::sort(omega.begin(), omega.end());
  std::sort(fixed.begin(), fixed.end());
  return {omega, fixed};
}

bool sc_condition(const PermGroup& q, std::span<const int> omega_hat) {
  for (int pt : q.support())
    if (std::find(omega_hat.begin(), omega_hat.end(), pt) == omega_hat.end())
      throw ContainmentError("sc_condition: Q moves point " + std::to_string(pt + 1) + " outside the given set");
  const PermGroup z = center(q);
  if (has_odd_generator(z)) return false;
  const PermGroup c = centralizer(PermGroup::symmetric_on(q.degree(), omega_hat), q);
  const std::uint64_t even_part = has_odd_generator(c) ? c.order() / 2 : c.order();
  return even_part == z.order();
}

ScClassification classification_data(const PermGroup& q) {
  const auto [omega, fixed] = support_split(q);
  ScClassification c;
  c.x = static_cast<int>(omega.size()) / 2;
  c.d = has_odd_generator(centralizer(PermGroup::symmetric_on(q.degree(), omega), q)) ? 2 : 1;
  c.z_order = center(q).order();
  return c;
}

std::optional<WeightMultiplicity> weight_and_multiplicity(const ScClassification& c, int n, int w) {
  if (n == 2 * c.x || n == 2 * c.x + 1) {
    if (w != c.x) return std::nullopt;
    return WeightMultiplicity{w, 0, 1};
  }
  if (n < 2 * c.x) return std::nullopt;
  const int w_tilde = w - c.x;
  if (w % 2 == 1) {
    if ((c.d == 1 && w_tilde == 1) || (c.d == 2 && w_tilde == 0)) return WeightMultiplicity{w, w_tilde, 1};
    return std::nullopt;
  }
  if (w_tilde != 0) return std::nullopt;
  return WeightMultiplicity{w, 0, c.d == 1 ? 2 : 1};
}

std::vector<WeightMultiplicity> admissible_weights(const ScClassification& c, int n) {
  std::vector<WeightMultiplicity> out;
  for (int w = c.x; w <= c.x + 1; ++w)
    if (2 * w <= n)
      if (auto r = weight_and_multiplicity(c, n, w)) out.push_back(*r);
  return out;
}

std::vector<ScCandidate> enumerate_sc_candidates(int n, int w, const std::function<void(const std::string&)>& progress) {
  return enumerate_impl(n, w, true, progress);
}

std::vector<ScCandidate> enumerate_sc_candidates_direct(int n, int w) { return enumerate_impl(n, w, false, {}); }

bool splits_in_alternating(const PermGroup& q, int n) {
  if (q.degree() != n) throw std::invalid_argument("splits_in_alternating: degree mismatch");
  return !has_odd_generator(normalizer(PermGroup::symmetric(n), q));
}

OrbitAnalysis orbit_analysis(const PermGroup& q) {
  OrbitAnalysis a;
  const std::vector<Permutation> elements = q.elements();
  std::vector<std::vector<int>> nontrivial;
  for (const auto& o : orbits(q))
    if (o.size() > 1) nontrivial.push_back(o);
  std::vector<std::vector<Permutation>> stabilizers;
  for (const auto& o : nontrivial) {
    a.orbit_sizes.push_back(static_cast<int>(o.size()));
    a.stabilizer_orders.push_back(elements.size() / o.size());
    std::vector<Permutation> stab;
    for (const auto& g : elements)
      if (g(o.front()) == o.front()) stab.push_back(g);
    stabilizers.push_back(std::move(stab));
  }
  for (std::size_t i = 0; i < stabilizers.size() && a.pairwise_noniso; ++i)
    for (std::size_t j = i + 1; j < stabilizers.size() && a.pairwise_noniso; ++j) {
      if (stabilizers[i].size() != stabilizers[j].size()) continue;
      for (const auto& g : elements) {
        const Permutation gi = g.inverse();
        std::vector<Permutation> conj;
        for (const auto& s : stabilizers[i]) conj.push_back(g * s * gi);
        std::sort(conj.begin(), conj.end());
        if (conj == stabilizers[j]) {
          a.pairwise_noniso = false;
          break;
        }
      }
    }
  std::vector<int> sizes = a.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  const int order = static_cast<int>(elements.size());
  if (is_cyclic(elements) && sizes == std::vector<int>{std::min(order, 2), std::max(order, 2)})
    a.exceptional_kind = ExceptionalKind::cyclic_plus_two;
  else if (order == 4 && !is_cyclic(elements) && sizes == std::vector<int>{2, 2, 2})
    a.exceptional_kind = ExceptionalKind::v4_three_twos;
  return a;
}

bool bound_check(const ScCandidate& c) {
  if (2 * static_cast<std::uint64_t>(c.w) > c.q_order + 2) return false;
  const BigInt q2w_order = c.w == 0 ? BigInt(1) : power(2, legendre_exponent(2 * c.w, 2) - 1);
  return q2w_order <= factorial(static_cast<int>(c.q_order) + 2) / 2;
}

std::string isomorphism_hint(const PermGroup& q) {
  const std::uint64_t order = q.order();
  if (order == 1) return "1";
  if (order > kMaxEnumeratedOrder) return "order " + std::to_string(order);
  const std::vector<Permutation> elements = q.elements();
  if (is_cyclic(elements)) return "C" + std::to_string(order);

  std::uint64_t p = 2;
  while (order % p != 0) ++p;
  std::uint64_t rest = order;
  while (rest % p == 0) rest /= p;
  const bool p_group = rest == 1;
  const bool abelian = q.is_abelian();

  if (order == 4) return "V4";
  if (order == 8 && !abelian) {
    const auto involutions = std::count_if(elements.begin(), elements.end(), [](const Permutation& g) { return g.order() == 2; });
    return involutions == 5 ? "D8" : "Q8";
  }
  if (!p_group) return (abelian ? "abelian of order " : "order ") + std::to_string(order);

  // element counts g^{p^k} in the derived subgroup, k = 0, 1, ...
  const ElementTable table(q);
  ElementSet derived;
  if (abelian) {
    derived.set(0);
  } else {
    std::vector<std::size_t> commutators;
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b) {
        const std::size_t c = table.product(table.product(table.inverse(a), table.inverse(b)), table.product(a, b));
        if (std::find(commutators.begin(), commutators.end(), c) == commutators.end()) commutators.push_back(c);
      }
    derived = table.closure(commutators);
  }
  const std::uint64_t derived_order = derived.count();
  std::vector<std::uint64_t> counts;
  for (std::uint64_t e = 1;; e *= p) {
    std::uint64_t c = 0;
    for (std::size_t g = 0; g < table.size(); ++g) {
      std::size_t x = 0;
      for (std::uint64_t k = 0; k < e; ++k) x = table.product(x, g);
      if (derived.test(x)) ++c;
    }
    counts.push_back(c / derived_order);
    if (c == table.size()) break;
  }
  const auto factors = invariants_from_counts(counts, p);
  if (abelian) {
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) { return f == p; }))
      return "C" + std::to_string(p) + "^" + std::to_string(factors.size());
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "xC" : "C") + std::to_string(factors[i]);
    return out;
  }
  return "order " + std::to_string(order) + ", abelianization " + invariant_text(factors);
}

std::vector<Permutation> display_generators(const PermGroup& q) {
  if (q.order() > kMaxEnumeratedOrder) return q.generators();
  const ElementTable table(q);
  std::vector<std::size_t> picked;
  if (auto shortest = q.order() <= 64 ? table.shortest_generators(6) : std::nullopt) {
    picked = *shortest;
  } else {
    ElementSet all;
    for (std::size_t i = 0; i < table.size(); ++i) all.set(i);
    picked = table.greedy_generators(all);
  }
  std::vector<Permutation> out;
  for (std::size_t i : picked) out.push_back(table.element(i));
  return out;
}

}  // namespace brauerlab
