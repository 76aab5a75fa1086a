#include "brauerlab/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "brauerlab/group_search.hpp"

namespace brauerlab {

ElementTable::ElementTable(const PermGroup& g) : degree_(g.degree()) {
  if (g.order() > kMaxEnumeratedOrder)
    throw std::invalid_argument("group of order " + std::to_string(g.order()) + " exceeds the enumeration limit " +
                                std::to_string(kMaxEnumeratedOrder));
  elements_ = g.elements();
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = static_cast<std::uint16_t>(index_of(elements_[a] * elements_[b]));
    inverse_[a] = static_cast<std::uint16_t>(index_of(elements_[a].inverse()));
  }
}

std::size_t ElementTable::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::invalid_argument(p.to_string() + " is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

ElementSet ElementTable::closure(std::span<const std::size_t> generators) const {
  ElementSet set;
  set.set(0);
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t g : generators) {
      const std::size_t next = product(g, queue[head]);
      if (!set.test(next)) {
        set.set(next);
        queue.push_back(next);
      }
    }
  return set;
}

std::vector<Permutation> ElementTable::members(const ElementSet& s) const {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (s.test(i)) out.push_back(elements_[i]);
  return out;
}

std::vector<std::size_t> ElementTable::greedy_generators(const ElementSet& s) const {
  std::vector<std::size_t> gens;
  ElementSet current;
  current.set(0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!s.test(i) || current.test(i)) continue;
    gens.push_back(i);
    current = closure(gens);
  }
  return gens;
}

std::optional<std::vector<std::size_t>> ElementTable::shortest_generators(std::size_t max_rank) const {
  const std::size_t n = elements_.size();
  if (n == 1) return std::vector<std::size_t>{};
  for (std::size_t r = 1; r <= max_rank && r < n; ++r) {
    std::vector<std::size_t> pick(r);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      if (closure(pick).count() == n) return pick;
      // next combination of r indices from 1..n-1
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

PermGroup ElementTable::group(const ElementSet& s) const {
  std::vector<Permutation> gens;
  for (std::size_t i : greedy_generators(s)) gens.push_back(elements_[i]);
  return PermGroup(degree_, std::move(gens));
}

bool canonical_less(const ElementTable& table, const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (a.test(i) == b.test(i)) continue;
    // The first difference decides: the set holding the smaller element sorts first.
    return a.test(i);
  }
  return false;
}

std::vector<ElementSet> enumerate_subgroups(const ElementTable& table, std::size_t budget, bool reverse) {
  struct Node {
    ElementSet set;
    std::vector<std::size_t> gens;
  };
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  if (reverse) std::reverse(order.begin(), order.end());

  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> all;
  std::vector<Node> frontier{{table.closure({}), {}}};
  seen.insert(frontier.front().set);
  all.push_back(frontier.front().set);
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& h : frontier)
      for (std::size_t g : order) {
        if (h.set.test(g)) continue;
        std::vector<std::size_t> gens = h.gens;
        gens.push_back(g);
        ElementSet k = table.closure(gens);
        if (!seen.insert(k).second) continue;
        if (seen.size() > budget) throw BudgetExceeded("subgroup enumeration", budget);
        all.push_back(k);
        next.push_back({k, std::move(gens)});
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [&](const ElementSet& a, const ElementSet& b) { return canonical_less(table, a, b); });
  return all;
}

std::vector<SubgroupClass> fuse_classes(const ElementTable& table, const std::vector<ElementSet>& subgroups,
                                        const PermGroup& ambient) {
  std::vector<SubgroupClass> classes;
  std::vector<SubgroupSignature> class_signatures;
  for (const ElementSet& s : subgroups) {
    const std::vector<Permutation> members = table.members(s);
    const SubgroupSignature sig = signature(members, table.degree());
    const PermGroup g = table.group(s);
    bool merged = false;
    for (std::size_t c = 0; c < classes.size() && !merged; ++c) {
      if (class_signatures[c] != sig) continue;
      if (is_conjugate_subgroup(ambient, classes[c].representative, g)) {
        ++*classes[c].class_size;
        merged = true;
      }
    }
    if (merged) continue;
    if (!g.is_subgroup_of(ambient))
      throw ContainmentError("subgroup " + describe(g) + " is not contained in the ambient group");
    classes.push_back({g, ambient, 1, members});
    class_signatures.push_back(sig);
  }
  return classes;
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& p, const PermGroup& ambient, std::size_t budget) {
  if (!p.is_subgroup_of(ambient)) throw ContainmentError("subgroups_up_to_conjugacy: p is not contained in ambient");
  const ElementTable table(p);
  return fuse_classes(table, enumerate_subgroups(table, budget), ambient);
}

}  // namespace brauerlab
