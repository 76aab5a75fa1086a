#include "brauerlab/group_search.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

constexpr std::uint64_t kElementListLimit = 65536;

std::vector<std::vector<int>> sorted_orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& level : g.chain()) {
    auto o = level.orbit;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

class Backtracker {
 public:
  Backtracker(const PermGroup& group, std::size_t levels, SearchProperty& property)
      : group_(group), levels_(levels), property_(property), orbits_(sorted_orbits(group)) {}

  /// First element of h * G^(from) with the property; h has already fixed
  /// the images of the base points before `from`.
  std::optional<Permutation> descend(const Permutation& h, std::size_t from) {
    if (from == levels_) {
      if (property_.accept(h)) return h;
      return std::nullopt;
    }
    const ChainLevel& level = group_.chain()[from];
    for (int delta : orbits_[from]) {
      Permutation next = h * level.coset_rep(delta);
      if (!property_.consistent(next, from)) continue;
      if (auto found = descend(next, from + 1)) return found;
    }
    return std::nullopt;
  }

 private:
  const PermGroup& group_;
  std::size_t levels_;
  SearchProperty& property_;
  std::vector<std::vector<int>> orbits_;
};

void require_subgroup(const PermGroup& sub, const PermGroup& ambient, const char* what) {
  if (!sub.is_subgroup_of(ambient))
    throw ContainmentError(std::string(what) + ": " + describe(sub) + " is not contained in the ambient group");
}

class CentralizerProperty final : public SearchProperty {
 public:
  CentralizerProperty(const PermGroup& q, const std::vector<int>& base) : gens_(q.generators()) {
    std::array<int, kMaxDegree> index{};
    index.fill(-1);
    for (std::size_t i = 0; i < base.size(); ++i) index[static_cast<std::size_t>(base[i])] = static_cast<int>(i);
    links_.resize(base.size());
    for (std::size_t si = 0; si < gens_.size(); ++si)
      for (std::size_t i = 0; i < base.size(); ++i) {
        const int m = index[static_cast<std::size_t>(gens_[si](base[i]))];
        if (m < 0) continue;
        const std::size_t deepest = std::max<std::size_t>(i, static_cast<std::size_t>(m));
        links_[deepest].push_back({si, base[i], base[static_cast<std::size_t>(m)]});
      }
  }

  bool consistent(const Permutation& h, std::size_t depth) override {
    for (const auto& link : links_[depth])
      if (gens_[link.gen](h(link.from)) != h(link.to)) return false;
    return true;
  }

  bool accept(const Permutation& h) override {
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& s) { return h * s == s * h; });
  }

 private:
  struct Link {
    std::size_t gen;
    int from;
    int to;
  };
  std::vector<Permutation> gens_;
  std::vector<std::vector<Link>> links_;
};

std::vector<int> point_orbit_sizes(const std::vector<Permutation>& elements, int degree) {
  std::vector<int> sizes;
  for (int x = 0; x < degree; ++x) {
    std::uint32_t mask = 0;
    for (const auto& g : elements) mask |= 1u << g(x);
    sizes.push_back(std::popcount(mask));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// h with h a h^-1 = b. Prunes by comparing the stabilizer chains of a (along
/// the base) with those of b (along the partial images).
class ConjugacyProperty final : public SearchProperty {
 public:
  ConjugacyProperty(const PermGroup& a, const PermGroup& b, const std::vector<int>& base)
      : a_gens_(a.generators()), b_(b), base_(base), degree_(a.degree()), same_order_(a.order() == b.order()) {
    use_lists_ = same_order_ && a.order() <= kElementListLimit;
    if (!use_lists_) return;
    std::vector<Permutation> current = a.elements();
    b_elements_ = b.elements();
    a_sizes_.push_back(current.size());
    a_profiles_.push_back(point_orbit_sizes(current, degree_));
    a_point_orbit_.resize(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
      std::uint32_t mask = 0;
      for (const auto& g : current) mask |= 1u << g(base[j]);
      a_point_orbit_[j] = std::popcount(mask);
      std::erase_if(current, [&](const Permutation& g) { return g(base[j]) != base[j]; });
      a_sizes_.push_back(current.size());
      a_profiles_.push_back(point_orbit_sizes(current, degree_));
    }
    b_stack_.resize(base.size() + 1);
  }

  void begin(std::size_t level) override {
    if (!use_lists_) return;
    auto& start = b_stack_[level];
    start = b_elements_;
    for (std::size_t j = 0; j < level; ++j)
      std::erase_if(start, [&](const Permutation& g) { return g(base_[j]) != base_[j]; });
  }

  bool consistent(const Permutation& h, std::size_t depth) override {
    if (!same_order_) return false;
    if (!use_lists_) return true;
    const int gamma = h(base_[depth]);
    const auto& parent = b_stack_[depth];
    std::uint32_t mask = 0;
    for (const auto& g : parent) mask |= 1u << g(gamma);
    if (std::popcount(mask) != a_point_orbit_[depth]) return false;
    auto& child = b_stack_[depth + 1];
    child.clear();
    for (const auto& g : parent)
      if (g(gamma) == gamma) child.push_back(g);
    if (child.size() != a_sizes_[depth + 1]) return false;
    return point_orbit_sizes(child, degree_) == a_profiles_[depth + 1];
  }

  bool accept(const Permutation& h) override {
    if (!same_order_) return false;
    const Permutation h_inv = h.inverse();
    return std::all_of(a_gens_.begin(), a_gens_.end(), [&](const Permutation& s) { return b_.contains(h * s * h_inv); });
  }

 private:
  std::vector<Permutation> a_gens_;
  const PermGroup& b_;
  std::vector<int> base_;
  int degree_;
  bool same_order_;
  bool use_lists_ = false;
  std::vector<Permutation> b_elements_;
  std::vector<std::size_t> a_sizes_;
  std::vector<std::vector<int>> a_profiles_;
  std::vector<int> a_point_orbit_;
  std::vector<std::vector<Permutation>> b_stack_;
};

}  // namespace

std::optional<Permutation> search_element(const PermGroup& group, std::size_t levels, SearchProperty& property) {
  if (levels > group.chain().size()) throw std::invalid_argument("search depth exceeds chain length");
  property.begin(0);
  Backtracker bt(group, levels, property);
  return bt.descend(Permutation(group.degree()), 0);
}

PermGroup search_subgroup(const PermGroup& group, std::size_t levels, SearchProperty& property,
                          const std::vector<Permutation>& seed) {
  if (levels > group.chain().size()) throw std::invalid_argument("search depth exceeds chain length");
  const std::vector<int> base = group.base();
  std::vector<Permutation> gens = group.stabilizer_generators(levels);
  gens.insert(gens.end(), seed.begin(), seed.end());
  PermGroup k(group.degree(), gens, base);
  Backtracker bt(group, levels, property);

  for (std::size_t l = levels; l-- > 0;) {
    property.begin(l);
    const ChainLevel& level = group.chain()[l];
    std::vector<int> candidates = level.orbit;
    std::sort(candidates.begin(), candidates.end());
    std::array<bool, kMaxDegree> failed{};
    for (int gamma : candidates) {
      if (k.chain()[l].in_orbit(gamma) || failed[static_cast<std::size_t>(gamma)]) continue;
      std::optional<Permutation> found;
      const Permutation& h = level.coset_rep(gamma);
      if (property.consistent(h, l)) found = bt.descend(h, l + 1);
      if (found) {
        gens = k.generators();
        gens.push_back(*found);
        k = PermGroup(group.degree(), gens, base);
      } else {
        // Nothing maps base point l into the K^(l)-orbit of gamma either.
        std::vector<int> orbit{gamma};
        failed[static_cast<std::size_t>(gamma)] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
          for (const auto& s : k.chain()[l].generators) {
            const int next = s(orbit[head]);
            if (!failed[static_cast<std::size_t>(next)]) {
              failed[static_cast<std::size_t>(next)] = true;
              orbit.push_back(next);
            }
          }
      }
    }
  }
  return PermGroup(group.degree(), k.generators());
}

std::vector<int> search_base(const PermGroup& q) {
  std::vector<int> out;
  std::array<bool, kMaxDegree> seen{};
  for (int start : q.support()) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    seen[static_cast<std::size_t>(start)] = true;
    const std::size_t first = out.size();
    out.push_back(start);
    for (std::size_t head = first; head < out.size(); ++head)
      for (const auto& s : q.generators()) {
        const int next = s(out[head]);
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = true;
          out.push_back(next);
        }
      }
  }
  return out;
}

PermGroup centralizer(const PermGroup& ambient, const PermGroup& q) {
  require_subgroup(q, ambient, "centralizer");
  const std::vector<int> base = search_base(q);
  const PermGroup g = ambient.with_base_prefix(base);
  CentralizerProperty property(q, base);
  std::vector<Permutation> seed;
  for (const auto& s : q.generators())
    if (property.accept(s)) seed.push_back(s);
  return search_subgroup(g, base.size(), property, seed);
}

PermGroup center(const PermGroup& g) { return centralizer(g, g); }

PermGroup normalizer(const PermGroup& ambient, const PermGroup& q) {
  require_subgroup(q, ambient, "normalizer");
  const std::vector<int> base = search_base(q);
  const PermGroup g = ambient.with_base_prefix(base);
  ConjugacyProperty property(q, q, base);
  return search_subgroup(g, base.size(), property, q.generators());
}

std::optional<Permutation> conjugating_element(const PermGroup& ambient, const PermGroup& a, const PermGroup& b) {
  require_subgroup(a, ambient, "is_conjugate_subgroup");
  require_subgroup(b, ambient, "is_conjugate_subgroup");
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() <= kElementListLimit && signature(a) != signature(b)) return std::nullopt;
  const std::vector<int> base = search_base(a);
  const PermGroup g = ambient.with_base_prefix(base);
  ConjugacyProperty property(a, b, base);
  return search_element(g, base.size(), property);
}

bool is_conjugate_subgroup(const PermGroup& ambient, const PermGroup& a, const PermGroup& b) {
  return conjugating_element(ambient, a, b).has_value();
}

SubgroupSignature signature(const std::vector<Permutation>& elements, int degree) {
  SubgroupSignature sig;
  sig.order = elements.size();
  std::map<std::vector<int>, int> counts;
  for (const auto& e : elements) ++counts[e.cycle_type()];
  sig.cycle_types.assign(counts.begin(), counts.end());
  std::vector<int> sizes;
  for (const auto& o : orbits_of(elements, degree)) sizes.push_back(static_cast<int>(o.size()));
  sig.orbit_sizes = std::move(sizes);
  return sig;
}

SubgroupSignature signature(const PermGroup& g) {
  if (g.order() > kElementListLimit) {
    SubgroupSignature sig;
    sig.order = g.order();
    sig.orbit_sizes = orbit_sizes(g);
    return sig;
  }
  return signature(g.elements(), g.degree());
}

}  // namespace brauerlab
