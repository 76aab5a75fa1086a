#include "brauerlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace brauerlab {

namespace {

void compute_orbit(ChainLevel& level, int degree) {
  level.slot.fill(-1);
  level.orbit.clear();
  level.transversal.clear();
  level.transversal_inverse.clear();
  const Permutation id(degree);
  level.orbit.push_back(level.base_point);
  level.slot[static_cast<std::size_t>(level.base_point)] = 0;
  level.transversal.push_back(id);
  level.transversal_inverse.push_back(id);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int point = level.orbit[head];
    for (const auto& s : level.generators) {
      const int next = s(point);
      if (level.in_orbit(next)) continue;
      level.slot[static_cast<std::size_t>(next)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(next);
      Permutation u = s * level.transversal[head];
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

bool fixes_all(const Permutation& g, std::span<const int> points) {
  return std::all_of(points.begin(), points.end(), [&](int b) { return g(b) == b; });
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::span<const int> base_prefix)
    : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("group degree out of range");
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  build(base_prefix);
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<int> points(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) points[static_cast<std::size_t>(i)] = i;
  return symmetric_on(degree, points);
}

PermGroup PermGroup::alternating(int degree) {
  std::vector<int> points(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) points[static_cast<std::size_t>(i)] = i;
  return alternating_on(degree, points);
}

PermGroup PermGroup::symmetric_on(int degree, std::span<const int> points) {
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < points.size(); ++i) gens.push_back(Permutation::cycle(degree, {points[0], points[i]}));
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating_on(int degree, std::span<const int> points) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < points.size(); ++i)
    gens.push_back(Permutation::cycle(degree, {points[0], points[1], points[i]}));
  return PermGroup(degree, std::move(gens));
}

void PermGroup::rebuild_level(std::size_t i) { compute_orbit(chain_[i], degree_); }

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < chain_.size(); ++l) {
    const ChainLevel& level = chain_[l];
    const int gamma = g(level.base_point);
    if (!level.in_orbit(gamma)) return {g, l};
    g = level.transversal_inverse[static_cast<std::size_t>(level.slot[static_cast<std::size_t>(gamma)])] * g;
  }
  return {g, chain_.size()};
}

void PermGroup::build(std::span<const int> base_prefix) {
  std::vector<int> base;
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_) throw std::invalid_argument("base point out of range");
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  for (const auto& g : generators_) {
    if (fixes_all(g, base)) base.push_back(g.support().front());
  }
  chain_.assign(base.size(), ChainLevel{});
  for (std::size_t i = 0; i < base.size(); ++i) {
    chain_[i].base_point = base[i];
    for (const auto& g : generators_)
      if (fixes_all(g, std::span<const int>(base.data(), i))) chain_[i].generators.push_back(g);
    rebuild_level(i);
  }

  // Deterministic Schreier-Sims: verify Schreier generators level by level
  // from the bottom, restarting below any level that received a new generator.
  std::size_t i = chain_.size();
  while (i > 0) {
    const std::size_t level_index = i - 1;
    bool complete = true;
    for (std::size_t k = 0; k < chain_[level_index].orbit.size() && complete; ++k) {
      for (std::size_t s_index = 0; s_index < chain_[level_index].generators.size(); ++s_index) {
        const ChainLevel& level = chain_[level_index];
        const Permutation& s = level.generators[s_index];
        const int gamma = level.orbit[k];
        const int image = s(gamma);
        Permutation schreier = level.transversal_inverse[static_cast<std::size_t>(level.slot[static_cast<std::size_t>(image)])] *
                               s * level.transversal[k];
        auto [residue, stop] = sift(std::move(schreier), level_index + 1);
        if (residue.is_identity()) continue;
        if (stop == chain_.size()) {
          ChainLevel extra;
          extra.base_point = residue.support().front();
          chain_.push_back(std::move(extra));
        }
        for (std::size_t l = level_index + 1; l <= stop; ++l) {
          chain_[l].generators.push_back(residue);
          rebuild_level(l);
        }
        i = stop + 1;
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& level : chain_) out.push_back(level.base_point);
  return out;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level >= chain_.size()) return {};
  return chain_[level].generators;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t result = 1;
  for (const auto& level : chain_) result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == chain_.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> current{Permutation(degree_)};
  // g = u_0 * u_1 * ... * u_{k-1}; build from the bottom of the chain upward.
  for (std::size_t l = chain_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * chain_[l].transversal.size());
    for (const auto& u : chain_[l].transversal)
      for (const auto& rest : current) next.push_back(u * rest);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

PermGroup PermGroup::with_base_prefix(std::span<const int> prefix) const {
  std::vector<Permutation> strong = generators_;
  for (const auto& level : chain_)
    for (const auto& g : level.generators)
      if (std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  return PermGroup(degree_, std::move(strong), prefix);
}

std::vector<int> PermGroup::support() const {
  std::vector<int> out;
  for (int x = 0; x < degree_; ++x)
    if (std::any_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return g(x) != x; }))
      out.push_back(x);
  return out;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order() == b.order() && a.is_subgroup_of(b);
}

PermGroup generate(std::span<const Permutation> generators) {
  if (generators.empty()) throw std::invalid_argument("generate: empty generator list (degree unknown)");
  return PermGroup(generators.front().degree(), std::vector<Permutation>(generators.begin(), generators.end()));
}

std::vector<std::vector<int>> orbits_of(std::span<const Permutation> elements, int degree) {
  std::vector<int> label(static_cast<std::size_t>(degree), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> orbit{start};
    label[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : elements) {
        const int next = g(orbit[head]);
        if (label[static_cast<std::size_t>(next)] < 0) {
          label[static_cast<std::size_t>(next)] = static_cast<int>(out.size());
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) { return orbits_of(g.generators(), g.degree()); }

std::vector<int> orbit_sizes(const PermGroup& g) {
  std::vector<int> sizes;
  for (const auto& o : orbits(g)) sizes.push_back(static_cast<int>(o.size()));
  return sizes;
}

std::string describe(const PermGroup& g) {
  std::string out = "<";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i > 0) out += ',';
    out += g.generators()[i].to_string();
  }
  return out + ">";
}

}  // namespace brauerlab
