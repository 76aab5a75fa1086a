#include "brauerlab/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "brauerlab/error.hpp"
#include "cayley.hpp"

namespace brauerlab {

namespace {

int mod(long long v, int m) {
  const long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a prime");
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  std::uint64_t n = 1;
  for (int f : factors_) {
    if (f < 2) throw std::invalid_argument("invariant factors must be at least 2");
    n *= static_cast<std::uint64_t>(f);
    if (n > (std::uint64_t{1} << 20)) throw std::invalid_argument("abelian group too large (order above 2^20)");
  }
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (int f : factors_) n *= static_cast<std::uint64_t>(f);
  return n;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = mod(a[i] + b[i], factors_[i]);
  return out;
}

AbelianGroup::Element AbelianGroup::negate(const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = mod(-a[i], factors_[i]);
  return out;
}

AbelianGroup::Element AbelianGroup::unit(std::size_t i) const {
  Element out = zero();
  out.at(i) = 1;
  return out;
}

std::vector<AbelianGroup::Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  Element x = zero();
  while (true) {
    out.push_back(x);
    std::size_t i = factors_.size();
    while (i > 0 && ++x[i - 1] == factors_[i - 1]) x[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::size_t AbelianGroup::index_of(const Element& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(a[i]);
  return idx;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " x C" : "C") + std::to_string(factors_[i]);
  return out;
}

std::string CharacterLabel::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) out += (i ? "," : "") + std::to_string(exponents[i]);
  return out + ")";
}

std::vector<int> p_prime_parts(const AbelianGroup& h, int p) {
  require_prime(p);
  std::vector<int> out;
  for (int f : h.factors()) {
    while (f % p == 0) f /= p;
    out.push_back(f);
  }
  return out;
}

int character_target_order(const AbelianGroup& h, int p) {
  int m = 1;
  for (int part : p_prime_parts(h, p)) m = std::lcm(m, part);
  return m;
}

std::vector<CharacterLabel> characters(const AbelianGroup& h, int p) {
  const std::vector<int> parts = p_prime_parts(h, p);
  std::vector<CharacterLabel> out;
  std::vector<int> e(parts.size(), 0);
  while (true) {
    out.push_back({e});
    std::size_t i = parts.size();
    while (i > 0 && ++e[i - 1] >= parts[i - 1]) e[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

int character_value(const AbelianGroup& h, int p, const CharacterLabel& chi, const AbelianGroup::Element& x) {
  const std::vector<int> parts = p_prime_parts(h, p);
  const int m = character_target_order(h, p);
  if (chi.exponents.size() != parts.size() || x.size() != parts.size())
    throw std::invalid_argument("character or element of the wrong rank");
  long long v = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) v += static_cast<long long>(chi.exponents[i]) * x[i] * (m / parts[i]);
  return mod(v, m);
}

SemidirectAction SemidirectAction::build(AbelianGroup h, PermGroup u,
                                         const std::vector<std::pair<Permutation, EndoMatrix>>& alpha) {
  SemidirectAction out(std::move(h), std::move(u));
  out.elements_ = out.h_.elements();
  const auto& f = out.h_.factors();
  const std::size_t r = f.size();

  std::vector<std::vector<std::size_t>> images;
  for (const auto& [g, a] : alpha) {
    if (g.degree() != out.u_.degree() || !out.u_.contains(g))
      throw std::invalid_argument(g.to_string() + " is not an element of " + describe(out.u_));
    if (a.size() != r || std::any_of(a.begin(), a.end(), [&](const auto& row) { return row.size() != r; }))
      throw std::invalid_argument("matrix for " + g.to_string() + " is not " + std::to_string(r) + "x" + std::to_string(r));
    // x_j is only defined mod f_j, so f_j * A[i][j] must vanish mod f_i.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (static_cast<long long>(f[j]) * a[i][j] % f[i] != 0)
          throw std::invalid_argument("matrix for " + g.to_string() + " is not well defined on " + out.h_.to_string());
    std::vector<std::size_t> perm;
    std::vector<bool> hit(out.elements_.size());
    for (const auto& x : out.elements_) {
      AbelianGroup::Element y(r);
      for (std::size_t i = 0; i < r; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < r; ++j) s += static_cast<long long>(a[i][j]) * x[j];
        y[i] = mod(s, f[i]);
      }
      const std::size_t k = out.h_.index_of(y);
      if (hit[k]) throw std::invalid_argument("matrix for " + g.to_string() + " is not bijective on " + out.h_.to_string());
      hit[k] = true;
      perm.push_back(k);
    }
    out.gens_.push_back(g);
    images.push_back(std::move(perm));
  }

  std::vector<std::size_t> one(out.elements_.size());
  std::iota(one.begin(), one.end(), std::size_t{0});
  out.alpha_ = detail::extend_along_cayley_graph(out.gens_, images, Permutation(out.u_.degree()), one,
                                                 [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                                                   std::vector<std::size_t> c(b.size());
                                                   for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
                                                   return c;
                                                 });
  if (out.alpha_.size() != out.u_.order())
    throw std::invalid_argument("the listed elements generate a proper subgroup of " + describe(out.u_));
  return out;
}

SemidirectAction SemidirectAction::trivial(AbelianGroup h, PermGroup u) {
  EndoMatrix id(h.rank(), std::vector<int>(h.rank(), 0));
  for (std::size_t i = 0; i < h.rank(); ++i) id[i][i] = 1;
  std::vector<std::pair<Permutation, EndoMatrix>> alpha;
  for (const auto& g : u.generators()) alpha.push_back({g, id});
  if (alpha.empty()) alpha.push_back({Permutation(u.degree()), id});
  return build(std::move(h), std::move(u), alpha);
}

AbelianGroup::Element SemidirectAction::act(const Permutation& g, const AbelianGroup::Element& x) const {
  return elements_[alpha_.at(g)[h_.index_of(x)]];
}

CharacterLabel SemidirectAction::act_on_character(int p, const Permutation& g, const CharacterLabel& chi) const {
  const std::vector<int> parts = p_prime_parts(h_, p);
  const int m = character_target_order(h_, p);
  const Permutation gi = g.inverse();
  CharacterLabel out{std::vector<int>(parts.size())};
  for (std::size_t j = 0; j < parts.size(); ++j) {
    // value on the j-th generator is e_j * (M / m_j)
    const int v = character_value(h_, p, chi, act(gi, h_.unit(j)));
    out.exponents[j] = v / (m / parts[j]);
  }
  return out;
}

PermGroup inertia_subgroup(const SemidirectAction& action, int p, const CharacterLabel& chi) {
  std::vector<Permutation> stab;
  for (const auto& g : action.u().elements())
    if (action.act_on_character(p, g, chi) == chi) stab.push_back(g);
  return PermGroup(action.u().degree(), stab);
}

std::vector<InventoryRow> inertia_inventory(const SemidirectAction& action, int p) {
  std::set<CharacterLabel> seen;
  std::vector<InventoryRow> rows;
  for (const auto& chi : characters(action.h(), p)) {
    if (seen.count(chi)) continue;
    std::vector<CharacterLabel> orbit{chi};
    seen.insert(chi);
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : action.u_generators()) {
        CharacterLabel next = action.act_on_character(p, g, orbit[head]);
        if (seen.insert(next).second) orbit.push_back(std::move(next));
      }
    std::sort(orbit.begin(), orbit.end());
    rows.push_back(InventoryRow{orbit.front(), inertia_subgroup(action, p, orbit.front()), orbit.size(), orbit});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const InventoryRow& a, const InventoryRow& b) {
    return std::tie(a.orbit_size, a.representative) < std::tie(b.orbit_size, b.representative);
  });
  return rows;
}

}  // namespace brauerlab
