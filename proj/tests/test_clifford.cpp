#include <doctest.h>

#include <map>
#include <random>

#include "brauerlab/clifford.hpp"
#include "brauerlab/error.hpp"
#include "oracles/clifford_fixtures.hpp"

using namespace brauerlab;
using oracle::Fixture;

namespace {

const Permutation kSwap = Permutation::parse("(1,2)", 2);
const EndoMatrix kSwapMatrix{{0, 1}, {1, 0}};

SemidirectAction swap_action() {
  return SemidirectAction::build(AbelianGroup({2, 2}), PermGroup(2, {kSwap}), {{kSwap, kSwapMatrix}});
}

}  // namespace

TEST_CASE("abelian group arithmetic") {
  const AbelianGroup h({2, 6});
  CHECK(h.order() == 12);
  CHECK(h.elements().size() == 12);
  CHECK(h.add({1, 5}, {1, 3}) == AbelianGroup::Element{0, 2});
  CHECK(h.negate({1, 5}) == AbelianGroup::Element{1, 1});
  for (std::size_t i = 0; i < h.elements().size(); ++i) CHECK(h.index_of(h.elements()[i]) == i);
  CHECK(h.to_string() == "C2 x C6");
  CHECK(AbelianGroup({}).order() == 1);
  CHECK_THROWS_AS(AbelianGroup({2, 1}), std::invalid_argument);
}

TEST_CASE("characters") {
  CHECK(characters(AbelianGroup({2, 2}), 2).size() == 1);
  CHECK(characters(AbelianGroup({2, 2}), 3).size() == 4);
  CHECK(characters(AbelianGroup({6}), 3).size() == 2);
  CHECK(characters(AbelianGroup({4, 12, 5}), 2).size() == 15);
  CHECK(character_target_order(AbelianGroup({4, 12, 5}), 2) == 15);
  CHECK_THROWS_AS(characters(AbelianGroup({2}), 4), std::invalid_argument);

  // each label is a homomorphism, distinct labels give distinct functions
  const AbelianGroup h({6, 3});
  std::set<std::vector<int>> tables;
  for (const auto& chi : characters(h, 2)) {
    std::vector<int> t;
    for (const auto& x : h.elements()) {
      t.push_back(character_value(h, 2, chi, x));
      for (const auto& y : h.elements())
        CHECK(character_value(h, 2, chi, h.add(x, y)) ==
              (character_value(h, 2, chi, x) + character_value(h, 2, chi, y)) % character_target_order(h, 2));
    }
    tables.insert(t);
  }
  CHECK(tables.size() == 9);
}

TEST_CASE("inertia subgroups") {
  const SemidirectAction a = swap_action();
  CHECK(inertia_subgroup(a, 3, {{0, 0}}) == a.u());
  CHECK(inertia_subgroup(a, 3, {{1, 0}}).is_trivial());
  CHECK(inertia_subgroup(a, 3, {{1, 1}}) == a.u());
  CHECK(a.act_on_character(3, kSwap, {{1, 0}}) == CharacterLabel{{0, 1}});
}

TEST_CASE("inventory of the swap action") {
  const auto rows = inertia_inventory(swap_action(), 3);
  REQUIRE(rows.size() == 3);
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> sizes;
  for (const auto& r : rows) {
    orders.push_back(r.inertia.order());
    sizes.push_back(r.orbit_size);
  }
  CHECK(orders == std::vector<std::uint64_t>{2, 2, 1});
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2});
  CHECK(rows[0].representative == CharacterLabel{{0, 0}});
  CHECK(rows[1].representative == CharacterLabel{{1, 1}});
  CHECK(rows[2].orbit == std::vector<CharacterLabel>{{{0, 1}}, {{1, 0}}});
  CHECK(rows[2].representative.to_string() == "(0,1)");
}

TEST_CASE("other inventories") {
  const auto trivial = inertia_inventory(SemidirectAction::trivial(AbelianGroup({3, 3}), PermGroup::symmetric(3)), 2);
  CHECK(trivial.size() == 9);
  for (const auto& r : trivial) CHECK(r.inertia == PermGroup::symmetric(3));

  const auto none = inertia_inventory(SemidirectAction::trivial(AbelianGroup({5}), PermGroup::trivial(1)), 2);
  CHECK(none.size() == 5);

  const SemidirectAction inversion =
      SemidirectAction::build(AbelianGroup({3}), PermGroup(2, {kSwap}), {{kSwap, EndoMatrix{{-1}}}});
  const auto rows = inertia_inventory(inversion, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].representative == CharacterLabel{{0}});
  CHECK(rows[0].inertia.order() == 2);
  CHECK(rows[1].orbit_size == 2);
  CHECK(rows[1].inertia.is_trivial());
}

TEST_CASE("invalid actions") {
  const Permutation c3 = Permutation::parse("(1,2,3)", 3);
  try {
    SemidirectAction::build(AbelianGroup({2, 2}), PermGroup(3, {c3}), {{c3, kSwapMatrix}});
    FAIL("expected a homomorphism error");
  } catch (const HomomorphismError& e) {
    CHECK(e.g() == c3);
  }
  CHECK_THROWS_AS(SemidirectAction::build(AbelianGroup({2, 2}), PermGroup(2, {kSwap}), {{kSwap, EndoMatrix{{1, 1}, {1, 1}}}}),
                  std::invalid_argument);
  // x -> 2x is not well defined from C_2 to C_4
  CHECK_THROWS_AS(SemidirectAction::build(AbelianGroup({2, 4}), PermGroup(2, {kSwap}), {{kSwap, EndoMatrix{{1, 0}, {1, 1}}}}),
                  std::invalid_argument);
}

TEST_CASE("orbit-stabilizer on random fixtures") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 100; ++trial) {
    const Fixture f = oracle::random_fixture(rng);
    CAPTURE(trial);
    CAPTURE(f.h().to_string());
    CAPTURE(f.p);
    const SemidirectAction action = f.action();
    const std::uint64_t u_order = action.u().order();
    CHECK(u_order <= 24);
    CHECK(f.h().order() <= 64);

    const auto rows = inertia_inventory(action, f.p);
    std::size_t total = 0;
    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& r : rows) {
      CHECK(r.inertia.order() * r.orbit_size == u_order);
      total += r.orbit_size;
      ++seen[{r.orbit_size, static_cast<std::size_t>(r.inertia.order())}];
      for (const auto& chi : r.orbit) {
        const auto elements = action.u().elements();
        const auto g = std::find_if(elements.begin(), elements.end(), [&](const Permutation& x) {
          return action.act_on_character(f.p, x, r.representative) == chi;
        });
        REQUIRE(g != elements.end());
        std::vector<Permutation> conj;
        for (const auto& t : r.inertia.generators()) conj.push_back(*g * t * g->inverse());
        CHECK(inertia_subgroup(action, f.p, chi) == PermGroup(action.u().degree(), conj));
      }
    }
    std::uint64_t p_part = 1;
    const AbelianGroup h = f.h();
    for (int factor : h.factors())
      for (int q = factor; q % f.p == 0; q /= f.p) p_part *= static_cast<std::uint64_t>(f.p);
    CHECK(total == h.order() / p_part);
    CHECK(total == characters(f.h(), f.p).size());
    CHECK(seen == oracle::brute_orbits(f));
  }
}
