#include <doctest.h>

#include <random>

#include "brauerlab/error.hpp"
#include "brauerlab/group_search.hpp"
#include "brauerlab/perm_group.hpp"
#include "oracles/brute_group.hpp"

using namespace brauerlab;

namespace {

PermGroup G(int n, const char* gens) { return PermGroup(n, parse_permutation_list(gens, n)); }

oracle::Elements as_set(const PermGroup& g) {
  oracle::Elements out;
  for (const auto& e : g.elements()) out.insert(e.images());
  return out;
}

std::vector<oracle::Images> gen_images(const PermGroup& g) {
  std::vector<oracle::Images> out;
  for (const auto& s : g.generators()) out.push_back(s.images());
  return out;
}

}  // namespace

TEST_CASE("generated group orders") {
  CHECK(G(3, "(1,2);(1,2,3)").order() == 6);
  CHECK(G(4, "(1,2)(3,4);(1,3)(2,4)").order() == 4);
  CHECK(G(8, "(1,2);(1,3)(2,4);(1,5)(2,6)(3,7)(4,8)").order() == 128);
  CHECK(PermGroup::symmetric(10).order() == 3628800);
  CHECK(PermGroup::alternating(13).order() == 3113510400ull);
  CHECK(PermGroup::symmetric(16).order() == 20922789888000ull);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK_THROWS_AS(generate(std::vector<Permutation>{}), std::invalid_argument);
}

TEST_CASE("chain order equals brute-force closure and members pass membership") {
  const std::vector<std::pair<int, const char*>> cases{
      {6, "(1,2)(5,6);(1,3)(2,4)"},         {7, "(1,2,3,4,5,6,7);(1,2)"},
      {8, "(1,2,3)(4,5);(6,7,8)"},          {6, "(1,2)(3,4);(1,3,2,4)(5,6)"},
      {8, "(1,5)(2,6)(3,7)(4,8);(1,2)(5,6)"}, {5, "(1,2,3,4,5);(2,5)(3,4)"}};
  for (const auto& [n, text] : cases) {
    const PermGroup g = G(n, text);
    const auto brute = oracle::closure(gen_images(g), n);
    CHECK(g.order() == brute.size());
    std::uint64_t product = 1;
    for (const auto& level : g.chain()) product *= level.orbit.size();
    CHECK(product == g.order());
    CHECK(as_set(g) == brute);
    for (const auto& e : g.elements()) CHECK(g.contains(e));
    for (const auto& s : g.generators()) CHECK(g.contains(s));
  }
  CHECK_FALSE(G(4, "(1,2)(3,4);(1,3)(2,4)").contains(Permutation::parse("(1,2)", 4)));
}

TEST_CASE("base prefix is honoured and keeps trivial levels") {
  const PermGroup g = G(6, "(1,2)(3,4)");
  const std::vector<int> prefix{5, 0, 2};
  const PermGroup h = g.with_base_prefix(prefix);
  REQUIRE(h.base().size() >= 3);
  CHECK(h.base()[0] == 5);
  CHECK(h.base()[1] == 0);
  CHECK(h.order() == 2);
  CHECK(h == g);
}

TEST_CASE("orbits") {
  auto sizes = [](const PermGroup& g) { return orbit_sizes(g); };
  CHECK(sizes(PermGroup::trivial(5)) == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(sizes(G(6, "(1,2)(3,4);(1,3,2,4)(5,6)")) == std::vector<int>{4, 2});
  CHECK(sizes(G(14, "(1,2);(1,3)(2,4);(1,5)(2,6)(3,7)(4,8);(9,10);(9,11)(10,12);(13,14)")) ==
        std::vector<int>{8, 4, 2});
  const auto o = orbits(G(7, "(2,5);(3,4,6)"));
  REQUIRE(o.size() == 4);
  CHECK(o[0] == std::vector<int>{2, 3, 5});
  CHECK(o[1] == std::vector<int>{1, 4});
  CHECK(o[2] == std::vector<int>{0});
}

TEST_CASE("centralizer and center against brute force") {
  const PermGroup s4 = PermGroup::symmetric(4);
  const PermGroup v4 = G(4, "(1,2)(3,4);(1,3)(2,4)");
  CHECK(centralizer(s4, v4).order() == 4);
  CHECK(centralizer(s4, v4) == v4);

  const PermGroup a6 = PermGroup::alternating(6);
  const PermGroup q6 = G(6, "(1,2)(5,6);(1,3)(2,4)");
  const PermGroup c = centralizer(a6, q6);
  CHECK(c.order() == 2);
  CHECK(c.contains(Permutation::parse("(1,2)(3,4)", 6)));
  CHECK(c.order() == oracle::centralizer(oracle::all_permutations(6, true), gen_images(q6)).size());

  CHECK(center(PermGroup::symmetric(3)).order() == 1);
  CHECK(center(q6).order() == 2);
  CHECK(center(v4) == v4);
  CHECK_THROWS_AS(centralizer(a6, G(6, "(1,2)")), ContainmentError);
}

TEST_CASE("normalizer against brute force") {
  const PermGroup s4 = PermGroup::symmetric(4);
  CHECK(normalizer(s4, G(4, "(1,2)")).order() == 4);
  const PermGroup q6 = G(6, "(1,2)(5,6);(1,3)(2,4)");
  CHECK(normalizer(q6, q6) == q6);
  const auto s6 = oracle::all_permutations(6);
  const std::vector<std::pair<int, const char*>> cases{{6, "(1,2)(3,4)"}, {6, "(1,2,3)"}, {6, "(1,2)(5,6);(1,3)(2,4)"},
                                                       {6, "(1,2)(3,4);(3,4)(5,6)"}, {6, "(1,2,3,4)(5,6)"}};
  for (const auto& [n, text] : cases) {
    const PermGroup q = G(n, text);
    CHECK(normalizer(PermGroup::symmetric(6), q).order() == oracle::normalizer(s6, as_set(q)).size());
    if (q.is_subgroup_of(PermGroup::alternating(6)))
      CHECK(normalizer(PermGroup::alternating(6), q).order() ==
            oracle::normalizer(oracle::all_permutations(6, true), as_set(q)).size());
  }
}

TEST_CASE("normalizer contains centralizer contains center") {
  const PermGroup s8 = PermGroup::symmetric(8);
  for (const char* text : {"(1,2)(3,4);(1,3)(2,4)", "(1,2,3,4)(5,6)", "(1,5)(2,6)(3,7)(4,8);(1,2)(5,6)"}) {
    const PermGroup q = G(8, text);
    const PermGroup n = normalizer(s8, q);
    const PermGroup c = centralizer(s8, q);
    const PermGroup z = center(q);
    CHECK(c.is_subgroup_of(n));
    CHECK(z.is_subgroup_of(c));
    for (const auto& g : c.generators())
      for (const auto& s : q.generators()) CHECK(g * s == s * g);
    for (const auto& g : n.generators())
      for (const auto& s : q.generators()) CHECK(q.contains(g * s * g.inverse()));
  }
}

TEST_CASE("subgroup conjugacy") {
  const PermGroup s4 = PermGroup::symmetric(4);
  CHECK(is_conjugate_subgroup(s4, G(4, "(1,2)"), G(4, "(3,4)")));
  CHECK_FALSE(is_conjugate_subgroup(s4, G(4, "(1,2)"), G(4, "(1,2)(3,4)")));
  const PermGroup a6 = PermGroup::alternating(6);
  CHECK_FALSE(is_conjugate_subgroup(a6, G(6, "(1,2)(3,4);(1,3)(2,4)"), G(6, "(1,2)(3,4);(3,4)(5,6)")));

  const PermGroup a = G(6, "(1,2)(3,4);(1,3)(2,4)");
  const PermGroup b = G(6, "(3,4)(5,6);(3,5)(4,6)");
  auto w = conjugating_element(a6, a, b);
  REQUIRE(w.has_value());
  CHECK(a6.contains(*w));
  for (const auto& s : a.generators()) CHECK(b.contains(*w * s * w->inverse()));
}

TEST_CASE("conjugacy is an equivalence relation with composable witnesses") {
  const PermGroup s6 = PermGroup::symmetric(6);
  const auto s6_all = oracle::all_permutations(6);
  std::vector<PermGroup> subs;
  for (const char* text : {"(1,2)", "(5,6)", "(1,2)(3,4)", "(2,3)(5,6)", "(1,2,3)", "(4,5,6)", "(1,2)(3,4);(1,3)(2,4)",
                           "(1,2)(3,4);(3,4)(5,6)", "(3,4)(5,6);(3,5)(4,6)", "(1,2,3,4)", "(1,2,3,4)(5,6)"})
    subs.push_back(G(6, text));
  for (const auto& a : subs)
    for (const auto& b : subs) {
      auto w = conjugating_element(s6, a, b);
      CHECK(w.has_value() == oracle::conjugate(s6_all, as_set(a), as_set(b)));
      if (!w) continue;
      auto back = conjugating_element(s6, b, a);
      REQUIRE(back.has_value());
      const Permutation inv = w->inverse();
      for (const auto& s : b.generators()) CHECK(a.contains(inv * s * *w));
      for (const auto& c : subs) {
        auto w2 = conjugating_element(s6, b, c);
        if (!w2) continue;
        const Permutation composite = *w2 * *w;
        for (const auto& s : a.generators()) CHECK(c.contains(composite * s * composite.inverse()));
      }
    }
}

TEST_CASE("centralizers of random subgroups of S_7 match brute force") {
  std::mt19937 rng(7);
  const auto s7 = oracle::all_permutations(7);
  const PermGroup ambient = PermGroup::symmetric(7);
  std::vector<int> pts{0, 1, 2, 3, 4, 5, 6};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Permutation> gens;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      std::shuffle(pts.begin(), pts.end(), rng);
      Permutation p = Permutation::from_images(pts);
      gens.push_back(p);
    }
    const PermGroup q(7, gens);
    CHECK(centralizer(ambient, q).order() == oracle::centralizer(s7, gen_images(q)).size());
  }
}
