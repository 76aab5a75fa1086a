// Acceptance report: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauerlab/blocks.hpp"
#include "brauerlab/brauer_sc.hpp"
#include "brauerlab/clifford.hpp"
#include "brauerlab/group_search.hpp"
#include "brauerlab/modrep.hpp"
#include "brauerlab/sylow.hpp"
#include "brauerlab/weyl.hpp"
#include "cli.hpp"
#include "oracles/clifford_fixtures.hpp"
#include "oracles/gmp_bounds.hpp"
#include "oracles/rim_hooks.hpp"

using namespace brauerlab;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitSylow = 1.0;
constexpr double kLimitCentralizer = 60.0;
constexpr double kLimitTables = 30.0 * 60.0;
constexpr double kLimitSmallTables = 30.0;
constexpr double kLimitBoundMechanics = 30.0 * 60.0;
constexpr double kLimitS6 = 10.0;
constexpr double kLimitFc3 = 1.0;
constexpr double kLimitBounds = 1.0;
constexpr double kLimitBlocks = 10.0;
constexpr double kLimitWeyl = 60.0;
constexpr double kLimitClifford = 60.0;

constexpr int kCliffordFixtures = 100;
constexpr unsigned kCliffordSeed = 20261017;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& relative) {
  std::ifstream in(std::string(BRAUERLAB_GOLDEN_DIR) + "/" + relative, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermGroup G(int n, const char* gens) { return PermGroup(n, parse_permutation_list(gens, n)); }

using Row = std::tuple<std::uint64_t, std::uint64_t, int, int>;
using Table = std::map<Row, int>;

Table row_multiset(const std::vector<ScCandidate>& rows) {
  Table out;
  for (const auto& r : rows) ++out[Row{r.q_order, r.z_order, r.x, r.d}];
  return out;
}

const Table kWeight2Principal{{{4, 4, 2, 1}, 1}};
const Table kWeight2NonPrincipal{{{4, 4, 2, 1}, 2}};
const Table kWeight3{{{4, 4, 2, 1}, 1}, {{4, 4, 3, 2}, 2}, {{8, 2, 3, 2}, 1}};

struct TableCase {
  int n;
  int w;
  const Table* expected;  // null: only the row count and the C2^3 row are known
};
const std::vector<TableCase> kTables{{4, 2, &kWeight2Principal}, {5, 2, &kWeight2Principal},
                                     {7, 2, &kWeight2NonPrincipal}, {10, 2, &kWeight2NonPrincipal},
                                     {6, 3, &kWeight3}, {7, 3, &kWeight3}, {9, 3, &kWeight3}, {11, 4, nullptr}};

// Tables are shared by criteria 3 and 4.
std::map<std::pair<int, int>, std::vector<ScCandidate>>& table_cache() {
  static std::map<std::pair<int, int>, std::vector<ScCandidate>> cache;
  return cache;
}

const std::vector<ScCandidate>& table(int n, int w) {
  auto& cache = table_cache();
  auto it = cache.find({n, w});
  if (it == cache.end()) it = cache.emplace(std::pair{n, w}, enumerate_sc_candidates(n, w)).first;
  return it->second;
}

// 1. Sylow generator lists, compared through the CLI.
Outcome sylow_lists() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"sylow", "--n", "8", "--p", "2"}, "reference/sylow_n8_p2.txt"},
      {{"sylow", "--n", "14", "--p", "2"}, "reference/sylow_n14_p2.txt"},
      {{"sylow", "--n", "14", "--p", "2", "--alternating"}, "reference/sylow_n14_p2_alt.txt"},
  };
  for (auto [args, file] : cases) {
    args.insert(args.end(), {"--format", "json"});
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    std::string lines;
    const cli::Json j = cli::Json::parse(out.str());
    for (const auto& row : j.at("rows")) lines += row.at("generator").get<std::string>() + "\n";
    const std::string expected = slurp(file);
    o.require(code == 0 && !expected.empty() && lines == expected, file + " differs");
  }
  o.detail = o.pass ? "3 lists exact" : o.detail;
  return o;
}

// 2. Centralizer proposition, re-verified on the raw groups.
Outcome centralizer_proposition() {
  Outcome o;
  for (int n = 4; n <= 16; n += 2) {
    const CentralizerProfile cp = centralizer_profile(n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(cp.all_hold(), tag + " profile flags");
    if (n % 4 == 0) {
      o.require(cp.c_sym == cp.c_alt && cp.c_alt == cp.z_q, tag + " C_S = C_A = Z(Q)");
    } else {
      std::vector<Permutation> gens = cp.z_q.generators();
      gens.push_back(Permutation::cycle(n, {n - 2, n - 1}));
      o.require(cp.c_sym == PermGroup(n, gens) && cp.c_sym.order() == 2 * cp.z_q.order(), tag + " C_S = Z(Q) x P_2");
      o.require(cp.c_alt == cp.z_q, tag + " C_A = Z(Q)");
    }
  }
  if (o.pass) o.detail = "n = 4, 6, ..., 16";
  return o;
}

// 3. Brauer-pair tables.
Outcome brauer_tables(double& small_seconds) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& c : kTables) {
    if (c.n == 11) continue;
    o.require(row_multiset(table(c.n, c.w)) == *c.expected,
              "(" + std::to_string(c.n) + "," + std::to_string(c.w) + ") rows differ");
  }
  small_seconds = seconds_since(t0);
  const auto& big = table(11, 4);
  o.require(big.size() == 33, "(11,4) has " + std::to_string(big.size()) + " rows");
  const PermGroup c2_cubed = G(11, "(1,2)(3,4);(1,2)(5,6);(5,6)(7,8)");
  const PermGroup a11 = PermGroup::alternating(11);
  int hits = 0;
  for (const auto& r : big)
    if (r.q_order == 8 && is_conjugate_subgroup(a11, r.q_class.representative, c2_cubed)) {
      ++hits;
      o.require(Row{r.q_order, r.z_order, r.x, r.d} == Row{8, 8, 4, 2} && r.type_hint == "C2^3", "C2^3 row data");
    }
  o.require(hits == 1, "C2^3 row found " + std::to_string(hits) + " times");
  o.require(small_seconds < kLimitSmallTables, "small tables took " + std::to_string(small_seconds) + " s");
  if (o.pass) o.detail = "7 tables exact, (11,4): 33 rows incl. C2^3 (8,8,4,2)";
  return o;
}

// 4. Orbit structure and bound checks on every row; exceptional rows.
Outcome bound_mechanics() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& c : kTables) {
    std::vector<std::string> exceptional;
    for (const auto& r : table(c.n, c.w)) {
      ++rows;
      const OrbitAnalysis oa = orbit_analysis(r.q_class.representative);
      o.require(oa.pairwise_noniso, "isomorphic orbits in (" + std::to_string(c.n) + "," + std::to_string(c.w) + ")");
      o.require(bound_check(r), "bound_check fails in (" + std::to_string(c.n) + "," + std::to_string(c.w) + ")");
      if (oa.exceptional_kind != ExceptionalKind::none)
        exceptional.push_back(r.type_hint + ":x=" + std::to_string(r.x) + ":" + exceptional_name(oa.exceptional_kind));
    }
    std::sort(exceptional.begin(), exceptional.end());
    const std::vector<std::string> expected =
        c.w == 3 ? std::vector<std::string>{"C4:x=3:cyclic_plus_two", "V4:x=3:v4_three_twos"} : std::vector<std::string>{};
    o.require(exceptional == expected, "exceptional rows of (" + std::to_string(c.n) + "," + std::to_string(c.w) + ")");
  }
  if (o.pass) o.detail = std::to_string(rows) + " rows; exceptional rows only C4 and V4(x=3) at w=3";
  return o;
}

// 5. The S_6 twist example with the printed matrices.
Outcome s6_twist() {
  Outcome o;
  const S6TwistExample ex = s6_twist_example();
  const Permutation t = Permutation::parse("(5,6)", 6);
  const auto printed_s = PrimeFieldMatrix::from_rows(2, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  const auto printed_phi =
      PrimeFieldMatrix::from_rows(2, {{1, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  o.require(ex.s.image(t) == printed_s, "S((5,6)) differs from the printed matrix");
  o.require(ex.twisted.image(t) == printed_phi, "phiS((5,6)) differs from the printed matrix");
  o.require(ex.phi(t) == Permutation::parse("(1,2)(3,4)(5,6)", 6), "phi((5,6))");
  o.require(!module_isomorphic(ex.s, ex.twisted), "S and phiS are isomorphic");
  o.require(pair_equivalent(ex.s, ex.twisted), "not pair equivalent");
  if (o.pass) o.detail = "module_isomorphic = false, pair_equivalent = true";
  return o;
}

// 6. Automorphisms of F_3 C_3.
Outcome fc3() {
  Outcome o;
  const auto autos = group_algebra_autos_cyclic(3);
  o.require(autos.size() == 6, std::to_string(autos.size()) + " automorphisms");
  std::set<std::pair<int, int>> shapes;
  for (const auto& m : autos)
    for (int a : {1, 2})
      for (int b : {0, 1, 2})
        if (m == phi_ab(3, a, b)) shapes.insert({a, b});
  o.require(shapes.size() == 6, "not all of Phi_{a,b} shape");
  o.require(phi_ab(3, 1, 0) == PrimeFieldMatrix::identity(3, 3), "Phi_{1,0} != I");
  o.require(cyclic_endomorphism_matrix(3, {0, 0, 1}) == phi_ab(3, -1, -1), "Phi_{-1,-1} is not z -> z^2");
  const EndoCheck ec = endo_but_not_auto_check();
  o.require(ec.passed() && ec.matrix.rank() < 3, "endo_but_not_auto_check");
  if (o.pass) o.detail = "6 automorphisms, Phi_{1,0} = I, Phi_{-1,-1}: z -> z^2, singular endomorphism";
  return o;
}

// 7. Bound calculator against GMP.
Outcome bounds() {
  Outcome o;
  int compared = 0;
  const std::vector<std::tuple<GroupFamily, int, char>> two_power{
      {GroupFamily::Sym, 2, 'a'}, {GroupFamily::Alt, 2, 'b'}, {GroupFamily::WeylB, 2, 'e'}, {GroupFamily::WeylD, 2, 'f'}};
  for (const auto& [family, p, tag] : two_power)
    for (unsigned long q : {1ul, 2ul, 4ul, 8ul, 16ul, 32ul}) {
      const BoundReport r = feit_bound(family, p, BigInt(q));
      o.require(r.formula_tag == tag && to_string(r.bound) == oracle::gmp_bound(tag, q),
                family_name(family) + " |Q|=" + std::to_string(q));
      ++compared;
    }
  // The odd-p formulas take |Q| a power of p; use 3^0 .. 3^5.
  const std::vector<std::tuple<GroupFamily, int, char>> odd{
      {GroupFamily::Sym, 3, 'a'}, {GroupFamily::TildeSym, 3, 'c'}, {GroupFamily::WeylB, 3, 'd'}};
  for (const auto& [family, p, tag] : odd)
    for (unsigned long q : {1ul, 3ul, 9ul, 27ul, 81ul, 243ul}) {
      const BoundReport r = feit_bound(family, p, BigInt(q));
      o.require(r.formula_tag == tag && to_string(r.bound) == oracle::gmp_bound(tag, q),
                family_name(family) + " p=3 |Q|=" + std::to_string(q));
      ++compared;
    }
  if (o.pass) o.detail = std::to_string(compared) + " values, formulas a-f";
  return o;
}

bool staircase(const Partition& core) {
  const auto& parts = core.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] != static_cast<int>(parts.size() - i)) return false;
  return true;
}

// 8. Block combinatorics.
Outcome block_counts() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    std::set<std::pair<oracle::Parts, int>> labels;
    for (const auto& parts : oracle::partitions(n)) {
      const auto cores = oracle::all_p_cores_reachable(parts, 2);
      int size = 0;
      for (int x : *cores.begin()) size += x;
      labels.insert({*cores.begin(), (n - size) / 2});
    }
    const auto blocks = blocks_of_sym(n, 2);
    o.require(blocks.size() == labels.size(), "n=" + std::to_string(n) + " count");
    for (const auto& b : blocks) {
      o.require(labels.count({b.cores[0].parts(), b.weights[0]}) == 1, "n=" + std::to_string(n) + " label");
      o.require(staircase(b.cores[0]), "non-triangular 2-core " + b.cores[0].to_string());
    }
  }
  const auto weyl = blocks_of_weylB(2, 3);
  o.require(weyl.size() == 5, "blocks_of_weylB(2,3) has " + std::to_string(weyl.size()) + " labels");
  if (o.pass) o.detail = "n <= 12 match rim-hook removal; weylB(2,3): 5 labels";
  return o;
}

// 9. Weyl groups.
Outcome weyl_structure() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const BigInt fact = factorial(n);
    o.require(BigInt(weylB(n).order()) == power(2, n) * fact, "|B_" + std::to_string(n) + "|");
    o.require(BigInt(weylD(n).order()) == power(2, n - 1) * fact, "|D_" + std::to_string(n) + "|");
    o.require(base_selfcentralizing_check(n, WeylType::B), "B_" + std::to_string(n) + " base check");
  }
  // D_1 is trivial and D_2 = C2 x C2 is abelian with H' of index 2, so the
  // check is only meaningful from n = 3.
  for (int n = 3; n <= 6; ++n)
    o.require(base_selfcentralizing_check(n, WeylType::D), "D_" + std::to_string(n) + " base check");
  if (o.pass) o.detail = "orders n <= 6; base check B n = 1..6, D n = 3..6";
  return o;
}

// 10. Clifford inventory.
Outcome clifford_inventory() {
  Outcome o;
  const Permutation swap = Permutation::parse("(1,2)", 2);
  const auto action = SemidirectAction::build(AbelianGroup({2, 2}), PermGroup(2, {swap}), {{swap, {{0, 1}, {1, 0}}}});
  const auto rows = inertia_inventory(action, 3);
  std::vector<std::uint64_t> inertia;
  std::vector<std::size_t> sizes;
  for (const auto& r : rows) {
    inertia.push_back(r.inertia.order());
    sizes.push_back(r.orbit_size);
  }
  o.require(inertia == std::vector<std::uint64_t>{2, 2, 1}, "inertia orders");
  o.require(sizes == std::vector<std::size_t>{1, 1, 2}, "orbit sizes");

  std::mt19937 rng(kCliffordSeed);
  for (int trial = 0; trial < kCliffordFixtures; ++trial) {
    const oracle::Fixture f = oracle::random_fixture(rng);
    const SemidirectAction a = f.action();
    const std::uint64_t u = a.u().order();
    o.require(f.h().order() <= 64 && u <= 24, "fixture out of range");
    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    for (const auto& r : inertia_inventory(a, f.p)) {
      o.require(r.orbit_size * r.inertia.order() == u, "orbit-stabilizer, fixture " + std::to_string(trial));
      ++seen[{r.orbit_size, static_cast<std::size_t>(r.inertia.order())}];
    }
    o.require(seen == oracle::brute_orbits(f), "brute orbits, fixture " + std::to_string(trial));
  }
  if (o.pass) o.detail = "swap example (2,2,1)/(1,1,2); " + std::to_string(kCliffordFixtures) + " random fixtures";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    if (secs >= limit) o.require(false, "time limit " + std::to_string(limit) + " s exceeded");
    if (!o.pass) ++failures;
    std::printf("%s %2d %-28s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
  };
  double small_tables = 0;
  report(1, "sylow-golden", kLimitSylow, sylow_lists);
  report(2, "centralizer-proposition", kLimitCentralizer, centralizer_proposition);
  report(3, "brauer-pair-tables", kLimitTables, [&] { return brauer_tables(small_tables); });
  report(4, "bound-mechanics", kLimitBoundMechanics, bound_mechanics);
  report(5, "s6-twist", kLimitS6, s6_twist);
  report(6, "fc3-automorphisms", kLimitFc3, fc3);
  report(7, "bound-calculator", kLimitBounds, bounds);
  report(8, "block-combinatorics", kLimitBlocks, block_counts);
  report(9, "weyl-structure", kLimitWeyl, weyl_structure);
  report(10, "clifford-inventory", kLimitClifford, clifford_inventory);
  return failures;
}
