#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "brauerlab/bigint.hpp"
#include "brauerlab/blocks.hpp"
#include "brauerlab/brauer_sc.hpp"
#include "brauerlab/clifford.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/modrep.hpp"
#include "brauerlab/sylow.hpp"
#include "brauerlab/weyl.hpp"

namespace brauerlab::cli {

void OutputEnvelope::add_row(Json row) {
  if (columns.empty())
    for (const auto& item : row.items()) columns.push_back(item.key());
  rows.push_back(std::move(row));
}

void OutputEnvelope::add_check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool OutputEnvelope::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json to_json(const OutputEnvelope& env) {
  Json j;
  j["schema_version"] = env.schema_version;
  j["command"] = env.command;
  j["parameters"] = env.parameters;
  j["rows"] = Json::array();
  for (const auto& r : env.rows) j["rows"].push_back(r);
  j["checks"] = Json::array();
  for (const auto& c : env.checks) j["checks"].push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j;
}

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_md(const OutputEnvelope& env) {
  std::ostringstream os;
  os << "# " << env.command << "\n\n";
  if (!env.parameters.empty()) {
    os << "parameters:";
    bool first = true;
    for (const auto& item : env.parameters.items()) {
      os << (first ? " " : ", ") << item.key() << "=" << cell_text(item.value());
      first = false;
    }
    os << "\n\n";
  }
  if (env.rows.empty()) {
    os << "(no rows)\n";
  } else {
    os << "|";
    for (const auto& c : env.columns) os << " " << md_escape(c) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < env.columns.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : env.rows) {
      os << "|";
      for (const auto& c : env.columns) os << " " << md_escape(cell_text(r.at(c))) << " |";
      os << "\n";
    }
  }
  if (!env.checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& c : env.checks) {
      os << "- " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  return os.str();
}

std::string render_csv(const OutputEnvelope& env) {
  std::ostringstream os;
  for (std::size_t i = 0; i < env.columns.size(); ++i) os << (i ? "," : "") << csv_escape(env.columns[i]);
  if (!env.columns.empty()) os << "\n";
  for (const auto& r : env.rows) {
    for (std::size_t i = 0; i < env.columns.size(); ++i)
      os << (i ? "," : "") << csv_escape(cell_text(r.at(env.columns[i])));
    os << "\n";
  }
  if (!env.checks.empty()) {
    if (!env.columns.empty()) os << "\n";
    os << "check,result,detail\n";
    for (const auto& c : env.checks)
      os << csv_escape(c.name) << "," << (c.pass ? "PASS" : "FAIL") << "," << csv_escape(c.detail) << "\n";
  }
  return os.str();
}

// ---- shared helpers ----

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string angle(const std::vector<Permutation>& gens) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(g.to_string());
  return "<" + join(parts, ",") + ">";
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

Json matrix_json(const PrimeFieldMatrix& m) { return Json(m.to_rows()); }

OutputEnvelope envelope(const std::string& command) {
  OutputEnvelope env;
  env.schema_version = "brauerlab." + command + "/1";
  env.command = command;
  return env;
}

using Progress = std::function<void(const std::string&)>;

// ---- subcommands ----

struct SylowArgs {
  int n = 0;
  int p = 0;
  bool alternating = false;
};

OutputEnvelope cmd_sylow(const SylowArgs& a) {
  if (a.alternating && a.p != 2) throw std::invalid_argument("--alternating requires --p 2");
  OutputEnvelope env = envelope("sylow");
  env.parameters = {{"n", a.n}, {"p", a.p}, {"alternating", a.alternating}};
  const auto gens = a.alternating ? sylow_alt_generators(a.n) : sylow_sym_generators(a.n, a.p);
  for (std::size_t i = 0; i < gens.size(); ++i) env.add_row({{"index", i + 1}, {"generator", gens[i].to_string()}});
  const PermGroup g = a.alternating ? sylow_alt(a.n) : sylow_sym(a.n, a.p);
  int e = legendre_exponent(a.n, a.p);
  if (a.alternating && e > 0) --e;
  const bool ok = BigInt(g.order()) == power(a.p, e);
  env.add_check("order", ok, std::to_string(g.order()) + " = " + std::to_string(a.p) + "^" + std::to_string(e));
  return env;
}

OutputEnvelope cmd_centralizer_profile(const std::vector<int>& ns) {
  OutputEnvelope env = envelope("centralizer-profile");
  env.parameters = {{"n", join_numbers(ns)}};
  for (int n : ns) {
    const CentralizerProfile cp = centralizer_profile(n);
    env.add_row({{"n", n},
                 {"n_mod_4", cp.residue_mod4},
                 {"P_order", cp.p_n.order()},
                 {"Q_order", cp.q_n.order()},
                 {"C_sym_order", cp.c_sym.order()},
                 {"C_alt_order", cp.c_alt.order()},
                 {"ZQ_order", cp.z_q.order()},
                 {"ZP_order", cp.z_p.order()}});
    for (const auto& [name, ok] : cp.checks) env.add_check("n=" + std::to_string(n) + ": " + name, ok);
  }
  return env;
}

struct BlocksArgs {
  std::string family;
  int n = 0;
  int p = 0;
};

OutputEnvelope cmd_blocks(const BlocksArgs& a) {
  const GroupFamily f = parse_family(a.family);
  OutputEnvelope env = envelope("blocks");
  env.parameters = {{"family", family_name(f)}, {"n", a.n}, {"p", a.p}};
  switch (f) {
    case GroupFamily::Sym:
      for (const auto& b : blocks_of_sym(a.n, a.p))
        env.add_row({{"core", b.core_text()}, {"weight", b.weight_text()}, {"defect_order", to_string(b.defect_order)}});
      break;
    case GroupFamily::Alt:
      if (a.p != 2) throw std::invalid_argument("alt blocks are only available for p = 2");
      for (const auto& c : blocks_of_alt(a.n))
        env.add_row({{"core", c.parent.core_text()},
                     {"weight", c.parent.weight_text()},
                     {"split", c.split},
                     {"defect_zero", c.defect_zero},
                     {"defect_order", to_string(c.defect_order)}});
      break;
    case GroupFamily::TildeSym:
      for (const auto& b : blocks_of_tilde_sym(a.n, a.p))
        env.add_row({{"bar_core", b.core_text()}, {"bar_weight", b.weight_text()}, {"defect_order", to_string(b.defect_order)}});
      break;
    case GroupFamily::WeylB:
      for (const auto& b : blocks_of_weylB(a.n, a.p))
        env.add_row({{"cores", b.core_text()}, {"weights", b.weight_text()}, {"defect_order", to_string(b.defect_order)}});
      break;
    case GroupFamily::WeylD:
      throw std::invalid_argument("block labels are not available for weyld");
  }
  env.add_check("count", true, std::to_string(env.rows.size()) + " blocks");
  return env;
}

BigInt parse_qorder(const std::string& text) {
  const auto caret = text.find('^');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("--qorder must be an integer or b^k, got '" + text + "'");
    return BigInt(s);
  };
  if (caret == std::string::npos) return parse_int(text);
  const BigInt base = parse_int(text.substr(0, caret));
  const BigInt exp = parse_int(text.substr(caret + 1));
  if (base > 1000 || exp > 1000) throw std::invalid_argument("--qorder out of range: " + text);
  return power(static_cast<int>(base), static_cast<int>(exp));
}

struct BoundsArgs {
  std::string family;
  int p = 2;
  std::string qorder;
};

OutputEnvelope cmd_bounds(const BoundsArgs& a) {
  const GroupFamily f = parse_family(a.family);
  const BigInt q = parse_qorder(a.qorder);
  const BoundReport r = feit_bound(f, a.p, q);
  OutputEnvelope env = envelope("bounds");
  env.parameters = {{"family", family_name(f)}, {"p", a.p}, {"qorder", to_string(q)}};
  env.add_row({{"family", family_name(r.family)},
               {"p", r.p},
               {"q_order", to_string(r.q_order)},
               {"bound", to_string(r.bound)},
               {"formula", std::string(1, r.formula_tag)}});
  return env;
}

struct EnumArgs {
  int n = 0;
  int w = 0;
};

OutputEnvelope cmd_brauer_enum(const EnumArgs& a, const Progress& progress) {
  OutputEnvelope env = envelope("brauer-enum");
  env.parameters = {{"n", a.n}, {"w", a.w}};
  const auto rows = enumerate_sc_candidates(a.n, a.w, progress);
  std::size_t bound_ok = 0;
  for (const auto& c : rows) {
    env.add_row({{"generators", angle(c.display_generators)},
                 {"type", c.type_hint},
                 {"Q_order", c.q_order},
                 {"ZQ_order", c.z_order},
                 {"x", c.x},
                 {"d", c.d}});
    if (bound_check(c)) ++bound_ok;
  }
  env.add_check("bound_check", bound_ok == rows.size(),
                std::to_string(bound_ok) + "/" + std::to_string(rows.size()) + " rows");
  return env;
}

struct OrbitArgs {
  int n = 0;
  int w = 0;
  std::string group;
  int degree = 0;
};

Json orbit_row(const std::vector<Permutation>& gens, const OrbitAnalysis& oa) {
  return {{"generators", angle(gens)},
          {"orbit_sizes", join_numbers(oa.orbit_sizes)},
          {"stabilizer_orders", join_numbers(oa.stabilizer_orders)},
          {"pairwise_noniso", oa.pairwise_noniso},
          {"exceptional", exceptional_name(oa.exceptional_kind)}};
}

OutputEnvelope cmd_orbit_analysis(const OrbitArgs& a, const Progress& progress) {
  OutputEnvelope env = envelope("orbit-analysis");
  std::size_t noniso = 0;
  if (!a.group.empty()) {
    const int degree = a.degree > 0 ? a.degree : std::max(1, max_point(a.group));
    const auto gens = parse_permutation_list(a.group, degree);
    if (gens.empty()) throw std::invalid_argument("--group lists no permutations");
    env.parameters = {{"group", a.group}, {"degree", degree}};
    const OrbitAnalysis oa = orbit_analysis(generate(gens));
    env.add_row(orbit_row(gens, oa));
    noniso += oa.pairwise_noniso ? 1 : 0;
  } else {
    if (a.n == 0) throw std::invalid_argument("orbit-analysis needs --group or --n and --w");
    env.parameters = {{"n", a.n}, {"w", a.w}};
    for (const auto& c : enumerate_sc_candidates(a.n, a.w, progress)) {
      const OrbitAnalysis oa = orbit_analysis(c.q_class.representative);
      env.add_row(orbit_row(c.display_generators, oa));
      noniso += oa.pairwise_noniso ? 1 : 0;
    }
  }
  env.add_check("pairwise_noniso", noniso == env.rows.size(),
                std::to_string(noniso) + "/" + std::to_string(env.rows.size()) + " rows");
  return env;
}

OutputEnvelope cmd_modrep_s6() {
  OutputEnvelope env = envelope("modrep-check");
  env.parameters = {{"case", "s6-twist"}};
  const S6TwistExample ex = s6_twist_example();
  for (const auto* rep : {&ex.s, &ex.twisted}) {
    const std::string name = rep == &ex.s ? "S" : "phiS";
    for (std::size_t i = 0; i < rep->generators().size(); ++i)
      env.add_row({{"module", name},
                   {"generator", rep->generators()[i].to_string()},
                   {"matrix", matrix_json(rep->generator_images()[i])}});
  }
  const bool iso = module_isomorphic(ex.s, ex.twisted);
  env.add_check("module_isomorphic(S, phiS) = false", !iso);
  const auto psi = find_pair_equivalence(ex.s, ex.twisted);
  std::string detail;
  if (psi) {
    std::vector<std::string> moved;
    for (const auto& g : ex.p6.generators())
      if ((*psi)(g) != g) moved.push_back(g.to_string() + " -> " + (*psi)(g).to_string());
    detail = moved.empty() ? "identity automorphism" : join(moved, ", ");
  }
  env.add_check("pair_equivalent(S, phiS) = true", psi.has_value(), detail);
  return env;
}

OutputEnvelope cmd_modrep_fc3() {
  OutputEnvelope env = envelope("modrep-check");
  env.parameters = {{"case", "fc3-autos"}};
  const auto autos = group_algebra_autos_cyclic(3);
  bool shaped = true;
  for (const auto& m : autos) {
    const int a = m.at(1, 1);
    const int b = m.at(2, 1);
    shaped = shaped && m == phi_ab(3, a, b) && a != 0;
    env.add_row({{"a", a}, {"b", b}, {"matrix", matrix_json(m)}});
  }
  env.add_check("six automorphisms of Phi_{a,b} shape", autos.size() == 6 && shaped,
                std::to_string(autos.size()) + " found");
  const auto identity = PrimeFieldMatrix::identity(3, 3);
  env.add_check("Phi_{1,0} = identity", phi_ab(3, 1, 0) == identity &&
                                             std::find(autos.begin(), autos.end(), identity) != autos.end());
  const auto square = cyclic_endomorphism_matrix(3, {0, 0, 1});
  env.add_check("Phi_{-1,-1} implements z -> z^2", square == phi_ab(3, -1, -1));
  const EndoCheck ec = endo_but_not_auto_check();
  const auto& u = ec.image_of_z;
  env.add_check("endomorphism z -> -z-z^2 is not an automorphism", ec.passed(),
                "image (" + join_numbers(std::vector<int>(u.begin(), u.end())) + "), unit order " +
                    std::to_string(ec.unit_order) + ", rank " + std::to_string(ec.rank));
  return env;
}

struct WeylArgs {
  std::string type;
  int n = 0;
  std::string check;
};

OutputEnvelope cmd_weyl(const WeylArgs& a) {
  const WeylType t = a.type == "B" ? WeylType::B : WeylType::D;
  OutputEnvelope env = envelope("weyl");
  env.parameters = {{"type", a.type}, {"n", a.n}};
  if (!a.check.empty()) env.parameters["check"] = a.check;
  const PermGroup w = t == WeylType::B ? weylB(a.n) : weylD(a.n);
  const PermGroup h = base_group(t, a.n);
  env.add_row({{"type", a.type},
               {"n", a.n},
               {"order", w.order()},
               {"base_order", h.order()},
               {"standard_range", in_standard_range(t, a.n)},
               {"generators", angle(w.generators())}});
  BigInt expected = power(2, t == WeylType::B ? a.n : a.n - 1) * factorial(a.n);
  if (t == WeylType::D && a.n == 1) expected = 1;
  env.add_check("order", BigInt(w.order()) == expected, "expected " + to_string(expected));
  if (a.check == "base-centralizer") {
    const bool ok = base_selfcentralizing_check(a.n, t);
    env.add_check("base-centralizer", ok, t == WeylType::B ? "C_W(H) = H" : "C_W(H') = H'");
  }
  return env;
}

struct CliffordArgs {
  std::string h;
  std::string u_perm;
  std::string alpha;
  int p = 0;
};

std::vector<int> parse_factors(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        piece.size() > 6)
      throw std::invalid_argument("--H must be a comma-separated list of factor orders, got '" + text + "'");
    out.push_back(std::stoi(piece));
  }
  return out;
}

OutputEnvelope cmd_clifford(const CliffordArgs& a) {
  AbelianGroup h(parse_factors(a.h));
  // Without --alpha, U acts on the coordinates, so its degree is the rank.
  int k = std::max(1, static_cast<int>(h.rank()));
  if (!a.alpha.empty()) k = std::max(k, max_point(a.u_perm));
  const auto gens = parse_permutation_list(a.u_perm, k);
  std::vector<std::pair<Permutation, EndoMatrix>> alpha;
  if (!a.alpha.empty()) {
    Json mats;
    try {
      mats = Json::parse(a.alpha);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("--alpha is not valid JSON: ") + e.what());
    }
    if (!mats.is_array() || mats.size() != gens.size())
      throw std::invalid_argument("--alpha must be a JSON list with one matrix per --U-perm generator");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      try {
        alpha.emplace_back(gens[i], mats[i].get<EndoMatrix>());
      } catch (const Json::exception&) {
        throw std::invalid_argument("--alpha entry " + std::to_string(i + 1) + " is not an integer matrix");
      }
    }
  } else {
    for (const auto& g : gens) {
      EndoMatrix m(h.rank(), std::vector<int>(h.rank(), 0));
      for (std::size_t j = 0; j < h.rank(); ++j) m[static_cast<std::size_t>(g(static_cast<int>(j)))][j] = 1;
      alpha.emplace_back(g, m);
    }
  }
  const PermGroup u = gens.empty() ? PermGroup::trivial(k) : generate(gens);
  const SemidirectAction action =
      alpha.empty() ? SemidirectAction::trivial(h, u) : SemidirectAction::build(h, u, alpha);

  OutputEnvelope env = envelope("clifford");
  env.parameters = {{"H", h.to_string()}, {"U", describe(u)}, {"p", a.p}};
  if (!a.alpha.empty()) env.parameters["alpha"] = Json::parse(a.alpha);
  std::size_t total = 0;
  bool orbit_stabilizer = true;
  for (const auto& row : inertia_inventory(action, a.p)) {
    std::vector<std::string> labels;
    for (const auto& chi : row.orbit) labels.push_back(chi.to_string());
    env.add_row({{"representative", row.representative.to_string()},
                 {"orbit_size", row.orbit_size},
                 {"inertia_order", row.inertia.order()},
                 {"inertia", describe(row.inertia)},
                 {"orbit", join(labels, " ")}});
    total += row.orbit_size;
    orbit_stabilizer = orbit_stabilizer && row.orbit_size * row.inertia.order() == u.order();
  }
  const std::size_t expected = characters(h, a.p).size();
  env.add_check("orbit-stabilizer", orbit_stabilizer, "|U| = " + std::to_string(u.order()));
  env.add_check("characters covered", total == expected,
                std::to_string(total) + " of " + std::to_string(expected));
  return env;
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
}

}  // namespace

std::string render(const OutputEnvelope& env, Format format) {
  switch (format) {
    case Format::json:
      return to_json(env).dump(2) + "\n";
    case Format::csv:
      return render_csv(env);
    case Format::md:
      break;
  }
  return render_md(env);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations for blocks, vertices and Brauer pairs of symmetric and alternating groups", "brauerlab"};
  app.require_subcommand(1);
  std::string format = "md";

  SylowArgs sylow;
  auto* s_sylow = app.add_subcommand("sylow", "Sylow subgroup generators of S_n (or A_n at p = 2)");
  s_sylow->add_option("--n", sylow.n, "Degree")->required()->check(CLI::Range(1, 16));
  s_sylow->add_option("--p", sylow.p, "Prime")->required()->check(CLI::Range(2, 16));
  s_sylow->add_flag("--alternating", sylow.alternating, "Sylow 2-subgroup of A_n");
  add_format(s_sylow, format);

  int cp_n = 0;
  bool cp_all = false;
  auto* s_cp = app.add_subcommand("centralizer-profile", "Centralizers of the Sylow 2-subgroup of A_n");
  auto* cp_opt = s_cp->add_option("--n", cp_n, "Even degree 4..16")->check(CLI::Range(4, 16));
  s_cp->add_flag("--all", cp_all, "Every even n from 4 to 16")->excludes(cp_opt);
  add_format(s_cp, format);

  BlocksArgs blocks;
  auto* s_blocks = app.add_subcommand("blocks", "Block labels (core, weight, defect group order)");
  s_blocks->add_option("--family", blocks.family, "sym, alt, tildesym or weylb")->required();
  s_blocks->add_option("--n", blocks.n, "Degree")->required()->check(CLI::Range(0, 200));
  s_blocks->add_option("--p", blocks.p, "Prime")->required()->check(CLI::Range(2, 200));
  add_format(s_blocks, format);

  BoundsArgs bounds;
  auto* s_bounds = app.add_subcommand("bounds", "Bound on |P| in terms of the vertex order |Q|");
  s_bounds->add_option("--family", bounds.family, "sym, alt, tildesym, weylb or weyld")->required();
  s_bounds->add_option("--p", bounds.p, "Prime")->check(CLI::Range(2, 1000));
  s_bounds->add_option("--qorder", bounds.qorder, "|Q|, as an integer or p^k")->required();
  add_format(s_bounds, format);

  EnumArgs en;
  auto* s_enum = app.add_subcommand("brauer-enum", "Self-centralizing Brauer pair candidates in A_n, p = 2");
  s_enum->add_option("--n", en.n, "Degree")->required()->check(CLI::Range(1, 16));
  s_enum->add_option("--w", en.w, "Block weight")->required()->check(CLI::Range(1, 8));
  add_format(s_enum, format);

  OrbitArgs orb;
  auto* s_orb = app.add_subcommand("orbit-analysis", "Orbit structure of candidate groups");
  auto* orb_n = s_orb->add_option("--n", orb.n, "Degree of the table")->check(CLI::Range(1, 16));
  auto* orb_w = s_orb->add_option("--w", orb.w, "Block weight of the table")->check(CLI::Range(1, 8));
  auto* orb_g = s_orb->add_option("--group", orb.group, "Generators separated by ';'");
  s_orb->add_option("--degree", orb.degree, "Degree for --group")->check(CLI::Range(1, 16))->needs(orb_g);
  orb_n->needs(orb_w);
  orb_w->needs(orb_n);
  orb_g->excludes(orb_n)->excludes(orb_w);
  add_format(s_orb, format);

  std::string modrep_case;
  auto* s_mod = app.add_subcommand("modrep-check", "Verify the module and group algebra examples");
  s_mod->add_option("--case", modrep_case, "s6-twist or fc3-autos")
      ->required()
      ->check(CLI::IsMember({"s6-twist", "fc3-autos"}));
  add_format(s_mod, format);

  WeylArgs weyl;
  auto* s_weyl = app.add_subcommand("weyl", "Weyl groups of type B and D as signed permutations");
  s_weyl->add_option("--type", weyl.type, "B or D")->required()->check(CLI::IsMember({"B", "D"}));
  s_weyl->add_option("--n", weyl.n, "Rank 1..8")->required()->check(CLI::Range(1, 8));
  s_weyl->add_option("--check", weyl.check, "Extra verification")->check(CLI::IsMember({"base-centralizer"}));
  add_format(s_weyl, format);

  CliffordArgs cl;
  auto* s_cl = app.add_subcommand("clifford", "Inertia subgroups of characters of an abelian normal subgroup");
  s_cl->add_option("--H", cl.h, "Invariant factors, e.g. 2,2")->required();
  s_cl->add_option("--U-perm", cl.u_perm, "Generators of U permuting the factors, separated by ';'");
  s_cl->add_option("--alpha", cl.alpha, "JSON list of integer matrices, one per --U-perm generator");
  s_cl->add_option("--p", cl.p, "Prime")->required()->check(CLI::Range(2, 1000));
  add_format(s_cl, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Progress progress = [&err](const std::string& line) { err << line << "\n" << std::flush; };
  const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::md;
  OutputEnvelope env;
  try {
    if (s_sylow->parsed()) {
      env = cmd_sylow(sylow);
    } else if (s_cp->parsed()) {
      std::vector<int> ns;
      if (cp_all) {
        for (int n = 4; n <= 16; n += 2) ns.push_back(n);
      } else if (cp_n != 0) {
        if (cp_n % 2 != 0) throw std::invalid_argument("--n must be even");
        ns.push_back(cp_n);
      } else {
        throw std::invalid_argument("centralizer-profile needs --n or --all");
      }
      env = cmd_centralizer_profile(ns);
    } else if (s_blocks->parsed()) {
      env = cmd_blocks(blocks);
    } else if (s_bounds->parsed()) {
      env = cmd_bounds(bounds);
    } else if (s_enum->parsed()) {
      env = cmd_brauer_enum(en, progress);
    } else if (s_orb->parsed()) {
      env = cmd_orbit_analysis(orb, progress);
    } else if (s_mod->parsed()) {
      env = modrep_case == "s6-twist" ? cmd_modrep_s6() : cmd_modrep_fc3();
    } else if (s_weyl->parsed()) {
      env = cmd_weyl(weyl);
    } else if (s_cl->parsed()) {
      env = cmd_clifford(cl);
    }
  } catch (const HomomorphismError& e) {
    err << "error: " << e.what() << " (witness " << e.g().to_string() << ", " << e.h().to_string() << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "; raise BRAUERLAB_BUDGET to continue\n";
    return 1;
  }

  out << render(env, fmt);
  return env.all_pass() ? 0 : 1;
}

}  // namespace brauerlab::cli
