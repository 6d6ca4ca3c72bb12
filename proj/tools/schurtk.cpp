// schurtk: command-line front end.
//
// Exit codes: 0 success, 1 when --expect was given and the verdict differs,
// 2 on any error.  Tables go to stdout, progress to stderr.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schur/repro.hpp"

using namespace schur;

namespace {

struct Globals {
  std::string format = "tsv";
  bool quiet = false;
  unsigned jobs = 1;
  std::uint64_t node_cap = kDefaultNodeCap;
};

Globals g;

repro::Progress progress() {
  if (g.quiet) return {};
  return [](const std::string& s) { std::cerr << "schurtk: " << s << '\n'; };
}

void print(const io::Table& t) { std::cout << io::emit_table(t, io::parse_table_format(g.format)); }

io::Table kv() { return io::Table{{"property", "value"}, {}}; }

std::string yes(bool b) { return b ? "yes" : "no"; }

// A verdict check for --expect; returns the exit code.
int expect(const std::string& want, const std::string& got) {
  if (want.empty() || want == got) return 0;
  std::cerr << "schurtk: expected " << want << ", got " << got << '\n';
  return 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<std::size_t> size_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (auto& tok : split(s, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(static_cast<std::size_t>(std::stoull(tok)));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "' in '" + s + "'");
    }
  }
  return out;
}

// "1,3|2|4,5" -> {{1,3},{2},{4,5}}
std::vector<std::vector<std::size_t>> parse_pi(const std::string& s) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& block : split(s, '|')) {
    auto b = size_list(block);
    if (b.empty()) throw ParseError("empty block in partition '" + s + "'");
    out.push_back(b);
  }
  return out;
}

// clique:L  not-clique:L  connected:L  not-connected:L  transpose:L=M
LabelConstraint parse_constraint(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad constraint '" + s + "'");
  std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
  auto num = [&](const std::string& x) {
    auto v = size_list(x);
    if (v.size() != 1) throw ParseError("bad constraint '" + s + "'");
    return v[0];
  };
  if (kind == "clique") return LabelConstraint::clique_union(num(arg));
  if (kind == "not-clique") return LabelConstraint::not_clique_union(num(arg));
  if (kind == "connected") return LabelConstraint::connected(num(arg));
  if (kind == "not-connected") return LabelConstraint::not_connected(num(arg));
  if (kind == "transpose") {
    auto eq = arg.find('=');
    if (eq == std::string::npos) throw ParseError("bad constraint '" + s + "'");
    return LabelConstraint::transpose(num(arg.substr(0, eq)), num(arg.substr(eq + 1)));
  }
  throw ParseError("unknown constraint kind '" + kind + "'");
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(const std::string& s) {
  auto v = size_list(s);
  if (v.size() != 2) throw ParseError("expected two integers, got '" + s + "'");
  return {static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1])};
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void add_scheme_summary(io::Table& t, const AssociationScheme& X) {
  t.add({"points", std::to_string(X.size())});
  t.add({"rank", std::to_string(X.rank())});
  t.add({"valencies", join(X.valencies())});
  std::vector<std::size_t> tr;
  for (color_t c = 0; c < X.rank(); ++c) tr.push_back(X.transpose(c));
  t.add({"transpose", join(tr)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation groups, association schemes and Schur rings"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.add_option("--format", g.format, "table format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_flag("-q,--quiet", g.quiet, "no progress output");
  app.add_option("--jobs", g.jobs, "worker count (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-cap", g.node_cap, "search-node budget per backtracking run");

  std::string expect_s;
  int rc = 0;

  // ----- group ---------------------------------------------------------------
  auto* group = app.add_subcommand("group", "finite groups");
  group->require_subcommand(1);
  auto* gbuild = group->add_subcommand("build", "construct a group and print its invariants");
  std::string spec;
  bool emit_regular = false;
  gbuild->add_option("spec", spec, "group spec, e.g. cyclic:12, gdihedral:E9, frobenius:2,3,7")
      ->required();
  gbuild->add_flag("--regular", emit_regular,
                   "print the right regular representation as a permutation-group file");
  gbuild->callback([&] {
    FiniteGroup G = io::parse_group_spec(spec);
    if (emit_regular) {
      std::cout << io::emit_permgroup(regular_representation(G));
      return;
    }
    auto t = kv();
    t.add({"label", G.label()});
    t.add({"order", std::to_string(G.order())});
    t.add({"abelian", yes(G.is_abelian())});
    t.add({"exponent", std::to_string(G.exponent())});
    t.add({"center", std::to_string(G.center().size())});
    std::vector<std::size_t> cs;
    for (const auto& c : conjugacy_classes(G)) cs.push_back(c.size());
    std::sort(cs.begin(), cs.end());
    t.add({"class_sizes", join(cs)});
    std::string gens;
    for (elem_t x : G.generators()) gens += (gens.empty() ? "" : ",") + std::to_string(x);
    t.add({"generators", gens});
    print(t);
  });

  // ----- scheme ----------------------------------------------------------------
  auto* scheme = app.add_subcommand("scheme", "association schemes");
  scheme->require_subcommand(1);

  auto* sinv = scheme->add_subcommand("inv", "orbital scheme of a permutation group");
  std::string group_file, action, out_file;
  auto* og = sinv->add_option("--group", spec, "group spec; acts by right multiplication");
  auto* ogf = sinv->add_option("--group-file", group_file, "permutation-group file");
  og->excludes(ogf);
  sinv->add_option("--action", action, "coset:<element codes generating H> (with --group)");
  sinv->add_option("-o,--out", out_file, "write the scheme to this file");
  sinv->callback([&] {
    PermGroup P = [&] {
      if (!group_file.empty()) {
        if (!action.empty()) throw ParseError("--action needs --group");
        return io::parse_permgroup_file(group_file);
      }
      if (spec.empty()) throw ParseError("give --group or --group-file");
      FiniteGroup G = io::parse_group_spec(spec);
      if (action.empty()) return regular_representation(G);
      if (action.rfind("coset:", 0) != 0) throw ParseError("--action must be coset:<codes>");
      std::vector<elem_t> seeds;
      for (auto v : size_list(action.substr(6))) {
        if (v >= G.order()) throw ParseError("element code " + std::to_string(v) + " out of range");
        seeds.push_back(static_cast<elem_t>(v));
      }
      return coset_action(G, subgroup_generated(G, seeds));
    }();
    AssociationScheme X = orbital_scheme(P);
    auto t = kv();
    t.add({"group_order", P.order().str()});
    add_scheme_summary(t, X);
    print(t);
    if (!out_file.empty()) write_file(out_file, io::emit_scheme(X));
  });

  auto* sfuse = scheme->add_subcommand("fuse", "fuse the colors of a scheme");
  std::string scheme_file, pi_s, by_valency;
  std::vector<std::string> constraints;
  sfuse->add_option("--scheme", scheme_file, "scheme file")->required();
  sfuse->add_option("--pi", pi_s, "partition of nonreflexive labels, e.g. \"1,3|2|4,5|6,7\"")
      ->required();
  sfuse->add_option("--by-valency", by_valency,
                    "valencies of labels 1..k; labels are then matched to colors");
  sfuse->add_option("--require", constraints,
                    "label constraint: clique:L not-clique:L connected:L not-connected:L "
                    "transpose:L=M");
  sfuse->add_option("-o,--out", out_file, "write the fused scheme to this file");
  sfuse->add_option("--expect", expect_s, "schurian or non-schurian")
      ->check(CLI::IsMember({"schurian", "non-schurian"}));
  sfuse->callback([&] {
    AssociationScheme X = io::parse_scheme_file(scheme_file);
    auto pi_labels = parse_pi(pi_s);
    std::vector<std::vector<color_t>> labelings;
    if (!by_valency.empty()) {
      std::vector<LabelConstraint> lc;
      for (auto& c : constraints) lc.push_back(parse_constraint(c));
      labelings = select_colors_by_valency(X, size_list(by_valency), lc);
      if (labelings.empty()) throw Error("no labeling of the colors matches the valency pattern");
    } else {
      if (!constraints.empty()) throw ParseError("--require needs --by-valency");
      std::vector<color_t> id(X.rank());
      for (color_t c = 0; c < X.rank(); ++c) id[c] = c;
      labelings.push_back(id);
    }
    SchemeVerdict v = fuse_by_labels(X, labelings, pi_labels);
    auto t = kv();
    t.add({"labelings", std::to_string(labelings.size())});
    if (!v.ok()) {
      t.add({"fusion", "not a scheme: " + v.violation});
      print(t);
      rc = std::max(rc, expect(expect_s.empty() ? "" : "scheme", "not a scheme"));
      return;
    }
    add_scheme_summary(t, *v.scheme);
    SearchStats st;
    PermGroup A = aut_scheme(*v.scheme, &st, g.node_cap);
    std::size_t ar = rank_on_pairs(A);
    t.add({"aut_order", A.order().str()});
    t.add({"aut_rank", std::to_string(ar)});
    t.add({"nodes", std::to_string(st.nodes)});
    std::string verdict = ar == v.scheme->rank() ? "schurian" : "non-schurian";
    t.add({"verdict", verdict});
    print(t);
    if (!out_file.empty()) write_file(out_file, io::emit_scheme(*v.scheme));
    rc = std::max(rc, expect(expect_s, verdict));
  });

  auto* swreath = scheme->add_subcommand("wreath", "wreath product of two schemes");
  std::string bottom_file, top_file;
  swreath->add_option("--bottom", bottom_file, "scheme inside the blocks")->required();
  swreath->add_option("--top", top_file, "scheme on the blocks")->required();
  swreath->add_option("-o,--out", out_file, "write the product to this file");
  swreath->callback([&] {
    AssociationScheme W =
        wreath(io::parse_scheme_file(bottom_file), io::parse_scheme_file(top_file));
    auto t = kv();
    add_scheme_summary(t, W);
    print(t);
    if (!out_file.empty()) write_file(out_file, io::emit_scheme(W));
  });

  // ----- aut -----------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism group of a scheme and its schurity");
  aut->add_option("--scheme", scheme_file, "scheme file")->required();
  aut->add_option("--expect", expect_s, "schurian or non-schurian")
      ->check(CLI::IsMember({"schurian", "non-schurian"}));
  aut->callback([&] {
    AssociationScheme X = io::parse_scheme_file(scheme_file);
    SearchStats st;
    PermGroup A = aut_scheme(X, &st, g.node_cap);
    std::size_t ar = rank_on_pairs(A);
    auto t = kv();
    t.add({"points", std::to_string(X.size())});
    t.add({"rank", std::to_string(X.rank())});
    t.add({"aut_order", A.order().str()});
    t.add({"aut_rank", std::to_string(ar)});
    t.add({"nodes", std::to_string(st.nodes)});
    std::string verdict = ar == X.rank() ? "schurian" : "non-schurian";
    t.add({"verdict", verdict});
    for (const Perm& p : A.generators()) t.add({"generator", p.to_string(true)});
    print(t);
    rc = std::max(rc, expect(expect_s, verdict));
  });

  // ----- sring -----------------------------------------------------------------
  auto* sring = app.add_subcommand("sring", "Schur rings");
  sring->require_subcommand(1);
  auto* sschur = sring->add_subcommand("schurian", "decide whether an S-ring is schurian");
  std::string partition_file;
  sschur->add_option("--group", spec, "group spec")->required();
  sschur->add_option("--partition", partition_file, "partition file, one class per line")
      ->required();
  sschur->add_option("--expect", expect_s, "schurian or non-schurian")
      ->check(CLI::IsMember({"schurian", "non-schurian"}));
  sschur->callback([&] {
    FiniteGroup G = io::parse_group_spec(spec);
    auto P = io::parse_partition_text(io::read_file(partition_file), G.order());
    auto v = try_sring(G, P);
    if (!v.ok()) throw Error("not an S-ring: " + v.violation);
    SchurityResult r = is_schurian(*v.sring, g.node_cap);
    auto t = kv();
    t.add({"group_order", std::to_string(G.order())});
    t.add({"rank", std::to_string(r.rank)});
    t.add({"aut_order", r.aut_order.str()});
    t.add({"aut_rank", std::to_string(r.aut_rank)});
    t.add({"nodes", std::to_string(r.stats.nodes)});
    std::string verdict = r.schurian ? "schurian" : "non-schurian";
    t.add({"verdict", verdict});
    if (r.split_class) t.add({"split_class", std::to_string(*r.split_class)});
    print(t);
    rc = std::max(rc, expect(expect_s, verdict));
  });

  auto* sdiff = sring->add_subcommand("diffset", "rank-4 S-ring of a difference set");
  std::uint32_t q = 0;
  std::string singer, diffset_file;
  sdiff->add_option("--q", q, "Paley difference set in GF(q), q = 3 mod 4");
  sdiff->add_option("--singer", singer, "Singer difference set q,d");
  sdiff->add_option("--file", diffset_file, "difference-set file");
  sdiff->add_option("--expect", expect_s, "schurian or non-schurian")
      ->check(CLI::IsMember({"schurian", "non-schurian"}));
  auto pick_set = [&]() -> DifferenceSet {
    int given = (q != 0) + !singer.empty() + !diffset_file.empty();
    if (given != 1) throw ParseError("give exactly one of --q, --singer, --file");
    if (q) return paley_difference_set(q);
    if (!singer.empty()) {
      auto [sq, d] = parse_pair(singer);
      return singer_difference_set(sq, d);
    }
    return io::parse_difference_set_text(io::read_file(diffset_file),
                                         std::filesystem::path(diffset_file).parent_path());
  };
  sdiff->callback([&] {
    DifferenceSet S = pick_set();
    SRing A = difference_set_sring(S);
    auto t = kv();
    t.add({"H", S.H.label()});
    t.add({"(n,k,lambda)", "(" + std::to_string(S.n) + "," + std::to_string(S.k) + "," +
                               std::to_string(S.lambda) + ")"});
    t.add({"group_order", std::to_string(A.group().order())});
    t.add({"rank", std::to_string(A.rank())});
    t.add({"valid", yes(!validate_sring(A).has_value())});
    for (const auto& pc : repro::displayed_products(S))
      t.add({pc.product + "[" + pc.basis + "]", std::to_string(pc.computed)});
    SchurityResult r = is_schurian(A, g.node_cap);
    t.add({"aut_order", r.aut_order.str()});
    t.add({"aut_rank", std::to_string(r.aut_rank)});
    t.add({"nodes", std::to_string(r.stats.nodes)});
    std::string verdict = r.schurian ? "schurian" : "non-schurian";
    t.add({"verdict", verdict});
    print(t);
    rc = std::max(rc, expect(expect_s, verdict));
  });

  // ----- design ----------------------------------------------------------------
  auto* design = app.add_subcommand("design", "symmetric designs of difference sets");
  design->require_subcommand(1);
  auto* dcheck = design->add_subcommand("check", "parameters and transitivity profile");
  dcheck->add_option("--q", q, "Paley difference set in GF(q)");
  dcheck->add_option("--singer", singer, "Singer difference set q,d");
  dcheck->add_option("--file", diffset_file, "difference-set file");
  dcheck->add_option("--expect", expect_s, "transitive (all three flags) or intransitive")
      ->check(CLI::IsMember({"transitive", "intransitive"}));
  dcheck->callback([&] {
    DifferenceSet S = pick_set();
    Design B = dev(S);
    SearchStats st;
    TransitivityProfile tp = transitivity_profile(B, &st, g.node_cap);
    auto t = kv();
    t.add({"(v,k,lambda)", "(" + std::to_string(B.n) + "," + std::to_string(B.k) + "," +
                               std::to_string(B.lambda) + ")"});
    t.add({"aut_order", tp.aut_order.str()});
    t.add({"two_transitive", yes(tp.two_transitive)});
    t.add({"flag_transitive", yes(tp.flag_transitive)});
    t.add({"antiflag_transitive", yes(tp.antiflag_transitive)});
    t.add({"flag_orbits", std::to_string(tp.flag_orbits)});
    t.add({"antiflag_orbits", std::to_string(tp.antiflag_orbits)});
    t.add({"nodes", std::to_string(st.nodes)});
    print(t);
    rc = std::max(rc, expect(expect_s, tp.all() ? "transitive" : "intransitive"));
  });

  // ----- enumerate -----------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "all S-rings over a small group");
  bool census = false;
  double seconds = 3600;
  std::uint64_t closure_cap = EnumerationBudget{}.node_cap;
  enumerate->add_option("--group", spec, "group spec")->required();
  enumerate->add_flag("--census", census, "decide schurity of every S-ring");
  enumerate->add_option("--seconds", seconds, "time budget");
  enumerate->add_option("--closure-cap", closure_cap, "budget in closure computations");
  enumerate->add_option("--expect", expect_s, "schur or non-schur (with --census)")
      ->check(CLI::IsMember({"schur", "non-schur"}));
  enumerate->callback([&] {
    FiniteGroup G = io::parse_group_spec(spec);
    EnumerationBudget b;
    b.seconds = seconds;
    b.node_cap = closure_cap;
    if (!census) {
      if (!expect_s.empty()) throw ParseError("--expect needs --census");
      auto r = enumerate_srings(G, b);
      if (!g.quiet)
        std::cerr << "schurtk: " << r.srings.size() << " S-rings, " << r.stats.closures
                  << " closures, " << r.stats.orbit_representatives << " orbits\n";
      io::Table t{{"index", "orbit", "rank", "classes"}, {}};
      for (std::size_t i = 0; i < r.srings.size(); ++i) {
        std::string cls;
        for (const auto& c : r.srings[i].classes()) {
          cls += cls.empty() ? "" : "|";
          for (std::size_t j = 0; j < c.size(); ++j) cls += (j ? "," : "") + std::to_string(c[j]);
        }
        t.add({std::to_string(i + 1), std::to_string(r.orbit[i] + 1),
               std::to_string(r.srings[i].rank()), cls});
      }
      print(t);
      return;
    }
    Census c = schurity_census(G, b, g.node_cap);
    if (!g.quiet)
      std::cerr << "schurtk: " << c.rows.size() << " S-rings, " << c.stats.closures
                << " closures, " << c.non_schurian() << " non-schurian\n";
    io::Table t{{"group", "index", "orbit", "rank", "verdict", "aut_order", "aut_rank"}, {}};
    for (const auto& row : c.rows)
      t.add({c.group_label, std::to_string(row.index + 1), std::to_string(row.orbit + 1),
             std::to_string(row.rank), row.schurian ? "schurian" : "non-schurian",
             row.aut_order.str(), std::to_string(row.aut_rank)});
    print(t);
    rc = std::max(rc, expect(expect_s, c.is_schur() ? "schur" : "non-schur"));
  });

  // ----- repro -----------------------------------------------------------------
  auto* rep = app.add_subcommand("repro", "reproduce reference tables and witnesses");
  rep->require_subcommand(1);
  std::string fixtures;
  bool expect_flag = false;
  auto fixtures_dir = [&]() -> std::filesystem::path {
    return fixtures.empty() ? repro::default_fixtures_dir() : std::filesystem::path(fixtures);
  };
  auto add_common = [&](CLI::App* c, bool with_fixtures) {
    if (with_fixtures)
      c->add_option("--fixtures", fixtures, "fixtures directory")->envname("SCHURTK_FIXTURES");
    c->add_flag("--expect", expect_flag, "exit 1 unless every row has the expected outcome");
  };

  auto* rt1 = rep->add_subcommand("table1", "non-schurian schemes for small groups");
  add_common(rt1, true);
  rt1->callback([&] {
    auto rows = repro::table1(fixtures_dir(), g.node_cap, progress());
    print(repro::table1_table(rows));
    bool all = true;
    for (const auto& r : rows) all = all && r.ok();
    if (expect_flag && !all) rc = std::max(rc, expect("all rows ok", "missing or mismatched rows"));
  });

  auto* rt2 = rep->add_subcommand("table2", "subgroups K of E_{2^k}:C_p");
  add_common(rt2, false);
  rt2->callback([&] {
    auto rows = repro::table2(progress());
    print(repro::table2_table(rows));
    bool all = rows.size() == 11;
    for (const auto& r : rows) all = all && r.verified;
    if (expect_flag && !all) rc = std::max(rc, expect("11 verified rows", "unverified rows"));
  });

  auto* rc54 = rep->add_subcommand("cor54", "difference-set S-rings over D_2p, p = 7, 11, 19, 23");
  add_common(rc54, false);
  rc54->callback([&] {
    auto rows = repro::cor54({7, 11, 19, 23}, g.node_cap, progress());
    print(repro::cor54_table(rows));
    std::string got;
    for (const auto& r : rows) got += std::string(got.empty() ? "" : ",") + (r.schurian ? "S" : "N");
    if (expect_flag) rc = std::max(rc, expect("S,S,N,N", got));
  });

  auto* rwit = rep->add_subcommand("witnesses", "non-schurian fusions of orbital schemes");
  add_common(rwit, true);
  rwit->callback([&] {
    auto rows = repro::witnesses(fixtures_dir(), g.node_cap, progress());
    print(repro::witnesses_table(rows));
    bool all = true;
    for (const auto& r : rows) all = all && r.non_schurian;
    if (expect_flag && !all) rc = std::max(rc, expect("all non-schurian", "some not certified"));
  });

  auto* rpsl = rep->add_subcommand("psl2", "rank-4 class-size-respecting fusions of PSL_2(q)");
  std::uint32_t psl_q = 7;
  rpsl->add_option("--q", psl_q, "field size, at most 13");
  rpsl->callback([&] { print(repro::psl2_rank4_table(psl_q)); });

  auto* rprod = rep->add_subcommand("products", "structure constants of difference-set S-rings");
  add_common(rprod, false);
  rprod->callback([&] {
    io::Table t{{"set", "(n,k,lambda)", "product", "basis", "displayed", "computed", "match"}, {}};
    bool all = true;
    for (const auto& [name, S] : repro::standard_difference_sets()) {
      for (const auto& pc : repro::displayed_products(S)) {
        t.add({name,
               "(" + std::to_string(S.n) + "," + std::to_string(S.k) + "," +
                   std::to_string(S.lambda) + ")",
               pc.product, pc.basis, std::to_string(pc.stated), std::to_string(pc.computed),
               yes(pc.ok())});
        all = all && pc.ok();
      }
    }
    print(t);
    if (expect_flag && !all) rc = std::max(rc, expect("all displayed coefficients", "mismatches"));
  });

  auto* rmake = rep->add_subcommand("make-fixtures", "regenerate the generated fixtures");
  std::string out_dir;
  rmake->add_option("--out", out_dir, "target directory (default: the fixtures directory)");
  rmake->callback([&] {
    std::filesystem::path dir = out_dir.empty() ? repro::default_fixtures_dir() : std::filesystem::path(out_dir);
    auto files = repro::make_fixtures(dir, g.node_cap, progress());
    for (const auto& f : files) std::cout << f.string() << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "schurtk: error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
