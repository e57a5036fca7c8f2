// Command-line front end for the aisr library.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 budget
// or size cap exhausted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aisr/aisr.hpp"

namespace {

  using namespace aisr;

  constexpr int kPass   = 0;
  constexpr int kFail   = 1;
  constexpr int kInput  = 2;
  constexpr int kBudget = 3;

  Caps g_caps;

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw PreconditionError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw PreconditionError("cannot write '" + path + "'");
    }
    out << text;
  }

  // Fixture name or path to a semiring file. Fixtures are verified on load.
  FiniteSemiring load_semiring(std::string const& what) {
    if (is_semiring_fixture(what)) {
      FiniteSemiring S = semiring_fixture(what);
      if (!verify_semiring_axioms(S, 1).ok()) {
        throw Error("fixture " + what + " fails its axioms");
      }
      return S;
    }
    return parse_semiring(read_file(what));
  }

  FiniteGroup load_group(std::string const& what) {
    FiniteGroup G = is_group_fixture(what) ? group_fixture(what)
                                           : parse_group(read_file(what));
    auto v = verify_group(G, 1);
    if (!v.empty()) {
      throw StructureError("not a group: " + v.front().axiom);
    }
    return G;
  }

  Hypergraph load_hypergraph(std::string const& path) {
    return parse_hypergraph(read_file(path));
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              cur;
    for (char c : s) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) {
          out.push_back(cur);
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) {
      out.push_back(cur);
    }
    return out;
  }

  std::string header(std::optional<std::uint64_t> seed = std::nullopt) {
    std::string s = std::string("# ") + kVersion;
    if (seed) {
      s += " seed " + std::to_string(*seed);
    }
    return s + "\n";
  }

  Json json_header(std::optional<std::uint64_t> seed = std::nullopt) {
    Json j;
    j["version"] = kVersion;
    j["seed"]    = seed ? Json(*seed) : Json(nullptr);
    return j;
  }

  std::string names_of(FiniteSemiring const& S, std::vector<Elem> const& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + S.name(xs[i]);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  struct CheckOptions {
    std::string object;
    bool        axioms = false, flat = false, order = false;
    bool        index_period = false, flat_laws = false;
    bool        one_in_three = false, two_in_three = false;
    bool        noncyclic_ideal = false, subgroups = false;
    bool        all = false, json = false;
  };

  int run_check(CheckOptions o) {
    FiniteSemiring S = load_semiring(o.object);
    if (o.all) {
      o.axioms = o.flat = o.order = o.index_period = o.flat_laws = true;
      o.one_in_three = o.two_in_three = o.noncyclic_ideal = true;
      o.subgroups = true;
    }
    if (!(o.axioms || o.flat || o.order || o.index_period || o.flat_laws
          || o.one_in_three || o.two_in_three || o.noncyclic_ideal
          || o.subgroups)) {
      o.axioms = true;
    }
    bool               pass = true;
    std::ostringstream txt;
    Json               j = json_header();
    j["object"]          = o.object;
    j["size"]            = S.size();
    txt << header() << o.object << ": " << S.size() << " elements\n";
    if (o.axioms) {
      AxiomReport r = verify_semiring_axioms(S);
      pass          = pass && r.ok();
      txt << "axioms: " << (r.ok() ? "ok" : "FAILED") << '\n';
      Json vs = Json::array();
      for (auto const& v : r.violations) {
        txt << "  " << describe(S, v) << '\n';
        vs.push_back(describe(S, v));
      }
      if (r.total > r.violations.size()) {
        txt << "  ... " << r.total << " violations in total\n";
      }
      j["axioms"] = {{"ok", r.ok()}, {"total", r.total}, {"violations", vs}};
    }
    if (o.flat) {
      pass = pass && S.is_flat();
      txt << "flat: " << (S.is_flat() ? "yes" : "NO") << '\n';
      j["flat"] = S.is_flat();
    }
    if (o.order) {
      OrderProfile p = order_profile(S);
      txt << "order: height " << p.height << ", top "
          << (p.top ? S.name(*p.top) : std::string("none")) << ", "
          << (p.is_flat ? "flat" : "not flat") << '\n';
      j["order"] = {{"height", p.height},
                    {"top", p.top ? Json(S.name(*p.top)) : Json(nullptr)},
                    {"flat", p.is_flat}};
    }
    if (o.index_period) {
      IndexPeriod ip = index_period(S);
      txt << "index-period: (" << ip.index << "," << ip.period << ")\n";
      j["index_period"] = {ip.index, ip.period};
    }
    if (o.flat_laws) {
      auto res = check_flat_variety_laws(S, g_caps);
      Json arr = Json::array();
      std::size_t held = 0;
      for (auto const& r : res) {
        held += r.holds ? 1 : 0;
        arr.push_back({{"law", flat_law_text(r.mask)}, {"holds", r.holds}});
        if (!r.holds) {
          txt << "  fails: " << flat_law_text(r.mask) << '\n';
        }
      }
      txt << "flat-laws: " << held << "/16 hold\n";
      j["flat_laws"] = arr;
      if (S.is_flat()) {
        pass = pass && held == 16;
      }
    }
    for (auto [on, mode] : {std::pair{o.one_in_three, TripleMode::one_in_three},
                            std::pair{o.two_in_three,
                                      TripleMode::two_in_three}}) {
      if (!on) {
        continue;
      }
      PropertyVerdict v = one_in_three_property(S, mode, g_caps);
      pass              = pass && v.holds;
      txt << v.name << ": " << (v.holds ? "holds" : "FAILS") << '\n';
      Json pts = Json::array();
      for (auto const& p : v.points) {
        Json jp{{"c", S.name(p.c)}, {"vacuous", p.vacuous},
                {"holds", p.holds}};
        txt << "  " << v.name << ": c=" << S.name(p.c);
        if (p.vacuous) {
          txt << ", vacuous";
        } else if (p.d) {
          txt << ", d=" << S.name(*p.d);
          jp["d"] = S.name(*p.d);
        } else if (p.violation) {
          auto const& t = *p.violation;
          txt << ", no d; triple (" << S.name(t[0]) << "," << S.name(t[1])
              << "," << S.name(t[2]) << ")";
          jp["triple"] = {S.name(t[0]), S.name(t[1]), S.name(t[2])};
        }
        txt << '\n';
        pts.push_back(jp);
      }
      j[v.name] = {{"holds", v.holds}, {"points", pts}};
    }
    if (o.noncyclic_ideal) {
      auto nc = noncyclic_elements(S);
      auto v  = noncyclic_order_ideal(S);
      pass    = pass && v.holds;
      txt << "noncyclic: " << names_of(S, nc) << ", order ideal: "
          << (v.holds ? "yes" : "NO");
      if (v.violation) {
        txt << " (" << S.name(v.violation->first) << " <= "
            << S.name(v.violation->second) << ")";
      }
      txt << '\n';
      std::vector<std::string> ncn;
      for (Elem x : nc) {
        ncn.push_back(S.name(x));
      }
      j["noncyclic"] = {{"elements", ncn}, {"order_ideal", v.holds}};
    }
    if (o.subgroups) {
      auto subs = multiplicative_subgroups(S, false, g_caps);
      Json arr  = Json::array();
      txt << "maximal subgroups:\n";
      for (auto const& m : subs) {
        txt << "  at " << S.name(m.idempotent) << ": "
            << names_of(S, m.carrier) << (m.abelian ? " abelian" : "")
            << '\n';
        arr.push_back({{"idempotent", S.name(m.idempotent)},
                       {"order", m.carrier.size()},
                       {"abelian", m.abelian}});
      }
      auto w = nonabelian_nilpotent_witness(S, g_caps);
      txt << "nonabelian nilpotent subgroup: "
          << (w ? names_of(S, w->carrier) : std::string("none")) << '\n';
      j["subgroups"] = arr;
      j["nonabelian_nilpotent"] =
          w ? Json(w->carrier.size()) : Json(nullptr);
    }
    j["pass"] = pass;
    std::cout << (o.json ? j.dump(2) + "\n" : txt.str());
    return pass ? kPass : kFail;
  }

  ////////////////////////////////////////////////////////////////////////
  // construct
  ////////////////////////////////////////////////////////////////////////

  struct ConstructOptions {
    std::string kind, output, group, semiring, left, right, variant = "Sc";
    std::string words, ideal, adjoin_kind = "zero", file, base = "S7", word;
    std::size_t n = 2;
    bool        with_zero = false, include_empty = false, monoid = false;
    bool        json = false;
  };

  int emit_semiring(ConstructOptions const& o, FiniteSemiring const& S,
                    std::string const& note = {}) {
    if (!note.empty()) {
      std::cerr << "note: " << note << '\n';
    }
    if (o.json) {
      Json j        = json_header();
      j["semiring"] = to_json(S);
      write_output(o.output, j.dump(2) + "\n");
    } else {
      write_output(o.output, header() + format_semiring(S));
    }
    return kPass;
  }

  int emit_report(ConstructOptions const& o, WitnessReport const& r) {
    if (o.json) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      std::cout << header() << format_report(r);
    }
    if (!o.output.empty()) {
      write_output(o.output, header() + format_semiring(r.semiring));
    }
    return r.ok() ? kPass : kFail;
  }

  int run_construct(ConstructOptions const& o) {
    auto const& k = o.kind;
    if (k == "flat-group") {
      return emit_semiring(o, flat_extension(load_group(o.group), o.with_zero));
    }
    if (k == "word") {
      auto ws = split_list(o.words);
      return emit_semiring(
          o, word_semiring(WordSpec::parse(parse_word_variant(o.variant), ws),
                           g_caps));
    }
    if (k == "power") {
      FiniteSemigroup T = !o.group.empty()
                              ? load_group(o.group).as_semigroup()
                              : multiplicative_reduct(load_semiring(o.semiring));
      return emit_semiring(o, power_semiring(T, o.include_empty, g_caps));
    }
    if (k == "hypergraph") {
      return emit_semiring(
          o, build_hypergraph_semiring(load_hypergraph(o.file), o.monoid,
                                       g_caps)
                 .semiring);
    }
    if (k == "ideal-quotient") {
      FiniteSemiring    S = load_semiring(o.semiring);
      std::vector<Elem> J;
      for (auto const& nm : split_list(o.ideal)) {
        auto x = S.find(nm);
        if (!x) {
          throw PreconditionError("unknown element '" + nm + "'");
        }
        J.push_back(*x);
      }
      return emit_semiring(o, ideal_quotient(S, J).quotient);
    }
    if (k == "zero-join") {
      return emit_semiring(o, zero_direct_join(load_semiring(o.left),
                                               load_semiring(o.right)));
    }
    if (k == "adjoin") {
      AdjoinKind ak;
      if (o.adjoin_kind == "zero") {
        ak = AdjoinKind::additive_zero;
      } else if (o.adjoin_kind == "one") {
        ak = AdjoinKind::multiplicative_identity;
      } else {
        throw PreconditionError("adjoin kind must be zero or one");
      }
      Adjoined a = adjoin(load_semiring(o.semiring), ak);
      return emit_semiring(o, a.semiring, a.note);
    }
    if (k == "sinm") {
      return emit_report(o, sinm_construction(o.n, o.monoid, g_caps));
    }
    if (k == "sins") {
      return emit_report(o, sins_construction(o.word, g_caps));
    }
    if (k == "robust-witness") {
      WitnessBase b;
      if (o.base == "S7") {
        b = WitnessBase::s7;
      } else if (o.base == "Sc") {
        b = WitnessBase::sc;
      } else {
        throw PreconditionError("base must be S7 or Sc");
      }
      return emit_report(
          o, robust_power_witness(load_hypergraph(o.file), b, o.monoid,
                                  g_caps));
    }
    if (k == "forest-witness") {
      return emit_report(
          o, forest_power_witness(load_hypergraph(o.file), o.monoid, g_caps));
    }
    if (k == "flat-group-extract") {
      FiniteSemiring S = load_semiring(o.semiring);
      auto           w = nonabelian_nilpotent_witness(S, g_caps);
      std::vector<Elem> G;
      if (!o.ideal.empty()) {
        for (auto const& nm : split_list(o.ideal)) {
          G.push_back(S.at(nm));
        }
      } else if (w) {
        G = w->carrier;
      } else {
        throw PreconditionError("no subgroup given and no nonabelian "
                                "nilpotent subgroup found");
      }
      return emit_report(o, extract_flat_group(S, G));
    }
    throw PreconditionError("unknown construction '" + k + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // hypergraph
  ////////////////////////////////////////////////////////////////////////

  struct HypergraphOptions {
    std::string   sub, file, vertices, output;
    std::size_t   colours = 2, n = 20, k = 3, girth = 2, edges = 0;
    std::size_t   budget = 20, no_colour = 0;
    bool          unsat = false, count = false, json = false;
    std::uint64_t seed = 1;
  };

  int run_hypergraph(HypergraphOptions const& o) {
    std::ostringstream txt;
    Json               j = json_header();
    int                rc = kPass;
    if (o.sub == "random") {
      RandomHypergraphParams p;
      p.n      = o.n;
      p.k      = o.k;
      p.girth  = o.girth;
      p.edges  = o.edges;
      p.seed   = o.seed;
      p.budget = o.budget;
      if (o.no_colour) {
        p.target  = HardTarget::not_colourable;
        p.colours = o.no_colour;
      } else if (o.unsat) {
        p.target = HardTarget::exact_unsat;
      }
      auto r = random_hard_hypergraph(p);
      j      = json_header(o.seed);
      txt << header(o.seed);
      j["attempts"] = r.attempts;
      if (!r.hypergraph) {
        txt << "no certified instance after " << r.attempts
            << " attempts\n";
        j["found"] = false;
        std::cout << (o.json ? j.dump(2) + "\n" : txt.str());
        return kBudget;
      }
      Hypergraph const& H = *r.hypergraph;
      std::string g = r.certified_girth ? std::to_string(*r.certified_girth)
                                        : std::string("infinite");
      txt << "certified: girth " << g;
      if (p.target == HardTarget::not_colourable) {
        txt << ", not " << p.colours << "-colourable";
      } else if (p.target == HardTarget::exact_unsat) {
        txt << ", not 2-in-3 satisfiable";
      }
      txt << " (" << r.certificate_nodes << " search nodes, attempt "
          << r.attempts << ")\n";
      j["found"]      = true;
      j["girth"]      = g;
      j["certificate_nodes"] = r.certificate_nodes;
      j["hypergraph"] = format_hypergraph(H);
      if (!o.output.empty()) {
        write_output(o.output, format_hypergraph(H));
      } else {
        txt << format_hypergraph(H);
      }
      std::cout << (o.json ? j.dump(2) + "\n" : txt.str());
      return kPass;
    }
    Hypergraph H = load_hypergraph(o.file);
    txt << header();
    if (o.sub == "girth") {
      auto        g = girth(H);
      std::string s = g ? std::to_string(*g) : std::string("infinite");
      txt << "girth: " << s << '\n';
      j["girth"] = s;
    } else if (o.sub == "forest") {
      bool f = is_hyperforest(H);
      txt << "hyperforest: " << (f ? "yes" : "no") << '\n';
      j["hyperforest"] = f;
      rc               = f ? kPass : kFail;
    } else if (o.sub == "solve") {
      auto r = solve_exact(H, o.count ? SolveMode::count : SolveMode::first);
      j["satisfiable"] = r.satisfiable;
      j["nodes"]       = r.nodes;
      if (r.satisfiable) {
        txt << "satisfiable\n";
        if (o.count) {
          txt << "solutions: " << r.count << '\n';
          j["solutions"] = r.count;
        }
        txt << format_assignment(r.assignment);
        j["assignment"] = r.assignment;
      } else {
        txt << "UNSAT (exhaustive, " << r.nodes << " nodes)\n";
        rc = kFail;
      }
    } else if (o.sub == "robust") {
      auto r = robust2_check(H);
      j["robust"] = r.holds;
      txt << "<=2-robust: " << (r.holds ? "yes" : "no") << '\n';
      if (r.failing) {
        std::string pa;
        for (auto [v, b] : r.failing->values) {
          pa += std::to_string(v) + "=" + std::to_string(b) + " ";
        }
        txt << "non-extendable partial assignment: "
            << (pa.empty() ? std::string("(empty)") : pa) << '\n';
        j["failing"] = pa;
      }
      rc = r.holds ? kPass : kFail;
    } else if (o.sub == "colour") {
      auto r = colourable(H, o.colours);
      j["colourable"] = r.colourable;
      j["nodes"]      = r.nodes;
      if (r.colourable) {
        txt << o.colours << "-colourable\n" << format_assignment(r.colouring);
        j["colouring"] = r.colouring;
      } else {
        txt << "not " << o.colours << "-colourable (exhaustive, " << r.nodes
            << " nodes)\n";
        rc = kFail;
      }
    } else if (o.sub == "gplus") {
      std::vector<Vertex> VG;
      for (auto const& s : split_list(o.vertices)) {
        VG.push_back(static_cast<Vertex>(std::stoul(s)));
      }
      auto c = gplus_closure(H, VG);
      txt << "closure:";
      for (Vertex v : c.vertices) {
        txt << ' ' << v;
      }
      txt << "\nsize " << c.vertices.size() << ", bound " << c.bound
          << (c.bound_holds ? "" : " VIOLATED") << '\n';
      txt << "induced:\n" << format_hypergraph(c.induced);
      j["vertices"]    = c.vertices;
      j["bound"]       = c.bound;
      j["bound_holds"] = c.bound_holds;
      j["induced"]     = format_hypergraph(c.induced);
      rc               = c.bound_holds ? kPass : kFail;
    } else {
      throw PreconditionError("unknown hypergraph command '" + o.sub + "'");
    }
    std::cout << (o.json ? j.dump(2) + "\n" : txt.str());
    return rc;
  }

  ////////////////////////////////////////////////////////////////////////
  // identity, separate, h23
  ////////////////////////////////////////////////////////////////////////

  int run_identity(std::string const& object, std::vector<std::string> ids,
                   std::string const& file, bool json) {
    FiniteSemiring S = load_semiring(object);
    if (!file.empty()) {
      std::istringstream in(read_file(file));
      std::string        line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          ids.push_back(line);
        }
      }
    }
    bool               all = true;
    std::ostringstream txt;
    Json               arr = Json::array();
    txt << header();
    for (auto const& text : ids) {
      VarTable vars;
      auto [l, r] = parse_identity(text, vars);
      AiTerm u = normalize_term(l), v = normalize_term(r);
      auto   c = holds_identity(S, u, v, g_caps);
      all      = all && c.holds;
      txt << term_str(u, vars) << " = " << term_str(v, vars) << ": "
          << (c.holds ? "holds" : "fails");
      Json ji{{"identity", text}, {"holds", c.holds}};
      if (!c.holds) {
        std::string ce;
        for (Var x = 0; x < c.counterexample.size(); ++x) {
          if (c.counterexample[x] != kNoElem) {
            ce += (ce.empty() ? "" : ", ") + vars.name(x) + "="
                  + S.name(c.counterexample[x]);
          }
        }
        txt << " at " << ce;
        ji["counterexample"] = ce;
      }
      txt << '\n';
      arr.push_back(ji);
    }
    Json j          = json_header();
    j["identities"] = arr;
    std::cout << (json ? j.dump(2) + "\n" : txt.str());
    return all ? kPass : kFail;
  }

  int run_separate(std::string const& s, std::string const& t,
                   SeparationBounds const& b, bool json) {
    FiniteSemiring S = load_semiring(s), T = load_semiring(t);
    auto           r = identity_separation_search(S, T, b, g_caps);
    Json           j = json_header();
    j["candidates"]  = r.candidates;
    std::ostringstream txt;
    txt << header();
    if (r.found) {
      std::string id = identity_str(r.found->lhs, r.found->rhs);
      txt << "separating identity: " << id << " (holds in " << s
          << ", fails in " << t << "; " << r.candidates << " candidates)\n";
      j["identity"] = id;
    } else {
      txt << "none within bounds (" << r.candidates << " candidates)\n";
      j["identity"] = nullptr;
    }
    std::cout << (json ? j.dump(2) + "\n" : txt.str());
    return r.found ? kPass : kFail;
  }

  int run_h23(std::string const& s, std::string const& file, bool json) {
    FiniteSemiring S = load_semiring(s);
    Hypergraph     H = load_hypergraph(file);
    H23Verdict     v = h23_verdict(S, H, g_caps);
    Json           j = json_header();
    j["verdict"]     = to_string(v.kind);
    std::ostringstream txt;
    txt << header() << "verdict: " << to_string(v.kind);
    if (v.kind == H23Kind::hypotheses_fail) {
      txt << " (" << v.failed_hypothesis << ")";
      j["failed"] = v.failed_hypothesis;
    } else {
      txt << " (property " << to_string(*v.property) << ", index-period ("
          << v.index_period_value.index << "," << v.index_period_value.period
          << "), " << v.solver_nodes << " solver nodes)";
      j["property"] = to_string(*v.property);
      j["nodes"]    = v.solver_nodes;
    }
    txt << '\n';
    std::cout << (json ? j.dump(2) + "\n" : txt.str());
    return v.kind == H23Kind::hypotheses_fail ? kFail : kPass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite additively idempotent semirings: constructions, "
               "checks and hypergraph tools"};
  app.set_version_flag("--version", aisr::kVersion);
  app.require_subcommand(1);

  CheckOptions co;
  auto*        check = app.add_subcommand("check", "run verifiers on a semiring");
  check->add_option("object", co.object, "fixture name or semiring file")
      ->required();
  check->add_flag("--axioms", co.axioms, "semiring axioms");
  check->add_flag("--flat", co.flat, "flatness");
  check->add_flag("--order", co.order, "order profile");
  check->add_flag("--index-period", co.index_period, "index and period");
  check->add_flag("--flat-laws", co.flat_laws, "the 16 flat variety laws");
  check->add_flag("--one-in-three", co.one_in_three, "1-in-3 property");
  check->add_flag("--two-in-three", co.two_in_three, "2-in-3 property");
  check->add_flag("--noncyclic-ideal", co.noncyclic_ideal,
                  "noncyclic elements form an order ideal");
  check->add_flag("--subgroups", co.subgroups, "multiplicative subgroups");
  check->add_flag("--all", co.all, "every check");
  check->add_flag("--json", co.json, "machine-readable output");

  ConstructOptions ko;
  auto* construct = app.add_subcommand("construct", "build a semiring");
  construct
      ->add_option("kind", ko.kind,
                   "flat-group, word, power, hypergraph, ideal-quotient, "
                   "zero-join, adjoin, sinm, sins, robust-witness, "
                   "forest-witness, flat-group-extract")
      ->required();
  construct->add_option("-o,--output", ko.output, "output file");
  construct->add_option("--group", ko.group, "group fixture or file");
  construct->add_option("--semiring", ko.semiring, "semiring fixture or file");
  construct->add_option("--left", ko.left, "left zero-join factor");
  construct->add_option("--right", ko.right, "right zero-join factor");
  construct->add_option("--variant", ko.variant, "S, M, Sc or Mc");
  construct->add_option("--words", ko.words, "comma-separated words");
  construct->add_option("--ideal", ko.ideal, "comma-separated element names");
  construct->add_option("--adjoin", ko.adjoin_kind, "adjoin: zero or one");
  construct->add_option("--file", ko.file, "hypergraph file");
  construct->add_option("--base", ko.base, "robust witness base: S7 or Sc");
  construct->add_option("--word", ko.word, "commutative word for sins");
  construct->add_option("--n", ko.n, "sinm size");
  construct->add_flag("--with-zero", ko.with_zero, "adjoin an additive zero");
  construct->add_flag("--include-empty", ko.include_empty,
                      "power semiring with the empty set");
  construct->add_flag("--monoid", ko.monoid, "monoid variant");
  construct->add_flag("--json", ko.json, "machine-readable output");

  HypergraphOptions ho;
  auto* hyper = app.add_subcommand("hypergraph", "hypergraph tools");
  hyper
      ->add_option("command", ho.sub,
                   "girth, forest, solve, robust, colour, random, gplus")
      ->required();
  hyper->add_option("--file", ho.file, "hypergraph file");
  hyper->add_option("--vertices", ho.vertices, "comma-separated vertices");
  hyper->add_option("--colours", ho.colours, "number of colours");
  hyper->add_option("--n", ho.n, "vertices");
  hyper->add_option("--k", ho.k, "uniformity");
  hyper->add_option("--girth", ho.girth, "minimum girth");
  hyper->add_option("--edges", ho.edges, "edge limit (0: maximal)");
  hyper->add_option("--budget", ho.budget, "attempts");
  hyper->add_option("--no-colour", ho.no_colour,
                    "require non-colourability with this many colours");
  hyper->add_flag("--unsat", ho.unsat, "require 2-in-3 unsatisfiability");
  hyper->add_option("--seed", ho.seed, "random seed");
  hyper->add_flag("--count", ho.count, "count all solutions");
  hyper->add_option("-o,--output", ho.output, "write the instance here");
  hyper->add_flag("--json", ho.json, "machine-readable output");

  std::string              id_object, id_file;
  std::vector<std::string> id_list;
  bool                     id_json = false;
  auto* ident = app.add_subcommand("identity", "check identities");
  ident->add_option("object", id_object, "fixture name or semiring file")
      ->required();
  ident->add_option("identities", id_list, "identities \"lhs = rhs\"");
  ident->add_option("--file", id_file, "identity file");
  ident->add_flag("--json", id_json, "machine-readable output");

  std::string      sep_s, sep_t;
  SeparationBounds sb;
  bool             sep_json = false;
  auto* sep = app.add_subcommand("separate",
                                 "find an identity of S failing in T");
  sep->add_option("S", sep_s, "semiring whose identities are searched")
      ->required();
  sep->add_option("T", sep_t, "semiring to separate")->required();
  sep->add_option("--vars", sb.vars, "variables");
  sep->add_option("--length", sb.length, "word length");
  sep->add_option("--summands", sb.summands, "summands per side");
  sep->add_flag("--linear", sb.linear, "each variable at most once");
  sep->add_flag("--json", sep_json, "machine-readable output");

  std::string h_s, h_file;
  bool        h_json = false;
  auto* h23 = app.add_subcommand(
      "h23", "certify S_H outside the variety of S for 3-uniform H");
  h23->add_option("object", h_s, "fixture name or semiring file")->required();
  h23->add_option("--file", h_file, "hypergraph file")->required();
  h23->add_flag("--json", h_json, "machine-readable output");

  auto* fixtures = app.add_subcommand("fixtures", "list built-in objects");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  try {
    if (char const* env = std::getenv("AISR_CAPS")) {
      g_caps = Caps::parse(env);
    }
    if (*check) {
      return run_check(co);
    }
    if (*construct) {
      return run_construct(ko);
    }
    if (*hyper) {
      return run_hypergraph(ho);
    }
    if (*ident) {
      return run_identity(id_object, id_list, id_file, id_json);
    }
    if (*sep) {
      return run_separate(sep_s, sep_t, sb, sep_json);
    }
    if (*h23) {
      return run_h23(h_s, h_file, h_json);
    }
    if (*fixtures) {
      std::cout << "semirings:";
      for (auto const& s : semiring_fixture_names()) {
        std::cout << ' ' << s;
      }
      std::cout << "\ngroups:";
      for (auto const& s : group_fixture_names()) {
        std::cout << ' ' << s;
      }
      std::cout << '\n';
      return kPass;
    }
  } catch (SizeError const& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kBudget;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
