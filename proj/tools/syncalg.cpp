// syncalg: command-line front end for synchronous-relation algebra.
//
// Exit codes: 0 yes/success, 1 no/negative verdict, 2 guard or bound
// exceeded, 3 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "syncalg/compose.hpp"
#include "syncalg/decide.hpp"
#include "syncalg/fixtures.hpp"
#include "syncalg/oracle.hpp"
#include "syncalg/syntactic.hpp"

using json = nlohmann::json;
using namespace syncalg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An automaton argument is either a file in the text format or the name of a
// built-in fixture.
RelationHandle load_relation(const std::string& arg) {
  if (std::ifstream probe{arg}; probe) return parse_automaton(slurp(arg));
  for (auto& f : fixtures::catalog())
    if (f.name == arg) return f.handle;
  throw ParseError("no such file or fixture: " + arg);
}

std::string naive_str(const NaiveResult& nr) {
  std::ostringstream out;
  out << "variant: naive\n";
  for (TypeTag t : all_tags()) {
    out << "elements " << tag_name(t) << ":";
    for (auto& n : nr.algebra.names[tag_index(t)]) out << ' ' << n;
    out << '\n';
  }
  out << "unit 1: eps" << (nr.unit_accepting ? "  # accepting" : "") << '\n';
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags()) {
      auto rt = concat_types(s, t);
      if (!rt) continue;
      for (int i = 0; i < nr.algebra.size(s); i++)
        for (int j = 0; j < nr.algebra.size(t); j++) {
          El z = nr.algebra.product({s, i}, {t, j});
          out << "prod: " << tag_name(s) << ':' << nr.algebra.names[tag_index(s)][i] << ' '
              << tag_name(t) << ':' << nr.algebra.names[tag_index(t)][j] << " = "
              << tag_name(z.tag) << ':' << nr.algebra.names[tag_index(z.tag)][z.idx] << '\n';
        }
    }
  for (TypeTag t : all_tags())
    for (int i = 0; i < nr.algebra.size(t); i++)
      if (nr.accepting[tag_index(t)][i])
        out << "accepting: " << tag_name(t) << ':' << nr.algebra.names[tag_index(t)][i] << '\n';
  return out.str();
}

const char* method_name(Method m) {
  switch (m) {
    case Method::MonoidLifting: return "lifting";
    case Method::InducedDependencies: return "deps";
    case Method::Pointlikes: return "pointlikes";
  }
  return "?";
}

int run(int argc, char** argv) {
  CLI::App app{"algebraic toolkit for synchronous (automatic) relations"};
  app.require_subcommand(1);
  bool as_json = false, as_dot = false;
  int guard = 24, max_len = 6;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--dot", as_dot, "DOT output where applicable");
  app.add_option("--guard", guard, "size guard for closures");
  app.add_option("--max-len", max_len, "length bound for bounded operations");

  std::string file, file2, variant = "unital", variety, equations, method = "auto";
  std::string sub, tag, member_u, member_v;
  bool trace = false, no_validate = false;

  auto* synt = app.add_subcommand("synt", "syntactic synchronous algebra of a relation");
  synt->add_option("automaton", file)->required();
  synt->add_option("--variant", variant)->check(CLI::IsMember({"unital", "positive", "naive"}));
  synt->add_flag("--trace", trace, "print provenance sizes");

  auto* decide = app.add_subcommand("decide", "is the relation a V-relation?");
  decide->add_option("automaton", file)->required();
  decide->add_option("--variety", variety);
  decide->add_option("--equations", equations, "file with profinite equalities");
  decide->add_option("--method", method)
      ->check(CLI::IsMember({"lifting", "deps", "pointlikes", "auto"}));

  auto* op = app.add_subcommand("op", "boolean/relational operations");
  op->add_option("operation", sub)
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "difference", "complement", "compare",
                             "member", "enumerate", "compose", "permutation"}));
  op->add_option("automaton", file)->required();
  op->add_option("automaton2", file2);
  op->add_option("--left", member_u, "left word for member");
  op->add_option("--right", member_v, "right word for member");

  auto* comp = app.add_subcommand("compose", "composition R.S of two relations");
  comp->add_option("automaton", file)->required();
  comp->add_option("automaton2", file2)->required();

  auto* chk = app.add_subcommand("check-algebra", "validate an algebra file");
  chk->add_option("algebra", file)->required();
  chk->add_flag("--no-validate", no_validate, "load without running the axiom checks");

  auto* oracle = app.add_subcommand("oracle", "bounded brute-force cross-checks");
  oracle->add_option("command", sub)->required()->check(CLI::IsMember({"verify", "nerode"}));
  oracle->add_option("automaton", file)->required();
  oracle->add_option("--tag", tag)->check(CLI::IsMember({"ll", "lb", "bl", "ll_lb", "ll_bl"}));

  auto* fix = app.add_subcommand("fixtures", "list or emit built-in fixtures");
  fix->add_option("name", file);

  auto* dot = app.add_subcommand("export-dot", "DOT graph of a relation's minimal DFA");
  dot->add_option("automaton", file)->required();

  // allow the global flags to appear after the verb
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  if (synt->parsed()) {
    RelationHandle r = load_relation(file);
    if (variant == "naive") {
      NaiveResult nr = syntactic_naive_algebra(r);
      if (as_json) {
        json j{{"variant", "naive"}, {"unit_accepting", nr.unit_accepting}};
        for (TypeTag t : all_tags()) j["sizes"][tag_name(t)] = nr.algebra.size(t);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << naive_str(nr);
      }
      return 0;
    }
    SyntacticResult res =
        syntactic_sync_algebra(r, variant == "unital" ? Variant::Unital : Variant::Positive);
    if (as_dot) {
      std::cout << to_dot(recognizer_to_dfa(res.morphism).aut);
      return 0;
    }
    if (as_json) {
      json j{{"variant", variant}};
      for (TypeTag t : all_tags()) j["sizes"][tag_name(t)] = res.algebra.size(t);
      j["total"] = res.algebra.total();
      j["minimal_dfa_states"] = res.provenance.minimal_dfa_states;
      j["monoid_size"] = res.provenance.monoid_size;
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    std::cout << print_algebra(res.algebra);
    for (El e : res.accepting.elements())
      std::cout << "# accepting: " << qualified_name(res.algebra, e) << '\n';
    if (trace) {
      std::cout << "# minimal dfa states: " << res.provenance.minimal_dfa_states << '\n'
                << "# syntactic monoid size: " << res.provenance.monoid_size << '\n'
                << "# carrier sizes:";
      for (TypeTag t : all_tags()) std::cout << ' ' << res.algebra.size(t);
      std::cout << '\n';
    }
    return 0;
  }

  if (decide->parsed()) {
    RelationHandle r = load_relation(file);
    VarietySpec v;
    if (!variety.empty()) {
      v = builtin_variety(variety);
    } else if (!equations.empty()) {
      v.name = "custom";
      v.equalities = parse_equality_set(equations.empty() ? "" : slurp(equations));
      v.kind = VarietyKind::SemigroupVariety;
    } else {
      throw ParseError("decide needs --variety or --equations");
    }
    Verdict verdict;
    if (method == "lifting" || (method == "auto" && v.kind == VarietyKind::MonoidVariety))
      verdict = decide_monoid_lifting(r, v);
    else if (method == "pointlikes")
      verdict = decide_pointlikes(r, v, guard);
    else
      verdict = decide_positive_dependencies(r, v);
    if (as_json) {
      json j{{"variety", v.name},
             {"method", method_name(verdict.method)},
             {"is_v_relation", verdict.is_v_relation},
             {"sound_only", verdict.sound_only},
             {"evidence", verdict.evidence}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << (verdict.is_v_relation ? "yes" : "no") << ": " << v.name << " via "
                << method_name(verdict.method) << (verdict.sound_only ? " (sound only)" : "")
                << '\n'
                << verdict.evidence << '\n';
    }
    return verdict.is_v_relation ? 0 : 1;
  }

  if (op->parsed() || comp->parsed()) {
    if (comp->parsed()) sub = "compose";
    RelationHandle a = load_relation(file);
    if (sub == "complement") {
      std::cout << print_automaton(boolean_combine(BoolOp::Complement, a));
      return 0;
    }
    if (sub == "permutation") {
      bool perm = is_permutation_automaton(relation_dfa(a));
      std::cout << (perm ? "permutation" : "not a permutation") << '\n';
      return perm ? 0 : 1;
    }
    if (sub == "member") {
      bool in = accepts_pair(a, member_u, member_v);
      std::cout << (in ? "member" : "not a member") << '\n';
      return in ? 0 : 1;
    }
    if (sub == "enumerate") {
      auto pairs = enumerate_pairs(a, max_len);
      if (as_json) {
        json j = json::array();
        for (auto& [u, w] : pairs) j.push_back({u, w});
        std::cout << j.dump() << '\n';
      } else {
        for (auto& [u, w] : pairs)
          std::cout << '(' << (u.empty() ? "eps" : u) << ',' << (w.empty() ? "eps" : w) << ")\n";
      }
      return 0;
    }
    if (file2.empty()) throw ParseError(sub + " needs two automata");
    RelationHandle b = load_relation(file2);
    if (sub == "compare") {
      CompareResult c = compare(CompareKind::Equivalent, a, &b);
      if (c.holds) {
        std::cout << "equivalent\n";
        return 0;
      }
      std::cout << "differ at (" << (c.witness->first.empty() ? "eps" : c.witness->first) << ','
                << (c.witness->second.empty() ? "eps" : c.witness->second) << ")\n";
      return 1;
    }
    RelationHandle out;
    if (sub == "union") out = boolean_combine(BoolOp::Union, a, &b);
    else if (sub == "intersection") out = boolean_combine(BoolOp::Intersection, a, &b);
    else if (sub == "difference") out = boolean_combine(BoolOp::Difference, a, &b);
    else out = compose_relations(a, b);
    std::cout << (as_dot ? to_dot(out.aut) : print_automaton(out));
    return 0;
  }

  if (chk->parsed()) {
    SyncAlgebra a = parse_algebra(slurp(file), false);
    std::vector<std::string> report = no_validate ? std::vector<std::string>{} : validate(a);
    if (as_json) {
      json j{{"valid", report.empty()}, {"violations", report}};
      std::cout << j.dump(2) << '\n';
    } else if (report.empty()) {
      std::cout << "valid " << (a.positive ? "positive" : "unital") << " synchronous algebra, "
                << a.total() << " elements\n";
    } else {
      for (auto& line : report) std::cout << line << '\n';
    }
    return report.empty() ? 0 : 1;
  }

  if (oracle->parsed()) {
    RelationHandle r = load_relation(file);
    OracleConfig cfg;
    cfg.max_total_len = max_len;
    if (sub == "verify") {
      SyntacticResult synt = syntactic_sync_algebra(
          r, r.mode == Mode::Plus ? Variant::Positive : Variant::Unital);
      VerifyReport rep = verify_syntactic(r, synt, cfg);
      if (as_json) {
        json j{{"ok", rep.ok}, {"detail", rep.detail}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (rep.ok ? "agree" : "MISMATCH") << '\n';
        if (!rep.detail.empty()) std::cout << rep.detail << '\n';
      }
      return rep.ok ? 0 : 1;
    }
    NerodeResult ner = nerode_classes(r, cfg);
    for (TypeTag t : all_tags()) {
      if (!tag.empty() && tag != tag_name(t)) continue;
      std::cout << tag_name(t) << ": " << ner.count(t) << " classes;";
      for (auto& w : ner.witnesses[tag_index(t)]) std::cout << ' ' << word_str(w);
      std::cout << '\n';
    }
    return 0;
  }

  if (fix->parsed()) {
    if (file.empty()) {
      for (auto& f : fixtures::catalog())
        std::cout << f.name << ": " << f.description << '\n';
      return 0;
    }
    std::cout << print_automaton(fixtures::by_name(file));
    return 0;
  }

  if (dot->parsed()) {
    std::cout << to_dot(relation_dfa(load_relation(file)));
    return 0;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code == "SizeGuardExceeded" || e.code == "BoundExceeded") return 2;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << '\n';
    return 3;
  }
}
