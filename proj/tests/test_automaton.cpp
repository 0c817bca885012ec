#include "doctest.h"
#include "syncalg/fixtures.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;

namespace {
std::vector<std::pair<std::string, std::string>> all_pairs(const std::string& sigma, int bound) {
  std::vector<std::string> words{""};
  for (size_t i = 0; i < words.size(); i++)
    if (static_cast<int>(words[i].size()) < bound)
      for (char c : sigma) words.push_back(words[i] + c);
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& u : words)
    for (auto& v : words)
      if (static_cast<int>(u.size() + v.size()) <= bound) out.push_back({u, v});
  return out;
}
}  // namespace

TEST_CASE("every fixture round-trips through the text format") {
  for (auto& f : fixtures::catalog()) {
    RelationHandle back = parse_automaton(print_automaton(f.handle));
    CHECK(back.mode == f.handle.mode);
    CHECK(compare(CompareKind::Equivalent, f.handle, &back).holds);
  }
}

TEST_CASE("relation_dfa is canonical: equal relations give identical tables") {
  RelationHandle f = fixtures::fig1();
  RelationHandle m = fixtures::minauto();  // different presentation, same relation
  CHECK(print_automaton({relation_dfa(f), f.mode}) == print_automaton({relation_dfa(m), m.mode}));
}

TEST_CASE("well-formed filter is the minimal 4-state DFA") {
  SyncAutomaton wf = wf_automaton("ab");
  CHECK(wf.num_states() == 4);
  CHECK(print_automaton({minimize_dfa(wf), Mode::Star}) == print_automaton({wf, Mode::Star}));
}

TEST_CASE("boolean combinations agree with setwise membership up to length 6") {
  RelationHandle a = fixtures::prefix(), b = fixtures::same_length();
  RelationHandle uni = boolean_combine(BoolOp::Union, a, &b);
  RelationHandle inter = boolean_combine(BoolOp::Intersection, a, &b);
  RelationHandle diff = boolean_combine(BoolOp::Difference, a, &b);
  RelationHandle comp = boolean_combine(BoolOp::Complement, a);
  for (auto& [u, v] : all_pairs("ab", 6)) {
    bool ia = accepts_pair(a, u, v), ib = accepts_pair(b, u, v);
    CHECK(accepts_pair(uni, u, v) == (ia || ib));
    CHECK(accepts_pair(inter, u, v) == (ia && ib));
    CHECK(accepts_pair(diff, u, v) == (ia && !ib));
    CHECK(accepts_pair(comp, u, v) == !ia);  // relative to all pairs
  }
}

TEST_CASE("complement in plus mode is relative to non-empty pairs") {
  RelationHandle co = fixtures::cofinite();
  CHECK(!accepts_pair(co, "", ""));
  CHECK(!accepts_pair(co, "a", "aa"));
  CHECK(accepts_pair(co, "a", "a"));
  CHECK(accepts_pair(co, "aa", "a"));
}

TEST_CASE("compare produces shortest witnesses") {
  RelationHandle a = fixtures::prefix(), u = fixtures::universal();
  CHECK(compare(CompareKind::Included, a, &u).holds);
  CompareResult r = compare(CompareKind::Included, u, &a);
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  // a shortest counterexample uses one paired letter: (a,eps), (a,b) or (b,a)
  CHECK(std::max(r.witness->first.size(), r.witness->second.size()) == 1);
  CHECK(!accepts_pair(a, r.witness->first, r.witness->second));
  CHECK(compare(CompareKind::Empty, fixtures::empty()).holds);
  CHECK(compare(CompareKind::Universal, fixtures::universal()).holds);
}

TEST_CASE("enumeration order and content over a one-letter alphabet") {
  RelationHandle p = parse_automaton(
      "alphabet: a\n"
      "states: eq ext sink\n"
      "initial: eq\n"
      "final: eq ext\n"
      "trans: eq (a,a) eq\n"
      "trans: eq (a,_) sink\n"
      "trans: eq (_,a) ext\n"
      "trans: ext (a,a) sink\n"
      "trans: ext (a,_) sink\n"
      "trans: ext (_,a) ext\n"
      "trans: sink (a,a) sink\n"
      "trans: sink (a,_) sink\n"
      "trans: sink (_,a) sink\n");
  auto pairs = enumerate_pairs(p, 2);
  std::vector<std::pair<std::string, std::string>> expect{
      {"", ""}, {"", "a"}, {"a", "a"}, {"", "aa"}};
  CHECK(pairs == expect);
  CHECK_THROWS_AS(enumerate_pairs(p, 13), Error);
}

TEST_CASE("permutation test: fig1 yes, its minimal paired DFA no") {
  CHECK(is_permutation_automaton(fixtures::fig1().aut));
  SyncAutomaton m = fixtures::minauto().aut;
  CHECK(m.num_states() >= 5);
  CHECK(!is_permutation_automaton(m));
  SyncAutomaton nd = make_automaton("a");
  nd.add_state("x");
  CHECK_THROWS_AS(is_permutation_automaton(nd), Error);  // not complete
}

TEST_CASE("composition of relations: algebraic identities") {
  RelationHandle p = fixtures::prefix();
  RelationHandle pp = compose_relations(p, p);
  CHECK(pp.mode == Mode::Star);
  CHECK(compare(CompareKind::Equivalent, pp, &p).holds);  // prefix is transitive+reflexive
  RelationHandle sl = fixtures::same_length();
  RelationHandle slsl = compose_relations(sl, sl);
  CHECK(compare(CompareKind::Equivalent, slsl, &sl).holds);
  RelationHandle id = fixtures::identity();
  RelationHandle f = fixtures::fig1();
  CHECK(compare(CompareKind::Equivalent, compose_relations(f, id), &f).holds);
  CHECK(compare(CompareKind::Equivalent, compose_relations(id, f), &f).holds);
}

TEST_CASE("composition agrees with the bounded middle-word oracle") {
  RelationHandle r = fixtures::prefix(), s = fixtures::samelen_mod2();
  RelationHandle rr = compose_relations(r, r);
  for (auto& [u, w] : all_pairs("ab", 6))
    CHECK(accepts_pair(rr, u, w) == compose_oracle_member(r, r, u, w));
  RelationHandle ss = compose_relations(s, s);
  for (auto& [u, w] : all_pairs("a", 6))
    CHECK(accepts_pair(ss, u, w) == compose_oracle_member(s, s, u, w));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_automaton("states: q\ninitial: q\n"), ParseError);  // no alphabet
  CHECK_THROWS_AS(parse_automaton("alphabet: a\nstates: q\n"), ParseError);  // no initial
  CHECK_THROWS_AS(parse_automaton("alphabet: a\nstates: q q\ninitial: q\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton("alphabet: a\nmode: both\nstates: q\ninitial: q\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_automaton("alphabet: a\nstates: q\ninitial: q\ntrans: q (b,b) q\n"), Error);
}
