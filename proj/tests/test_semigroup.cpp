#include "doctest.h"
#include "syncalg/fixtures.hpp"
#include "syncalg/semigroup.hpp"

using namespace syncalg;

TEST_CASE("labeled semigroup counts on {0..n-1} for n = 1..4") {
  CHECK(all_semigroups(1).size() == 1);
  CHECK(all_semigroups(2).size() == 8);
  CHECK(all_semigroups(3).size() == 113);
  CHECK(all_semigroups(4).size() == 3492);
  for (auto& s : all_semigroups(3)) CHECK(is_associative(s));
}

TEST_CASE("constructions: cyclic, left-zero, monogenic, Brandt B2") {
  FiniteSemigroup z5 = cyclic_group(5);
  CHECK(z5.size() == 5);
  CHECK(is_group(z5));
  FiniteSemigroup lz = left_zero_semigroup(3);
  CHECK(!is_group(lz));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) CHECK(lz.mul(i, j) == i);
  FiniteSemigroup mg = monogenic(2, 3);  // x, x^2, ..., x^4 with x^5 = x^2
  CHECK(mg.size() == 4);
  CHECK(is_associative(mg));
  CHECK(!is_group(mg));
  FiniteSemigroup b2 = brandt_b2();
  CHECK(b2.size() == 5);
  CHECK(is_associative(b2));
  CHECK(!is_group(b2));
  CHECK(find_zero(b2) >= 0);
}

TEST_CASE("idempotent power lands on the unique idempotent power") {
  for (auto s : {cyclic_group(6), monogenic(3, 4), brandt_b2()})
    for (int x = 0; x < s.size(); x++) {
      int e = idempotent_power(s, x);
      CHECK(s.mul(e, e) == e);
      // e is a power of x
      int p = x;
      bool found = false;
      for (int k = 0; k < 2 * s.size(); k++) {
        if (p == e) found = true;
        p = s.mul(p, x);
      }
      CHECK(found);
    }
}

TEST_CASE("transition monoid of a relation DFA") {
  SyncAutomaton dfa = relation_dfa(fixtures::fig1());
  TransitionAlgebraResult ta = transition_algebra(dfa, SyntMode::MonoidMode);
  CHECK(is_associative(ta.sg));
  CHECK(ta.sg.identity >= 0);
  // letter_map is consistent with the table: value of a 2-letter word is the
  // product of its letters' values
  for (size_t i = 0; i < ta.letter_map.size(); i++)
    for (size_t j = 0; j < ta.letter_map.size(); j++) {
      int prod = ta.sg.mul(ta.letter_map[i], ta.letter_map[j]);
      CHECK(prod >= 0);
      CHECK(prod < ta.sg.size());
    }
  // witnesses evaluate back to their element
  for (int m = 0; m < ta.sg.size(); m++) {
    PairedWord w = ta.witness[m];
    int v = ta.sg.identity;
    for (PairedLetter l : w) v = ta.sg.mul(v, ta.letter_map[dfa.letter_index(l)]);
    CHECK(v == m);
  }
}

TEST_CASE("semigroup mode of the transition algebra has no forced identity") {
  RelationHandle plus{fixtures::universal().aut, Mode::Plus};
  TransitionAlgebraResult ta = transition_algebra(relation_dfa(plus), SyntMode::SemigroupMode);
  CHECK(is_associative(ta.sg));
  // the well-formed-words language has one element per type plus a zero
  CHECK(ta.sg.size() == 6);
}

TEST_CASE("associativity witness finds a broken table") {
  FiniteSemigroup bad;
  bad.names = {"p", "q"};
  bad.table = {{0, 1}, {0, 0}};
  auto w = associativity_witness(bad);
  REQUIRE(w.has_value());
  auto [x, y, z] = *w;
  CHECK(bad.mul(bad.mul(x, y), z) != bad.mul(x, bad.mul(y, z)));
}
