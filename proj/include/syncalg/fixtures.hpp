#pragma once

// Built-in relation fixtures used by tests and the CLI catalog.

#include "syncalg/automaton.hpp"

namespace syncalg {
namespace fixtures {

// Parity relation over {a,b}: the numbers of a's in u and v agree mod 2 on the
// common prefix length. Deterministic complete permutation automaton.
inline RelationHandle fig1() {
  SyncAutomaton a = make_automaton("ab");
  int even = a.add_state("even"), odd = a.add_state("odd");
  a.initial = {even};
  a.final_states[even] = true;
  for (PairedLetter l : a.letters) {
    bool swap = (l.left == 'a' && l.right == 'b') || (l.left == 'b' && l.right == 'a');
    a.add_trans(even, l, swap ? odd : even);
    a.add_trans(odd, l, swap ? even : odd);
  }
  return {a, Mode::Star};
}

// The minimal DFA of the parity relation seen as a paired-alphabet language.
inline RelationHandle minauto() {
  RelationHandle r = fig1();
  return {relation_dfa(r), Mode::Star};
}

// Length-difference relation over {a}: (u,v) with |u| > |v| and
// (|u|-|v| mod p) in I, or |v| > |u| and (|v|-|u| mod q) in J.
inline RelationHandle zpq(int p, int q, const std::set<int>& I, const std::set<int>& J,
                          Mode mode = Mode::Star) {
  SyncAutomaton a = make_automaton("a");
  int s0 = a.add_state("s0");
  std::vector<int> lb(p), bl(q);
  for (int i = 0; i < p; i++) lb[i] = a.add_state("lb" + std::to_string(i));
  for (int j = 0; j < q; j++) bl[j] = a.add_state("bl" + std::to_string(j));
  int sink = a.add_state("sink");
  a.initial = {s0};
  PairedLetter ll{'a', 'a'}, lp{'a', kPad}, pl{kPad, 'a'};
  a.add_trans(s0, ll, s0);
  a.add_trans(s0, lp, lb[1 % p]);
  a.add_trans(s0, pl, bl[1 % q]);
  for (int i = 0; i < p; i++) {
    a.add_trans(lb[i], lp, lb[(i + 1) % p]);
    a.add_trans(lb[i], ll, sink);
    a.add_trans(lb[i], pl, sink);
    a.final_states[lb[i]] = I.count(i) > 0;
  }
  for (int j = 0; j < q; j++) {
    a.add_trans(bl[j], pl, bl[(j + 1) % q]);
    a.add_trans(bl[j], ll, sink);
    a.add_trans(bl[j], lp, sink);
    a.final_states[bl[j]] = J.count(j) > 0;
  }
  for (PairedLetter l : a.letters) a.add_trans(sink, l, sink);
  return {a, mode};
}

// Over {a,b}: (u,v) with length difference exactly one, or at least two with
// the longer word ending in 'a'.
inline RelationHandle lastletter() {
  SyncAutomaton a = make_automaton("ab");
  int s0 = a.add_state("s0");
  int p1 = a.add_state("p1"), pa = a.add_state("pa"), pb = a.add_state("pb");
  int q1 = a.add_state("q1"), qa = a.add_state("qa"), qb = a.add_state("qb");
  int sink = a.add_state("sink");
  a.initial = {s0};
  a.final_states[p1] = a.final_states[pa] = true;
  a.final_states[q1] = a.final_states[qa] = true;
  for (PairedLetter l : a.letters) {
    TypeTag t = letter_type(l);
    a.add_trans(s0, l, t == TypeTag::LL ? s0 : (t == TypeTag::LB ? p1 : q1));
    for (int st : {p1, pa, pb})
      a.add_trans(st, l, t == TypeTag::LB ? (l.left == 'a' ? pa : pb) : sink);
    for (int st : {q1, qa, qb})
      a.add_trans(st, l, t == TypeTag::BL ? (l.right == 'a' ? qa : qb) : sink);
    a.add_trans(sink, l, sink);
  }
  return {a, Mode::Star};
}

// u is a prefix of v, over {a,b}.
inline RelationHandle prefix() {
  SyncAutomaton a = make_automaton("ab");
  int eq = a.add_state("eq"), ext = a.add_state("ext"), sink = a.add_state("sink");
  a.initial = {eq};
  a.final_states[eq] = a.final_states[ext] = true;
  for (PairedLetter l : a.letters) {
    TypeTag t = letter_type(l);
    a.add_trans(eq, l, t == TypeTag::LL && l.left == l.right ? eq
                       : t == TypeTag::BL                    ? ext
                                                             : sink);
    a.add_trans(ext, l, t == TypeTag::BL ? ext : sink);
    a.add_trans(sink, l, sink);
  }
  return {a, Mode::Star};
}

// |u| = |v|, over {a,b}.
inline RelationHandle same_length() {
  SyncAutomaton a = make_automaton("ab");
  int s0 = a.add_state("s0"), sink = a.add_state("sink");
  a.initial = {s0};
  a.final_states[s0] = true;
  for (PairedLetter l : a.letters) {
    a.add_trans(s0, l, letter_type(l) == TypeTag::LL ? s0 : sink);
    a.add_trans(sink, l, sink);
  }
  return {a, Mode::Star};
}

// |u| = |v| mod 2, over {a}.
inline RelationHandle samelen_mod2() {
  SyncAutomaton a = make_automaton("a");
  int s0 = a.add_state("s0"), s1 = a.add_state("s1");
  a.initial = {s0};
  a.final_states[s0] = true;
  for (PairedLetter l : a.letters) {
    bool toggle = letter_type(l) != TypeTag::LL;
    a.add_trans(s0, l, toggle ? s1 : s0);
    a.add_trans(s1, l, toggle ? s0 : s1);
  }
  return {a, Mode::Star};
}

// All pairs, over {a,b}.
inline RelationHandle universal() {
  SyncAutomaton a = make_automaton("ab");
  int s0 = a.add_state("s0");
  a.initial = {s0};
  a.final_states[s0] = true;
  for (PairedLetter l : a.letters) a.add_trans(s0, l, s0);
  return {a, Mode::Star};
}

// No pairs, over {a,b}.
inline RelationHandle empty() {
  SyncAutomaton a = make_automaton("ab");
  int s0 = a.add_state("s0");
  a.initial = {s0};
  for (PairedLetter l : a.letters) a.add_trans(s0, l, s0);
  return {a, Mode::Star};
}

// u = v, over {a,b}.
inline RelationHandle identity() {
  SyncAutomaton a = make_automaton("ab");
  int s0 = a.add_state("s0"), sink = a.add_state("sink");
  a.initial = {s0};
  a.final_states[s0] = true;
  for (PairedLetter l : a.letters) {
    a.add_trans(s0, l, letter_type(l) == TypeTag::LL && l.left == l.right ? s0 : sink);
    a.add_trans(sink, l, sink);
  }
  return {a, Mode::Star};
}

// The finite relation {(a, aa)}, over {a}.
inline RelationHandle nilpotent_finite() {
  SyncAutomaton a = make_automaton("a");
  int s0 = a.add_state("s0"), s1 = a.add_state("s1"), s2 = a.add_state("s2");
  int sink = a.add_state("sink");
  a.initial = {s0};
  a.final_states[s2] = true;
  for (PairedLetter l : a.letters) {
    a.add_trans(s0, l, l == PairedLetter{'a', 'a'} ? s1 : sink);
    a.add_trans(s1, l, l == PairedLetter{kPad, 'a'} ? s2 : sink);
    a.add_trans(s2, l, sink);
    a.add_trans(sink, l, sink);
  }
  return {a, Mode::Plus};
}

// Complement of {(a, aa)} within the non-empty pairs, over {a}.
inline RelationHandle cofinite() {
  return boolean_combine(BoolOp::Complement, nilpotent_finite());
}

// |u| > |v|, over {a}: every underlying semigroup is trivial.
inline RelationHandle loctriv_sample() {
  SyncAutomaton a = make_automaton("a");
  int s0 = a.add_state("s0"), l1 = a.add_state("l1"), sink = a.add_state("sink");
  a.initial = {s0};
  a.final_states[l1] = true;
  PairedLetter ll{'a', 'a'}, lp{'a', kPad}, pl{kPad, 'a'};
  a.add_trans(s0, ll, s0);
  a.add_trans(s0, lp, l1);
  a.add_trans(s0, pl, sink);
  a.add_trans(l1, lp, l1);
  a.add_trans(l1, ll, sink);
  a.add_trans(l1, pl, sink);
  for (PairedLetter l : a.letters) a.add_trans(sink, l, sink);
  return {a, Mode::Star};
}

// |u| > |v| with |u| - |v| = i mod 2, over {a} (non-empty pairs).
inline RelationHandle counterex_mod2() { return zpq(2, 1, {0}, {}, Mode::Plus); }
inline RelationHandle naive_r0() { return zpq(2, 1, {0}, {}, Mode::Plus); }
inline RelationHandle naive_r1() { return zpq(2, 1, {1}, {}, Mode::Plus); }

struct Fixture {
  std::string name;
  std::string description;
  RelationHandle handle;
};

inline std::vector<Fixture> catalog() {
  return {
      {"fig1", "a-count parity agrees on the common prefix, over {a,b} (star)", fig1()},
      {"minauto", "minimal paired-alphabet DFA of fig1 (star)", minauto()},
      {"zpq", "length difference in I mod 2 / J mod 3; defaults I={1}, J={1,2} (star)",
       zpq(2, 3, {1}, {1, 2})},
      {"lastletter",
       "length difference one, or at least two with the longer word ending in a (star)",
       lastletter()},
      {"counterex-mod-p", "|u|>|v| and |u|=|v| mod 2, over {a} (plus)", counterex_mod2()},
      {"nilpotent-finite", "the finite relation {(a,aa)} (plus)", nilpotent_finite()},
      {"cofinite", "complement of {(a,aa)} among non-empty pairs (plus)", cofinite()},
      {"loctriv", "|u| > |v| over {a}: all underlying semigroups trivial (star)",
       loctriv_sample()},
      {"naive-R0", "|u|>|v| and |u|-|v| = 0 mod 2, over {a} (plus)", naive_r0()},
      {"naive-R1", "|u|>|v| and |u|-|v| = 1 mod 2, over {a} (plus)", naive_r1()},
      {"prefix", "u is a prefix of v, over {a,b} (star)", prefix()},
      {"same-length", "|u| = |v|, over {a,b} (star)", same_length()},
      {"samelen-mod2", "|u| = |v| mod 2, over {a} (star)", samelen_mod2()},
      {"universal", "all pairs, over {a,b} (star)", universal()},
      {"identity", "u = v, over {a,b} (star)", identity()},
      {"empty", "no pairs, over {a,b} (star)", empty()},
  };
}

inline RelationHandle by_name(const std::string& name) {
  for (Fixture& f : catalog())
    if (f.name == name) return f.handle;
  throw Error("UnknownFixture", name);
}

}  // namespace fixtures
}  // namespace syncalg
