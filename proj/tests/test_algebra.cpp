#include "doctest.h"
#include "syncalg/fixtures.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;

namespace {
SyntacticResult synt_of(const RelationHandle& r) {
  return syntactic_sync_algebra(r, r.mode == Mode::Plus ? Variant::Positive : Variant::Unital);
}
}  // namespace

TEST_CASE("syntactic algebras of all fixtures satisfy the axioms") {
  for (auto& f : fixtures::catalog()) {
    SyntacticResult s = synt_of(f.handle);
    CHECK_MESSAGE(validate(s.algebra).empty(), f.name);
    CHECK(is_closed(s.algebra.ds, s.accepting));
  }
}

TEST_CASE("algebra text format round-trips") {
  for (auto& name : {"fig1", "lastletter", "counterex-mod-p"}) {
    SyncAlgebra a = synt_of(fixtures::by_name(name)).algebra;
    SyncAlgebra b = parse_algebra(print_algebra(a));
    CHECK(b.positive == a.positive);
    CHECK(b.ds.dep.size() == a.ds.dep.size());
    for (TypeTag t : all_tags()) CHECK(b.size(t) == a.size(t));
    CHECK(algebras_isomorphic(a, b));
  }
}

TEST_CASE("algebra parser rejects broken files") {
  CHECK_THROWS_AS(parse_algebra("elements ll: x\n"), ParseError);  // missing variant
  CHECK_THROWS_AS(parse_algebra("variant: unital\nelements zz: x\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("variant: positive\nelements ll: x\n"), ParseError);
  // incomplete product table: x x undeclared
  std::string text = "variant: positive\nelements ll: x\nelements lb: y\n";
  CHECK_THROWS_AS(parse_algebra(text + "prod: x y = x\n"), ParseError);  // wrong result tag
}

TEST_CASE("product algebra is a valid algebra") {
  SyncAlgebra a = synt_of(fixtures::fig1()).algebra;
  SyncAlgebra p = product_algebra(a, a);
  CHECK(validate(p).empty());
  for (TypeTag t : all_tags()) CHECK(p.size(t) == a.size(t) * a.size(t));
}

TEST_CASE("residuals: closedness, naive containment, empty shortcut") {
  for (auto& name : {"fig1", "lastletter", "samelen-mod2", "prefix", "counterex-mod-p"}) {
    SyntacticResult s = synt_of(fixtures::by_name(name));
    const SyncAlgebra& a = s.algebra;
    const ClosedSubset& c = s.accepting;
    for (El x : a.elements())
      for (Side side : {Side::Left, Side::Right}) {
        ClosedSubset r = residual(side, a, c, x);
        CHECK(is_closed(a.ds, r));
        // the naive residual is contained in the residual, and if it is
        // empty then so is the residual
        bool naive_empty = true;
        for (El y : a.elements()) {
          auto p = side == Side::Left ? a.try_product(x, y) : a.try_product(y, x);
          if (p && c.contains(*p)) {
            naive_empty = false;
            CHECK(r.contains(y));
          }
        }
        if (naive_empty) CHECK(r.elements().empty());
      }
  }
}

TEST_CASE("residual worked examples") {
  // S = (aa)* x a(aa)* over {a}: the right residual of the accepting set by
  // (a,a):ll is empty, because no accepted class can absorb one more (a,a)
  SyncAutomaton aut = make_automaton("a");
  for (auto& nm : {"q00", "q01", "q10", "q11"}) aut.add_state(nm);
  auto flip = [](int s, int du, int dv) { return (s ^ (du << 1)) ^ dv; };
  for (int s = 0; s < 4; s++) {
    aut.add_trans(s, {'a', 'a'}, flip(s, 1, 1));
    aut.add_trans(s, {'a', kPad}, flip(s, 1, 0));
    aut.add_trans(s, {kPad, 'a'}, flip(s, 0, 1));
  }
  aut.initial = {0};
  aut.final_states[1] = true;  // |u| even, |v| odd
  SyntacticResult s = synt_of({relation_dfa({aut, Mode::Star}), Mode::Star});
  bool found = false;
  for (El x : s.algebra.elements())
    if (x.tag == TypeTag::LL && s.algebra.name(x) == "(a,a)") {
      CHECK(residual(Side::Right, s.algebra, s.accepting, x).elements().empty());
      found = true;
    }
  CHECK(found);

  // lastletter: the right residual by (a,_):lb reaches across types and
  // contains elements of type bl, which the naive residual cannot contain
  SyntacticResult ll = synt_of(fixtures::lastletter());
  for (El x : ll.algebra.elements())
    if (x.tag == TypeTag::LB && ll.algebra.name(x) == "(a,_)") {
      ClosedSubset r = residual(Side::Right, ll.algebra, ll.accepting, x);
      bool has_bl = false;
      for (El y : r.elements()) has_bl = has_bl || y.tag == TypeTag::BL;
      CHECK(has_bl);
    }

  // residual of the empty subset is empty
  SyncAlgebra a = synt_of(fixtures::fig1()).algebra;
  ClosedSubset none = ClosedSubset::empty_like(a.ds);
  for (El x : a.elements())
    CHECK(residual(Side::Left, a, none, x).elements().empty());
}

TEST_CASE("syntactic congruence of a syntactic algebra is trivial") {
  for (auto& name : {"fig1", "lastletter", "prefix"}) {
    SyntacticResult s = synt_of(fixtures::by_name(name));
    CongruenceResult cong = syntactic_congruence(s.algebra, s.accepting);
    for (auto& [x, y] : cong.rel.pairs) CHECK(x.tag != y.tag);  // no same-tag merges left
    QuotientResult q = quotient(s.algebra, cong.rel);
    for (TypeTag t : all_tags()) CHECK(q.algebra.size(t) == s.algebra.size(t));
  }
}

TEST_CASE("eval_morphism is a homomorphism on forced tags") {
  AlgebraMorphism m = synt_of(fixtures::lastletter()).morphism;
  std::vector<PairedWord> words;
  std::vector<PairedLetter> letters = paired_alphabet("ab");
  for (PairedLetter l : letters) words.push_back({l});
  for (PairedLetter l : letters)
    for (PairedLetter k : letters) words.push_back({l, k});
  for (auto& u : words)
    for (auto& v : words) {
      Classified cu = classify_word(u), cv = classify_word(v);
      if (!cu.well_formed || !cv.well_formed) continue;
      PairedWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      Classified cuv = classify_word(uv);
      auto ct = concat_types(cu.tag, cv.tag);
      if (!cuv.well_formed) {
        CHECK(!ct.has_value());
        continue;
      }
      REQUIRE(ct.has_value());
      El lhs = eval_morphism(m, {uv, *ct});
      El rhs = m.target.product(eval_morphism(m, {u, cu.tag}), eval_morphism(m, {v, cv.tag}));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("recognizer_to_dfa round-trips the relation (membership to length 6)") {
  for (auto& name : {"fig1", "lastletter", "prefix", "samelen-mod2", "nilpotent-finite"}) {
    RelationHandle r = fixtures::by_name(name);
    SyntacticResult s = synt_of(r);
    RelationHandle back = recognizer_to_dfa(s.morphism);
    back.mode = r.mode;
    CHECK_MESSAGE(compare(CompareKind::Equivalent, r, &back).holds, name);
  }
}

TEST_CASE("consolidation: associative table, absorbing zero, unit merging") {
  SyntacticResult unital = synt_of(fixtures::fig1());
  Consolidation cu = consolidate(unital.algebra);
  CHECK(is_associative(cu.sg));
  REQUIRE(cu.sg.zero >= 0);
  for (int x = 0; x < cu.sg.size(); x++) {
    CHECK(cu.sg.mul(x, cu.sg.zero) == cu.sg.zero);
    CHECK(cu.sg.mul(cu.sg.zero, x) == cu.sg.zero);
  }
  // unital: merging the five units forces each element to merge with its
  // unit-promotions; for fig1 that leaves {units} and {(a,b) at ll, ll_lb,
  // ll_bl}, plus the adjoined zero
  CHECK(cu.sg.size() == 3);
  int unit_class = cu.class_of[unital.algebra.flat(unital.algebra.unit(TypeTag::LL))];
  for (TypeTag t : all_tags())
    CHECK(cu.class_of[unital.algebra.flat(unital.algebra.unit(t))] == unit_class);
  CHECK(cu.tag_of[unit_class] == -2);  // merged across tags

  SyntacticResult pos = synt_of(fixtures::counterex_mod2());
  Consolidation cp = consolidate(pos.algebra);
  CHECK(is_associative(cp.sg));
  // positive: nothing to merge
  CHECK(cp.sg.size() == pos.algebra.total() + 1);
  for (El e : pos.algebra.elements())
    CHECK(cp.tag_of[cp.class_of[pos.algebra.flat(e)]] == tag_index(e.tag));
}

TEST_CASE("validate catches broken structures") {
  SyncAlgebra a = synt_of(fixtures::fig1()).algebra;
  SyncAlgebra broken = a;
  // corrupt one product entry: ll.ll table, make it non-associative/non-unital
  auto& tab = broken.prod[tag_index(TypeTag::LL)][tag_index(TypeTag::LL)];
  tab[0] = 1 - tab[0];
  CHECK(!validate(broken).empty());
}
