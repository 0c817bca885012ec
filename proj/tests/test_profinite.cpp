#include "doctest.h"
#include "syncalg/fixtures.hpp"
#include "syncalg/profinite.hpp"
#include "syncalg/syntactic.hpp"

using namespace syncalg;

TEST_CASE("omega-term parsing and printing") {
  OmegaTerm t = parse_term("x (y x)^w");
  CHECK(term_str(t) == "x (y x)^w");
  CHECK(term_variables(t) == std::vector<std::string>{"x", "y"});
  CHECK(term_str(parse_term("x^w")) == "x^w");
  CHECK(term_str(parse_term("(x)^w y")) == "x^w y");
  CHECK_THROWS_AS(parse_term("x^"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
}

TEST_CASE("typings of the group equations") {
  OmegaTerm xwy = parse_term("x^w y"), y = parse_term("y");
  // x must be self-compatible (ll, lb or bl) and x y concatenable; both sides
  // need only be well-typed, not of equal type (equality is read through the
  // dependency relation): x=ll pairs with all 5 tags, x=lb / x=bl with one each
  CHECK(enumerate_typings(xwy, y).size() == 7);
  OmegaTerm yxw = parse_term("y x^w");
  CHECK(enumerate_typings(yxw, y).size() == 7);
  EqualitySet groups = builtin_equality_set("groups");
  CHECK(induced_dependencies(groups).size() == 14);
  CHECK_THROWS_AS(builtin_equality_set("bogus"), Error);
}

TEST_CASE("equality set file parsing") {
  EqualitySet e = parse_equality_set("# comment\nvariety: demo\nx y = y x\nx^w x = x^w\n");
  CHECK(e.name == "demo");
  CHECK(e.equations.size() == 2);
  CHECK(term_str(e.equations[1].first) == "x^w x");
}

TEST_CASE("omega power: idempotent in semigroups and in algebras") {
  FiniteSemigroup z6 = cyclic_group(6);
  OmegaTerm xw = parse_term("x^w");
  for (int x = 0; x < 6; x++) CHECK(eval_term(z6, xw, {{"x", x}}) == 0);  // the identity
  SyncAlgebra a = syntactic_sync_algebra(fixtures::lastletter(), Variant::Unital).algebra;
  for (TypeTag t : {TypeTag::LL, TypeTag::LB, TypeTag::BL})
    for (int i = 0; i < a.size(t); i++) {
      El e = idempotent_power(a, {t, i});
      CHECK(a.product(e, e) == e);
    }
  CHECK_THROWS_AS(idempotent_power(a, {TypeTag::LL_LB, 0}), Error);
}

TEST_CASE("omega power commutes with substitution of powers") {
  FiniteSemigroup s = brandt_b2();
  for (int x = 0; x < s.size(); x++) {
    int e = idempotent_power(s, x);
    // (x^2)^w = x^w since both are the unique idempotent power of x
    CHECK(idempotent_power(s, s.mul(x, x)) == e);
    CHECK(idempotent_power(s, e) == e);
  }
}

TEST_CASE("satisfaction of profinite dependencies on syntactic algebras") {
  SyncAlgebra fig1 = syntactic_sync_algebra(fixtures::fig1(), Variant::Unital).algebra;
  for (const ProfiniteDependency& d : induced_dependencies(builtin_equality_set("groups")))
    CHECK(satisfies(fig1, d).holds);

  RelationHandle cx = fixtures::counterex_mod2();
  SyncAlgebra pos = syntactic_sync_algebra(cx, Variant::Positive).algebra;
  bool some_failed = false;
  for (const ProfiniteDependency& d : induced_dependencies(builtin_equality_set("groups"))) {
    auto res = satisfies(pos, d);
    if (!res.holds) {
      some_failed = true;
      REQUIRE(res.counterexample.has_value());
      // counterexample re-evaluates to a genuinely non-dependent pair
      El lhs = eval_term(pos, d.lhs, d.typing, *res.counterexample);
      El rhs = eval_term(pos, d.rhs, d.typing, *res.counterexample);
      CHECK(!pos.dep(lhs, rhs));
    }
  }
  CHECK(some_failed);
}

TEST_CASE("satisfaction of equations in plain semigroups") {
  OmegaTerm lhs = parse_term("x^w x"), rhs = parse_term("x^w");
  CHECK(!satisfies_eq(cyclic_group(2), lhs, rhs).holds);
  CHECK(satisfies_eq(left_zero_semigroup(3), lhs, rhs).holds);
  CHECK(satisfies_all_eq(cyclic_group(5), builtin_equality_set("groups")).holds);
  CHECK(satisfies_all_eq(cyclic_group(5), builtin_equality_set("commutative")).holds);
  CHECK(!satisfies_all_eq(brandt_b2(), builtin_equality_set("commutative")).holds);
  CHECK(satisfies_all_eq(brandt_b2(), builtin_equality_set("aperiodic")).holds);
}

TEST_CASE("ill-typed omega terms are rejected") {
  SyncAlgebra a = syntactic_sync_algebra(fixtures::fig1(), Variant::Unital).algebra;
  OmegaTerm xw = parse_term("x^w");
  Typing bad{{"x", TypeTag::LL_LB}};
  CHECK(!term_tag(xw, bad).has_value());
  CHECK_THROWS_AS(eval_term(a, xw, bad, {{"x", El{TypeTag::LL_LB, 0}}}), Error);
}
