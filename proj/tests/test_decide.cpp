#include "doctest.h"
#include "syncalg/decide.hpp"
#include "syncalg/fixtures.hpp"

using namespace syncalg;

TEST_CASE("group-relation grid: spot checks") {
  // yes iff 0 is in neither residue set
  CHECK(decide_monoid_lifting(fixtures::zpq(2, 3, {1}, {1, 2}), builtin_variety("groups"))
            .is_v_relation);
  CHECK(!decide_monoid_lifting(fixtures::zpq(2, 3, {0}, {1}), builtin_variety("groups"))
             .is_v_relation);
  CHECK(!decide_monoid_lifting(fixtures::zpq(2, 3, {1}, {0, 2}), builtin_variety("groups"))
             .is_v_relation);
  CHECK(decide_monoid_lifting(fixtures::zpq(2, 3, {}, {}), builtin_variety("groups"))
            .is_v_relation);
}

TEST_CASE("variety table on fixtures") {
  VarietySpec groups = builtin_variety("groups");
  VarietySpec aperiodic = builtin_variety("aperiodic");
  VarietySpec commutative = builtin_variety("commutative");
  CHECK(decide_monoid_lifting(fixtures::fig1(), groups).is_v_relation);
  CHECK(!decide_monoid_lifting(fixtures::fig1(), aperiodic).is_v_relation);
  CHECK(decide_monoid_lifting(fixtures::prefix(), aperiodic).is_v_relation);
  CHECK(!decide_monoid_lifting(fixtures::prefix(), groups).is_v_relation);
  CHECK(decide_monoid_lifting(fixtures::samelen_mod2(), commutative).is_v_relation);
  CHECK(decide_monoid_lifting(fixtures::samelen_mod2(), groups).is_v_relation);
  CHECK_THROWS_AS(decide_monoid_lifting(fixtures::fig1(), builtin_variety("nilpotent")), Error);
}

TEST_CASE("dependency route: loctriv and nilpotent") {
  CHECK(decide_positive_dependencies(fixtures::loctriv_sample(), builtin_variety("loctriv"))
            .is_v_relation);
  CHECK(!decide_positive_dependencies(fixtures::samelen_mod2(), builtin_variety("loctriv"))
             .is_v_relation);
  CHECK(decide_positive_dependencies(fixtures::nilpotent_finite(), builtin_variety("nilpotent"))
            .is_v_relation);
  CHECK(decide_positive_dependencies(fixtures::cofinite(), builtin_variety("nilpotent"))
            .is_v_relation);
  Verdict v = decide_positive_dependencies(fixtures::fig1(), builtin_variety("nilpotent"));
  CHECK(!v.is_v_relation);
  CHECK(!v.evidence.empty());
  CHECK(v.sound_only);  // nilpotent closure not backed by an exactness theorem here
}

TEST_CASE("henckell closure: triviality matches satisfaction (sizes <= 3)") {
  for (auto& name : builtin_variety_names()) {
    EqualitySet e = builtin_equality_set(name);
    for (int n = 1; n <= 3; n++)
      for (const FiniteSemigroup& s : all_semigroups(n)) {
        HenckellClosure cl = henckell_closure(s, e);
        CHECK(cl.trivial() == satisfies_all_eq(s, e).holds);
      }
  }
}

TEST_CASE("henckell closure on the two-element group is the full powerset") {
  HenckellClosure cl = henckell_closure(cyclic_group(2), builtin_equality_set("aperiodic"));
  CHECK(!cl.trivial());
  CHECK(cl.contains(0b11));
  HenckellClosure triv = henckell_closure(left_zero_semigroup(3), builtin_equality_set("aperiodic"));
  CHECK(triv.trivial());
}

TEST_CASE("henckell closure is monotone in the equality set") {
  EqualitySet weak = builtin_equality_set("loctriv-weak");
  EqualitySet strong = builtin_equality_set("loctriv");
  EqualitySet both = weak;
  both.equations.insert(both.equations.end(), strong.equations.begin(), strong.equations.end());
  for (const FiniteSemigroup& s : all_semigroups(3)) {
    HenckellClosure small = henckell_closure(s, weak);
    HenckellClosure big = henckell_closure(s, both);
    for (ElementSet m : small.maximal) CHECK(big.contains(m));
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(henckell_closure(cyclic_group(25), builtin_equality_set("aperiodic")), Error);
  try {
    henckell_closure(cyclic_group(25), builtin_equality_set("aperiodic"));
  } catch (const Error& e) {
    CHECK(e.code == "SizeGuardExceeded");
  }
}

TEST_CASE("pointlike route agrees with lifting for aperiodic on fixtures") {
  VarietySpec ap = builtin_variety("aperiodic");
  for (auto& name : {"fig1", "prefix", "same-length", "samelen-mod2", "lastletter",
                     "counterex-mod-p", "nilpotent-finite", "universal", "identity"}) {
    RelationHandle r = fixtures::by_name(name);
    bool lift = decide_monoid_lifting(r, ap).is_v_relation;
    Verdict pl = decide_pointlikes(r, ap);
    CHECK_MESSAGE(pl.is_v_relation == lift, name);
    CHECK(!pl.sound_only);  // aperiodic closure is trusted
  }
}

TEST_CASE("classify covers every builtin variety") {
  auto rows = classify(fixtures::fig1());
  bool saw_groups_yes = false, saw_aperiodic_no = false;
  for (auto& row : rows) {
    if (row.variety == "groups" && row.method == Method::MonoidLifting)
      saw_groups_yes = row.verdict.is_v_relation;
    if (row.variety == "aperiodic" && row.method == Method::MonoidLifting)
      saw_aperiodic_no = !row.verdict.is_v_relation;
  }
  CHECK(saw_groups_yes);
  CHECK(saw_aperiodic_no);
}
