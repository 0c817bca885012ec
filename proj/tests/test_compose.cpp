#include "doctest.h"
#include "syncalg/compose.hpp"
#include "syncalg/fixtures.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;

namespace {
RelationHandle via_algebras(const RelationHandle& r, const RelationHandle& s) {
  RelationHandle rp{r.aut, Mode::Plus}, sp{s.aut, Mode::Plus};
  SyntacticResult sr = syntactic_sync_algebra(rp, Variant::Positive);
  SyntacticResult ss = syntactic_sync_algebra(sp, Variant::Positive);
  ComposedRecognizer cr = compose_recognizers(sr.morphism, accepts_pair(r, "", ""),
                                              ss.morphism, accepts_pair(s, "", ""));
  Mode mode = (r.mode == Mode::Star && s.mode == Mode::Star) ? Mode::Star : Mode::Plus;
  return composed_relation(cr, mode);
}
}  // namespace

TEST_CASE("composition tag pairs are non-empty and duplicate-free") {
  for (TypeTag t : all_tags()) {
    auto pairs = composition_tag_pairs(t);
    CHECK(!pairs.empty());
    for (size_t i = 0; i < pairs.size(); i++)
      for (size_t j = i + 1; j < pairs.size(); j++) CHECK(pairs[i] != pairs[j]);
  }
}

TEST_CASE("composed algebra of two syntactic algebras is a valid algebra") {
  SyncAlgebra a =
      syntactic_sync_algebra({fixtures::universal().aut, Mode::Plus}, Variant::Positive).algebra;
  SyncAlgebra c = compose_algebras(a, a);
  CHECK(c.positive);
  CHECK(validate(c).empty());
  // the full powerset construction is guarded against blow-up
  SyncAlgebra p =
      syntactic_sync_algebra({fixtures::prefix().aut, Mode::Plus}, Variant::Positive).algebra;
  CHECK_THROWS_AS(compose_algebras(p, p), Error);
}

TEST_CASE("recognizer-level composition matches automaton-level composition") {
  for (auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"prefix", "prefix"},
           {"same-length", "same-length"},
           {"samelen-mod2", "samelen-mod2"},
           {"prefix", "same-length"},
           {"fig1", "identity"}}) {
    RelationHandle r = fixtures::by_name(x), s = fixtures::by_name(y);
    RelationHandle direct = compose_relations(r, s);
    RelationHandle algebraic = via_algebras(r, s);
    CHECK_MESSAGE(compare(CompareKind::Equivalent, direct, &algebraic).holds, x, " . ", y);
  }
}

TEST_CASE("recognizer-level composition on seeded random pairs") {
  for (uint64_t seed = 1; seed <= 5; seed++) {
    RelationHandle r = random_relation(seed * 2), s = random_relation(seed * 2 + 1);
    RelationHandle direct = compose_relations(r, s);
    RelationHandle algebraic = via_algebras(r, s);
    CHECK_MESSAGE(compare(CompareKind::Equivalent, direct, &algebraic).holds, "seed ", seed);
  }
}
