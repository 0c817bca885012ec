#include "doctest.h"
#include "syncalg/fixtures.hpp"
#include "syncalg/oracle.hpp"

using namespace syncalg;

TEST_CASE("nerode classes of simple relations") {
  OracleConfig cfg;
  cfg.max_total_len = 6;
  NerodeResult uni = nerode_classes(fixtures::universal(), cfg);
  for (TypeTag t : all_tags()) CHECK(uni.count(t) == 1);
  NerodeResult fig = nerode_classes(fixtures::fig1(), cfg);
  CHECK(fig.count(TypeTag::LL) == 2);  // parity
  CHECK(fig.count(TypeTag::LB) == 1);
}

TEST_CASE("nerode classes of lastletter at tag lb") {
  OracleConfig cfg;
  cfg.max_total_len = 6;
  NerodeResult n = nerode_classes(fixtures::lastletter(), cfg);
  CHECK(n.count(TypeTag::LB) == 4);
  auto& wit = n.witnesses[tag_index(TypeTag::LB)];
  // shortest witnesses: eps; a (ending in a); b (alone); ab (length >= 2 ending in b)
  std::vector<PairedWord> expect{
      {}, {{'a', kPad}}, {{'b', kPad}}, {{'a', kPad}, {'b', kPad}}};
  CHECK(wit == expect);
  CHECK(n.count(TypeTag::LL_LB) == 3);
}

TEST_CASE("oracle agrees with the syntactic pipeline on every fixture") {
  OracleConfig cfg;
  cfg.max_total_len = 6;
  for (auto& f : fixtures::catalog()) {
    Variant v = f.handle.mode == Mode::Plus ? Variant::Positive : Variant::Unital;
    SyntacticResult s = syntactic_sync_algebra(f.handle, v);
    VerifyReport rep = verify_syntactic(f.handle, s, cfg);
    CHECK_MESSAGE(rep.ok, f.name, ": ", rep.detail);
  }
}

TEST_CASE("oracle detects a wrong algebra") {
  OracleConfig cfg;
  cfg.max_total_len = 5;
  SyntacticResult wrong = syntactic_sync_algebra(fixtures::universal(), Variant::Unital);
  VerifyReport rep = verify_syntactic(fixtures::fig1(), wrong, cfg);
  CHECK(!rep.ok);
  CHECK(!rep.detail.empty());
}

TEST_CASE("oracle bound is capped") {
  OracleConfig cfg;
  cfg.max_total_len = 13;
  CHECK_THROWS_AS(nerode_classes(fixtures::fig1(), cfg), Error);
}

TEST_CASE("recognizable decomposition") {
  OracleConfig cfg;
  cfg.max_total_len = 6;
  RecDecomposition d = recognizable_decomposition(fixtures::samelen_mod2(), cfg);
  REQUIRE(d.applicable);
  CHECK(d.left_witness.size() == 2);   // even / odd length
  CHECK(d.right_witness.size() == 2);
  // (aa)* x (aa)*  union  a(aa)* x a(aa)*
  CHECK(d.cells == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(!recognizable_decomposition(fixtures::prefix(), cfg).applicable);
  RecDecomposition e = recognizable_decomposition(fixtures::empty(), cfg);
  CHECK(e.applicable);
  CHECK(e.cells.empty());
}

TEST_CASE("composition oracle finds middle witnesses") {
  RelationHandle p = fixtures::prefix();
  CHECK(compose_oracle_member(p, p, "a", "abb"));
  CHECK(!compose_oracle_member(p, p, "ab", "a"));
  // middle word may need to outgrow both sides: u shorter than v shorter than w
  CHECK(compose_oracle_member(p, p, "", "bb"));
}

TEST_CASE("seeded randomness is reproducible and bounded") {
  RelationHandle a = random_relation(42), b = random_relation(42), c = random_relation(43);
  CHECK(print_automaton(a) == print_automaton(b));
  CHECK(print_automaton(a) != print_automaton(c));
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    SyntacticResult s = random_algebra(seed);
    CHECK(s.algebra.total() <= 10);
    CHECK(validate(s.algebra).empty());
  }
}
