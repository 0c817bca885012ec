#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "syncalg/core.hpp"

using namespace syncalg;

TEST_CASE("type concatenation is partial with exactly nine compatible pairs") {
  int defined = 0;
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (compatible(s, t)) defined++;
  CHECK(defined == 9);
  // compatible(s, t) iff t picks up where s ends: last(s) = first(t) or s pure ll
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags()) {
      bool expect = (last_letter_type(s) == first_letter_type(t) &&
                     self_compatible(first_letter_type(t))) ||
                    last_letter_type(s) == TypeTag::LL;
      // arrow types never continue into a different one-sided direction
      CHECK(compatible(s, t) == expect);
      if (compatible(s, t)) {
        auto r = concat_types(s, t);
        REQUIRE(r.has_value());
        CHECK(first_letter_type(*r) == first_letter_type(s));
        CHECK(last_letter_type(*r) == last_letter_type(t));
      } else {
        CHECK(!concat_types(s, t).has_value());
      }
    }
}

TEST_CASE("concatenation of types is associative where defined") {
  for (TypeTag a : all_tags())
    for (TypeTag b : all_tags())
      for (TypeTag c : all_tags()) {
        auto ab = concat_types(a, b);
        auto bc = concat_types(b, c);
        std::optional<TypeTag> left = ab ? concat_types(*ab, c) : std::optional<TypeTag>{};
        std::optional<TypeTag> right = bc ? concat_types(a, *bc) : std::optional<TypeTag>{};
        // both sides defined on the same triples, with equal value
        CHECK(left.has_value() == right.has_value());
        if (left) CHECK(*left == *right);
      }
}

TEST_CASE("paired alphabet over k letters has k^2 + 2k letters, canonical order") {
  auto pa = paired_alphabet("ab");
  CHECK(pa.size() == 8);
  CHECK(std::is_sorted(pa.begin(), pa.end()));
  for (PairedLetter l : pa) CHECK(!(l.left == kPad && l.right == kPad));
  CHECK(paired_alphabet("a").size() == 3);
}

TEST_CASE("encode/classify round-trip for all pairs up to total length 6") {
  std::vector<std::string> words{""};
  for (size_t i = 0; i < words.size(); i++)
    if (words[i].size() < 6)
      for (char c : {'a', 'b'}) words.push_back(words[i] + c);
  for (auto& u : words)
    for (auto& v : words) {
      if (u.size() + v.size() > 6) continue;
      TypedWord enc = encode_pair(u, v);
      Classified c = classify_word(enc.word);
      CHECK(c.well_formed);
      CHECK(c.left == u);
      CHECK(c.right == v);
      if (!enc.word.empty()) CHECK(c.tag == enc.tag);
    }
}

TEST_CASE("classify rejects ill-formed words") {
  // padding must not resume: (a,_)(a,a) is ill-formed
  CHECK(!classify_word({{'a', kPad}, {'a', 'a'}}).well_formed);
  CHECK(!classify_word({{kPad, 'a'}, {'a', 'a'}}).well_formed);
  // both directions of padding in one word
  CHECK(!classify_word({{'a', kPad}, {kPad, 'a'}}).well_formed);
  CHECK(classify_word({{'a', 'a'}, {'a', kPad}}).well_formed);
}

TEST_CASE("free algebra tags: forced vs promise tags") {
  PairedWord pure{{'a', 'a'}};
  auto tags = free_algebra_tags(pure, /*positive=*/false);
  // a pure word can stand for ll and both arrow types in the unital setting
  CHECK(tags.size() == 3);
  CHECK(std::find(tags.begin(), tags.end(), TypeTag::LL) != tags.end());
  CHECK(free_algebra_tags(pure, /*positive=*/true) ==
        std::vector<TypeTag>{TypeTag::LL});
  PairedWord rpad{{'a', kPad}};
  auto rtags = free_algebra_tags(rpad, false);
  CHECK(std::find(rtags.begin(), rtags.end(), TypeTag::LB) != rtags.end());
  CHECK(std::find(rtags.begin(), rtags.end(), TypeTag::LL_LB) != rtags.end());
}

TEST_CASE("closed subsets: closure is extensive, monotone, idempotent") {
  DependentSet ds;
  ds.names[tag_index(TypeTag::LB)] = {"x", "y"};
  ds.names[tag_index(TypeTag::BL)] = {"z"};
  ds.add_dep({TypeTag::LB, 0}, {TypeTag::BL, 0});
  ClosedSubset c = ClosedSubset::empty_like(ds);
  c = close_subset(ds, {{TypeTag::LB, 0}});
  CHECK(c.contains({TypeTag::LB, 0}));   // extensive
  CHECK(c.contains({TypeTag::BL, 0}));   // dep-saturated
  CHECK(!c.contains({TypeTag::LB, 1}));
  ClosedSubset bigger = close_subset(ds, {{TypeTag::LB, 0}, {TypeTag::LB, 1}});
  for (El e : c.elements()) CHECK(bigger.contains(e));  // monotone
  ClosedSubset again = close_subset(ds, c.elements());
  CHECK(again.members == c.members);  // idempotent
  CHECK(is_closed(ds, c));
}

TEST_CASE("dependent set: same-tag dep is equality") {
  DependentSet ds;
  ds.names[tag_index(TypeTag::LB)] = {"x", "y"};
  ds.add_dep({TypeTag::LB, 0}, {TypeTag::LB, 1});
  CHECK(!ds.validate().empty());
}
