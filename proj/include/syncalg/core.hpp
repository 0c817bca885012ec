#pragma once

// Core type system of synchronous words: the paired alphabet, the five word
// types and their partial concatenation, well-formed encoding/decoding of word
// pairs, dependent sets and closed subsets.

#include <array>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syncalg {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

// ---------------------------------------------------------------------------
// Types

// The five types of well-formed words. LL, LB, BL are the self-compatible
// ones (they double as letter-types); LL_LB and LL_BL are the mixed types
// ll->lb and ll->bl.
enum class TypeTag : std::uint8_t { LL = 0, LB = 1, BL = 2, LL_LB = 3, LL_BL = 4 };

inline constexpr int kNumTags = 5;

inline constexpr std::array<TypeTag, 5> all_tags() {
  return {TypeTag::LL, TypeTag::LB, TypeTag::BL, TypeTag::LL_LB, TypeTag::LL_BL};
}

inline int tag_index(TypeTag t) { return static_cast<int>(t); }

inline const char* tag_name(TypeTag t) {
  switch (t) {
    case TypeTag::LL: return "ll";
    case TypeTag::LB: return "lb";
    case TypeTag::BL: return "bl";
    case TypeTag::LL_LB: return "ll_lb";
    case TypeTag::LL_BL: return "ll_bl";
  }
  return "?";
}

inline std::optional<TypeTag> parse_tag(const std::string& s) {
  for (TypeTag t : all_tags())
    if (s == tag_name(t)) return t;
  return std::nullopt;
}

// First/last letter-type of a word of the given type (as one of LL, LB, BL).
inline TypeTag first_letter_type(TypeTag t) {
  switch (t) {
    case TypeTag::LL:
    case TypeTag::LL_LB:
    case TypeTag::LL_BL: return TypeTag::LL;
    case TypeTag::LB: return TypeTag::LB;
    case TypeTag::BL: return TypeTag::BL;
  }
  return TypeTag::LL;
}

inline TypeTag last_letter_type(TypeTag t) {
  switch (t) {
    case TypeTag::LL: return TypeTag::LL;
    case TypeTag::LB:
    case TypeTag::LL_LB: return TypeTag::LB;
    case TypeTag::BL:
    case TypeTag::LL_BL: return TypeTag::BL;
  }
  return TypeTag::LL;
}

inline bool self_compatible(TypeTag t) {
  return t == TypeTag::LL || t == TypeTag::LB || t == TypeTag::BL;
}

// Type with the given first/last letter-types, if any such type exists.
inline std::optional<TypeTag> make_tag(TypeTag first, TypeTag last) {
  for (TypeTag t : all_tags())
    if (first_letter_type(t) == first && last_letter_type(t) == last) return t;
  return std::nullopt;
}

// a->b is compatible with b'->c iff b = b' or b = ll.
inline bool compatible(TypeTag s, TypeTag t) {
  TypeTag b = last_letter_type(s);
  return b == first_letter_type(t) || b == TypeTag::LL;
}

// Partial concatenation of types: (a->b)(b'->c) = a->c when compatible.
inline std::optional<TypeTag> concat_types(TypeTag s, TypeTag t) {
  if (!compatible(s, t)) return std::nullopt;
  return make_tag(first_letter_type(s), last_letter_type(t));
}

// ---------------------------------------------------------------------------
// Paired letters and words

inline constexpr char kPad = '_';

struct PairedLetter {
  char left;
  char right;

  bool valid() const { return left != kPad || right != kPad; }
  bool operator==(const PairedLetter&) const = default;
  // Canonical order: by left then right component, pad sorted last.
  friend bool operator<(PairedLetter a, PairedLetter b) {
    auto rank = [](char c) { return c == kPad ? 0x7fff : static_cast<int>(static_cast<unsigned char>(c)); };
    if (rank(a.left) != rank(b.left)) return rank(a.left) < rank(b.left);
    return rank(a.right) < rank(b.right);
  }
};

inline TypeTag letter_type(PairedLetter l) {
  if (l.left != kPad && l.right != kPad) return TypeTag::LL;
  if (l.right == kPad) return TypeTag::LB;
  return TypeTag::BL;
}

inline std::string letter_str(PairedLetter l) {
  return std::string("(") + l.left + "," + l.right + ")";
}

using PairedWord = std::vector<PairedLetter>;

inline std::string word_str(const PairedWord& w) {
  std::string out;
  for (PairedLetter l : w) out += letter_str(l);
  return out.empty() ? "eps" : out;
}

// All letters of the paired alphabet over a base alphabet, canonical order.
inline std::vector<PairedLetter> paired_alphabet(const std::string& sigma) {
  std::vector<PairedLetter> out;
  for (char a : sigma)
    for (char b : sigma) out.push_back({a, b});
  for (char a : sigma) out.push_back({a, kPad});
  for (char a : sigma) out.push_back({kPad, a});
  std::sort(out.begin(), out.end());
  return out;
}

// `(a,b)(a,_)(b,_)`, whitespace between pairs ignored.
inline PairedWord parse_paired_word(const std::string& text) {
  PairedWord out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(' || i + 4 >= text.size() || text[i + 2] != ',' || text[i + 4] != ')')
      throw ParseError("expected (x,y) at position " + std::to_string(i) + " in '" + text + "'");
    PairedLetter l{text[i + 1], text[i + 3]};
    if (!l.valid()) throw ParseError("letter (_,_) is not in the paired alphabet");
    out.push_back(l);
    i += 5;
    skip_ws();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typed words, encoding and classification

struct TypedWord {
  PairedWord word;  // well-formed
  TypeTag tag;      // canonical tag; the empty word is treated as AnyUnit

  bool empty() const { return word.empty(); }
};

// Positionwise convolution with padding on the shorter side. The empty pair
// encodes to the empty word with canonical display tag LL (all consumers treat
// the empty word as AnyUnit).
inline TypedWord encode_pair(const std::string& u, const std::string& v) {
  PairedWord w;
  size_t n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; i++)
    w.push_back({i < u.size() ? u[i] : kPad, i < v.size() ? v[i] : kPad});
  TypeTag tag = TypeTag::LL;
  if (!w.empty()) {
    auto t = make_tag(letter_type(w.front()), letter_type(w.back()));
    tag = *t;  // convolutions are always well-formed
  }
  return {std::move(w), tag};
}

struct Classified {
  bool well_formed = false;
  bool empty = false;  // well-formed empty word: AnyUnit (any of the five tags)
  TypeTag tag = TypeTag::LL;
  std::string left, right;  // decoded pair
};

// Decides well-formedness (padding, once started on a track, persists) and
// decodes the pair; the typemap value 0 corresponds to !well_formed.
inline Classified classify_word(const PairedWord& w) {
  Classified c;
  bool left_padded = false, right_padded = false;
  for (PairedLetter l : w) {
    if (!l.valid()) return c;
    if (l.left == kPad) left_padded = true;
    else if (left_padded) return c;
    if (l.right == kPad) right_padded = true;
    else if (right_padded) return c;
    if (l.left != kPad) c.left += l.left;
    if (l.right != kPad) c.right += l.right;
  }
  c.well_formed = true;
  if (w.empty()) { c.empty = true; return c; }
  c.tag = *make_tag(letter_type(w.front()), letter_type(w.back()));
  return c;
}

// Tags an element with underlying word `w` may carry in the free algebra.
// Unital: components of SyncSigma overlap (a pure-ll word also lives at
// ll->lb and ll->bl, etc., and the empty word at all five tags). Positive:
// components are strict (+ instead of *), so only the forced tag remains.
inline std::vector<TypeTag> free_algebra_tags(const PairedWord& w, bool positive) {
  Classified c = classify_word(w);
  if (!c.well_formed) return {};
  if (c.empty) {
    if (positive) return {};
    return {all_tags().begin(), all_tags().end()};
  }
  if (positive) return {c.tag};
  switch (c.tag) {
    case TypeTag::LL: return {TypeTag::LL, TypeTag::LL_LB, TypeTag::LL_BL};
    case TypeTag::LB: return {TypeTag::LB, TypeTag::LL_LB};
    case TypeTag::BL: return {TypeTag::BL, TypeTag::LL_BL};
    default: return {c.tag};
  }
}

// ---------------------------------------------------------------------------
// Typed element references, dependent sets, closed subsets

// Reference to an element of a typed carrier (index within its tag's list).
struct El {
  TypeTag tag;
  int idx;
  bool operator==(const El&) const = default;
  friend bool operator<(El a, El b) {
    if (a.tag != b.tag) return tag_index(a.tag) < tag_index(b.tag);
    return a.idx < b.idx;
  }
};

struct DependentSet {
  std::array<std::vector<std::string>, kNumTags> names;
  std::set<std::pair<El, El>> dep;  // stored symmetric, reflexive pairs omitted

  int size(TypeTag t) const { return static_cast<int>(names[tag_index(t)].size()); }
  int total_size() const {
    int n = 0;
    for (TypeTag t : all_tags()) n += size(t);
    return n;
  }
  bool in_range(El e) const { return e.idx >= 0 && e.idx < size(e.tag); }
  bool dep_related(El a, El b) const {
    if (a == b) return true;
    return dep.count({a, b}) > 0 || dep.count({b, a}) > 0;
  }
  void add_dep(El a, El b) {
    if (!(a == b)) dep.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<El> elements() const {
    std::vector<El> out;
    for (TypeTag t : all_tags())
      for (int i = 0; i < size(t); i++) out.push_back({t, i});
    return out;
  }

  // Same-tag dependency must imply equality.
  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    for (auto& [a, b] : dep) {
      if (!in_range(a) || !in_range(b)) bad.push_back("dep pair out of range");
      else if (a.tag == b.tag && a.idx != b.idx)
        bad.push_back("same-tag dependency between distinct elements " +
                      names[tag_index(a.tag)][a.idx] + " and " + names[tag_index(b.tag)][b.idx]);
    }
    return bad;
  }
};

struct ClosedSubset {
  std::array<std::vector<bool>, kNumTags> members;

  static ClosedSubset empty_like(const DependentSet& d) {
    ClosedSubset c;
    for (TypeTag t : all_tags()) c.members[tag_index(t)].assign(d.size(t), false);
    return c;
  }
  bool contains(El e) const {
    auto& v = members[tag_index(e.tag)];
    return e.idx >= 0 && e.idx < static_cast<int>(v.size()) && v[e.idx];
  }
  void insert(El e) { members[tag_index(e.tag)][e.idx] = true; }
  std::vector<El> elements() const {
    std::vector<El> out;
    for (TypeTag t : all_tags())
      for (int i = 0; i < static_cast<int>(members[tag_index(t)].size()); i++)
        if (members[tag_index(t)][i]) out.push_back({t, i});
    return out;
  }
  bool operator==(const ClosedSubset&) const = default;
};

// Smallest superset of `raw` saturated under the reflexive-symmetric-
// transitive closure of dep. Monotone, extensive, idempotent.
inline ClosedSubset close_subset(const DependentSet& d, const std::vector<El>& raw) {
  ClosedSubset c = ClosedSubset::empty_like(d);
  std::vector<El> stack;
  for (El e : raw)
    if (!c.contains(e)) { c.insert(e); stack.push_back(e); }
  while (!stack.empty()) {
    El e = stack.back();
    stack.pop_back();
    for (auto& [a, b] : d.dep) {
      El other;
      if (a == e) other = b;
      else if (b == e) other = a;
      else continue;
      if (!c.contains(other)) { c.insert(other); stack.push_back(other); }
    }
  }
  return c;
}

inline bool is_closed(const DependentSet& d, const ClosedSubset& c) {
  for (auto& [a, b] : d.dep)
    if (c.contains(a) != c.contains(b)) return false;
  return true;
}

}  // namespace syncalg
