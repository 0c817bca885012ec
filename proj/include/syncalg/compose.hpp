#pragma once

// Composition of positive synchronous algebras (A ⋄ B) and of recognizers.
// Elements are sets of track-value pairs: the first component is the value of
// the (u,v)-track, the second of the (v,w)-track, where v is the middle word.
// A track value is either a proper algebra element or the marker "one"
// (the track contributes no letters). Track products: one·one = one,
// x·one = x, one·x undefined (a track cannot restart after being empty),
// x·y = algebra product when tags are compatible.

#include <map>

#include "syncalg/algebra.hpp"

namespace syncalg {

struct TrackVal {
  bool one = false;
  El el{TypeTag::LL, -1};
  bool operator==(const TrackVal& o) const { return one == o.one && (one || el == o.el); }
  bool operator<(const TrackVal& o) const {
    if (one != o.one) return one < o.one;
    if (one) return false;
    return el < o.el;
  }
};
inline TrackVal track_one() { return {true, {TypeTag::LL, -1}}; }
inline TrackVal track_val(El e) { return {false, e}; }

inline std::optional<TrackVal> track_product(const SyncAlgebra& alg, TrackVal x, TrackVal y) {
  if (y.one) return x;                     // covers one·one and val·one
  if (x.one) return std::nullopt;          // one·val: the track cannot restart
  auto p = alg.try_product(x.el, y.el);
  if (!p) return std::nullopt;
  return track_val(*p);
}

using PairVal = std::pair<TrackVal, TrackVal>;
using PairSet = std::vector<PairVal>;  // sorted, unique

inline void pairset_insert(PairSet& s, const PairVal& p) {
  auto it = std::lower_bound(s.begin(), s.end(), p);
  if (it == s.end() || !(*it == p)) s.insert(it, p);
}

inline std::optional<PairVal> pairval_product(const SyncAlgebra& a, const SyncAlgebra& b,
                                              const PairVal& x, const PairVal& y) {
  auto pa = track_product(a, x.first, y.first);
  if (!pa) return std::nullopt;
  auto pb = track_product(b, x.second, y.second);
  if (!pb) return std::nullopt;
  return PairVal{*pa, *pb};
}

inline PairSet pairset_product(const SyncAlgebra& a, const SyncAlgebra& b, const PairSet& x,
                               const PairSet& y) {
  PairSet out;
  for (auto& p : x)
    for (auto& q : y)
      if (auto r = pairval_product(a, b, p, q)) pairset_insert(out, *r);
  return out;
}

// Track-tag pairs achievable at a given output tag (nullopt = the track is
// empty). Derived from the possible stopping points of the middle word
// relative to the output's padding blocks, including middles that outlive
// both tracks.
inline std::vector<std::pair<std::optional<TypeTag>, std::optional<TypeTag>>>
composition_tag_pairs(TypeTag tau) {
  using OT = std::optional<TypeTag>;
  const OT LL = TypeTag::LL, LB = TypeTag::LB, BL = TypeTag::BL, LL_LB = TypeTag::LL_LB,
           LL_BL = TypeTag::LL_BL, ONE = std::nullopt;
  switch (tau) {
    case TypeTag::LL:
      return {{LB, BL}, {LL_LB, LL_BL}, {LL, LL}, {LL_BL, LL_LB}};
    case TypeTag::LB:
      return {{LB, ONE}, {LL_LB, LB}, {LL, LB}, {LL_BL, LB}};
    case TypeTag::BL:
      return {{ONE, BL}, {BL, LL_BL}, {BL, LL}, {BL, LL_LB}};
    case TypeTag::LL_LB:
      return {{LB, BL}, {LL_LB, LL_BL}, {LL_LB, LL}, {LL_LB, LL_LB}, {LL, LL_LB}, {LL_BL, LL_LB}};
    case TypeTag::LL_BL:
      return {{LB, BL}, {LL_LB, LL_BL}, {LL, LL_BL}, {LL_BL, LL_BL}, {LL_BL, LL}, {LL_BL, LL_LB}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Full powerset composition A ⋄ B (used for small algebras; the recognizer
// route below works inside the generated subalgebra instead).

inline SyncAlgebra compose_algebras(const SyncAlgebra& a, const SyncAlgebra& b,
                                    int guard_bits = 12) {
  if (!a.positive || !b.positive)
    throw Error("VariantMismatch", "composition is defined for positive algebras");
  std::array<std::vector<PairVal>, kNumTags> universe;
  for (TypeTag t : all_tags()) {
    for (auto& [sa, sb] : composition_tag_pairs(t)) {
      std::vector<TrackVal> as, bs;
      if (!sa) as.push_back(track_one());
      else
        for (int i = 0; i < a.size(*sa); i++) as.push_back(track_val({*sa, i}));
      if (!sb) bs.push_back(track_one());
      else
        for (int i = 0; i < b.size(*sb); i++) bs.push_back(track_val({*sb, i}));
      for (auto& ta : as)
        for (auto& tb : bs) universe[tag_index(t)].push_back({ta, tb});
    }
    if (static_cast<int>(universe[tag_index(t)].size()) > guard_bits)
      throw Error("SizeGuardExceeded",
                  "composition universe has " + std::to_string(universe[tag_index(t)].size()) +
                      " pairs at tag " + tag_name(t));
  }
  SyncAlgebra c;
  c.positive = true;
  auto pair_str = [&](const PairVal& p) {
    auto side = [&](const SyncAlgebra& alg, const TrackVal& v) {
      return v.one ? std::string("-") : std::string(tag_name(v.el.tag)) + ":" + alg.name(v.el);
    };
    return "<" + side(a, p.first) + "|" + side(b, p.second) + ">";
  };
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    size_t u = universe[ti].size();
    for (size_t mask = 0; mask < (size_t{1} << u); mask++) {
      std::string nm = "{";
      for (size_t i = 0; i < u; i++)
        if (mask >> i & 1) {
          if (nm.size() > 1) nm += ",";
          nm += pair_str(universe[ti][i]);
        }
      c.ds.names[ti].push_back(nm + "}");
    }
  }
  auto mask_of = [&](TypeTag t, const PairSet& s) {
    size_t mask = 0;
    for (auto& p : s) {
      auto& u = universe[tag_index(t)];
      auto it = std::find(u.begin(), u.end(), p);
      if (it == u.end()) throw Error("Internal", "composition product left the universe");
      mask |= size_t{1} << (it - u.begin());
    }
    return mask;
  };
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (auto rt = concat_types(s, t)) {
        auto& tab = c.prod[tag_index(s)][tag_index(t)];
        tab.resize(static_cast<size_t>(c.size(s)) * c.size(t));
        for (int i = 0; i < c.size(s); i++)
          for (int j = 0; j < c.size(t); j++) {
            PairSet x, y;
            for (size_t k = 0; k < universe[tag_index(s)].size(); k++)
              if (static_cast<size_t>(i) >> k & 1) x.push_back(universe[tag_index(s)][k]);
            for (size_t k = 0; k < universe[tag_index(t)].size(); k++)
              if (static_cast<size_t>(j) >> k & 1) y.push_back(universe[tag_index(t)][k]);
            tab[i * c.size(t) + j] = static_cast<int>(mask_of(*rt, pairset_product(a, b, x, y)));
          }
      }
  // dependency relation is equality: nothing to add
  return c;
}

// ---------------------------------------------------------------------------
// Composed recognizer. Generator images are saturated with "extension"
// middles (the middle word outliving both the input and the output at the end
// of the word); misplaced extensions or restarted tracks are killed by tag
// compatibility on one of the two tracks.

struct ComposedRecognizer {
  AlgebraMorphism chi;     // into the generated subalgebra of A ⋄ B
  bool eps_pair = false;   // whether (eps, eps) belongs to the composition
};

inline ComposedRecognizer compose_recognizers(const AlgebraMorphism& phi, bool eps_in_r,
                                              const AlgebraMorphism& psi, bool eps_in_s) {
  if (phi.alphabet != psi.alphabet)
    throw Error("AlphabetMismatch", phi.alphabet + " vs " + psi.alphabet);
  const SyncAlgebra& a = phi.target;
  const SyncAlgebra& b = psi.target;
  if (!a.positive || !b.positive)
    throw Error("VariantMismatch", "compose_recognizers needs positive recognizers");
  if (!phi.accepting || !psi.accepting)
    throw Error("NoAcceptingSet", "compose_recognizers needs accepting sets");
  const std::string& sigma = phi.alphabet;

  // generator image for output letter (x,z)
  auto generator_image = [&](PairedLetter out) {
    PairSet s;
    for (char y : sigma + kPad) {
      TrackVal ta = (out.left == kPad && y == kPad)
                        ? track_one()
                        : track_val(phi.image({out.left, y}));
      TrackVal tb = (y == kPad && out.right == kPad)
                        ? track_one()
                        : track_val(psi.image({y, out.right}));
      pairset_insert(s, {ta, tb});
    }
    // extension fixpoint: append middle letters beyond both tracks
    bool grew = true;
    while (grew) {
      grew = false;
      PairSet cur = s;
      for (auto& p : cur)
        for (char y : sigma) {
          if (p.first.one || p.second.one) continue;
          auto na = a.try_product(p.first.el, phi.image({kPad, y}));
          if (!na) continue;
          auto nb = b.try_product(p.second.el, psi.image({y, kPad}));
          if (!nb) continue;
          PairVal q{track_val(*na), track_val(*nb)};
          size_t before = s.size();
          pairset_insert(s, q);
          if (s.size() != before) grew = true;
        }
    }
    return s;
  };

  // generated subalgebra: close the generator images under products
  std::array<std::map<PairSet, int>, kNumTags> ids;
  std::array<std::vector<PairSet>, kNumTags> sets;
  std::array<std::vector<PairedWord>, kNumTags> witness;
  std::deque<El> todo;
  auto intern = [&](TypeTag t, const PairSet& s, const PairedWord& w) {
    int ti = tag_index(t);
    auto [it, fresh] = ids[ti].emplace(s, static_cast<int>(ids[ti].size()));
    if (fresh) {
      sets[ti].push_back(s);
      witness[ti].push_back(w);
      todo.push_back({t, it->second});
    }
    return it->second;
  };
  std::vector<PairedLetter> letters = paired_alphabet(sigma);
  std::map<PairedLetter, PairSet> gen_sets;
  for (PairedLetter l : letters) {
    gen_sets[l] = generator_image(l);
    intern(letter_type(l), gen_sets[l], {l});
  }
  while (!todo.empty()) {
    El e = todo.front();
    todo.pop_front();
    PairSet s = sets[tag_index(e.tag)][e.idx];
    PairedWord w = witness[tag_index(e.tag)][e.idx];
    for (PairedLetter l : letters) {
      auto rt = concat_types(e.tag, letter_type(l));
      if (!rt) continue;
      PairedWord wl = w;
      wl.push_back(l);
      intern(*rt, pairset_product(a, b, s, gen_sets[l]), wl);
    }
  }

  ComposedRecognizer out;
  SyncAlgebra& c = out.chi.target;
  c.positive = true;
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    for (size_t i = 0; i < sets[ti].size(); i++) c.ds.names[ti].push_back(word_str(witness[ti][i]));
  }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (auto rt = concat_types(s, t)) {
        auto& tab = c.prod[tag_index(s)][tag_index(t)];
        tab.resize(static_cast<size_t>(c.size(s)) * c.size(t));
        for (int i = 0; i < c.size(s); i++)
          for (int j = 0; j < c.size(t); j++) {
            PairSet p = pairset_product(a, b, sets[tag_index(s)][i], sets[tag_index(t)][j]);
            auto it = ids[tag_index(*rt)].find(p);
            if (it == ids[tag_index(*rt)].end())
              throw Error("Internal", "generated composition subalgebra not product-closed");
            tab[i * c.size(t) + j] = it->second;
          }
      }
  out.chi.alphabet = sigma;
  for (PairedLetter l : letters)
    out.chi.gen[l] = ids[tag_index(letter_type(l))].at(gen_sets[l]);
  // accepting: some pair realizes membership on both sides (an empty track
  // stands for the pair (eps, eps) on that side)
  ClosedSubset acc = ClosedSubset::empty_like(c.ds);
  auto pair_accepts = [&](const PairVal& p) {
    bool left = p.first.one ? eps_in_r : phi.accepting->contains(p.first.el);
    bool right = p.second.one ? eps_in_s : psi.accepting->contains(p.second.el);
    return left && right;
  };
  for (TypeTag t : all_tags())
    for (size_t i = 0; i < sets[tag_index(t)].size(); i++)
      for (auto& p : sets[tag_index(t)][i])
        if (pair_accepts(p)) acc.insert({t, static_cast<int>(i)});
  out.chi.accepting = acc;

  // (eps, eps) in the composition: either both inputs contain it, or some
  // non-empty middle v has (eps,v) in R and (v,eps) in S
  out.eps_pair = eps_in_r && eps_in_s;
  if (!out.eps_pair) {
    std::set<std::pair<El, El>> seen;
    std::deque<std::pair<El, El>> bfs;
    for (char y : sigma) {
      std::pair<El, El> st{phi.image({kPad, y}), psi.image({y, kPad})};
      if (seen.insert(st).second) bfs.push_back(st);
    }
    while (!bfs.empty() && !out.eps_pair) {
      auto [ea, eb] = bfs.front();
      bfs.pop_front();
      if (phi.accepting->contains(ea) && psi.accepting->contains(eb)) out.eps_pair = true;
      for (char y : sigma) {
        auto na = a.try_product(ea, phi.image({kPad, y}));
        auto nb = b.try_product(eb, psi.image({y, kPad}));
        if (na && nb && seen.insert({*na, *nb}).second) bfs.push_back({*na, *nb});
      }
    }
  }
  return out;
}

// Relation defined by a composed recognizer, in the requested mode.
inline RelationHandle composed_relation(const ComposedRecognizer& cr, Mode mode) {
  RelationHandle h = recognizer_to_dfa(cr.chi);  // Plus handle over the positive algebra
  if (mode == Mode::Star) {
    h.mode = Mode::Star;
    h.aut.final_states[h.aut.initial[0]] = cr.eps_pair;
  }
  return h;
}

}  // namespace syncalg
