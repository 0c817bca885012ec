#pragma once

// Brute-force ground truth at bounded word length: Nerode-style congruence on
// typed words, differential verification of the syntactic pipeline, bounded
// composition witnesses, recognizable decompositions, and seeded random
// fixture generation.

#include <random>

#include "syncalg/automaton.hpp"
#include "syncalg/syntactic.hpp"

namespace syncalg {

struct OracleConfig {
  int max_total_len = 8;  // hard cap 12
  uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Nerode classes of typed words up to the bound, with contexts bounded by the
// same length. Words are deduplicated by their DFA behavior (state function),
// which preserves every membership query the congruence can make.

struct NerodeResult {
  std::array<std::vector<PairedWord>, kNumTags> witnesses;  // class -> shortest witness
  std::set<std::pair<El, El>> related;                      // cross-tag congruent pairs
  int count(TypeTag t) const { return static_cast<int>(witnesses[tag_index(t)].size()); }
};

inline NerodeResult nerode_classes(const RelationHandle& r, const OracleConfig& cfg) {
  if (cfg.max_total_len > 12) throw Error("BoundExceeded", "oracle bound capped at 12");
  SyncAutomaton dfa = relation_dfa(r);
  bool positive = r.mode == Mode::Plus;
  int n = dfa.num_states();
  int q0 = dfa.initial[0];

  // behavior = end state from every start state
  std::map<std::vector<int>, int> behavior_ids;
  std::vector<std::vector<int>> behaviors;
  auto bid_of = [&](const std::vector<int>& f) {
    auto [it, fresh] = behavior_ids.emplace(f, static_cast<int>(behavior_ids.size()));
    if (fresh) behaviors.push_back(f);
    return it->second;
  };

  // BFS over (behavior, first-letter-type, pad flags), shortest-lex witnesses
  struct Node {
    int bid;
    int firstlt;  // tag_index of LL/LB/BL
    bool lpad, rpad;
    auto operator<=>(const Node&) const = default;
  };
  std::map<Node, PairedWord> visited;
  std::deque<Node> queue;
  // realized typed elements: (bid, tag) with a shortest witness
  std::map<std::pair<int, int>, PairedWord> realized;
  auto realize = [&](const Node& nd, const PairedWord& w) {
    for (TypeTag t : free_algebra_tags(w, positive))
      realized.emplace(std::make_pair(nd.bid, tag_index(t)), w);
  };
  std::vector<PairedLetter> letters = paired_alphabet(r.aut.alphabet);
  {
    std::vector<int> idf(n);
    std::iota(idf.begin(), idf.end(), 0);
    if (!positive) {
      // the empty word carries every tag
      int id = bid_of(idf);
      for (TypeTag t : all_tags()) realized.emplace(std::make_pair(id, tag_index(t)), PairedWord{});
    } else {
      bid_of(idf);
    }
  }
  for (PairedLetter l : letters) {
    std::vector<int> f(n);
    for (int q = 0; q < n; q++) f[q] = dfa.step(q, dfa.letter_index(l));
    Node nd{bid_of(f), tag_index(letter_type(l)), l.left == kPad, l.right == kPad};
    PairedWord w{l};
    if (visited.emplace(nd, w).second) {
      realize(nd, w);
      queue.push_back(nd);
    }
  }
  int depth_budget = cfg.max_total_len;
  while (!queue.empty()) {
    Node nd = queue.front();
    queue.pop_front();
    PairedWord w = visited.at(nd);
    if (static_cast<int>(w.size()) >= depth_budget) continue;
    for (PairedLetter l : letters) {
      if (nd.lpad && l.left != kPad) continue;
      if (nd.rpad && l.right != kPad) continue;
      std::vector<int> g(n);
      const std::vector<int>& f = behaviors[nd.bid];
      for (int q = 0; q < n; q++) g[q] = dfa.step(f[q], dfa.letter_index(l));
      Node nx{bid_of(g), nd.firstlt, nd.lpad || l.left == kPad, nd.rpad || l.right == kPad};
      PairedWord wl = w;
      wl.push_back(l);
      if (visited.emplace(nx, wl).second) {
        realize(nx, wl);
        queue.push_back(nx);
      }
    }
  }

  // signatures over bounded contexts (absent or realized typed elements)
  std::vector<std::pair<std::pair<int, int>, PairedWord>> els(realized.begin(), realized.end());

  // value under context (li, ri): 0 undefined, 1 in R, 2 out
  std::vector<std::vector<uint8_t>> sigs(els.size());
  for (size_t xi = 0; xi < els.size(); xi++) {
    auto& sig = sigs[xi];
    sig.reserve((els.size() + 1) * (els.size() + 1));
    for (int li = -1; li < static_cast<int>(els.size()); li++)
      for (int ri = -1; ri < static_cast<int>(els.size()); ri++) {
        std::optional<TypeTag> tag = all_tags()[els[xi].first.second];
        if (li >= 0) tag = concat_types(all_tags()[els[li].first.second], *tag);
        if (tag && ri >= 0) tag = concat_types(*tag, all_tags()[els[ri].first.second]);
        if (!tag) { sig.push_back(0); continue; }
        int q = q0;
        if (li >= 0) q = behaviors[els[li].first.first][q];
        q = behaviors[els[xi].first.first][q];
        if (ri >= 0) q = behaviors[els[ri].first.first][q];
        sig.push_back(dfa.final_states[q] ? 1 : 2);
      }
  }

  NerodeResult out;
  std::map<std::pair<int, std::vector<uint8_t>>, int> class_ids;  // (tag, sig) -> class
  std::vector<int> cls(els.size());
  for (size_t xi = 0; xi < els.size(); xi++) {
    int ti = els[xi].first.second;
    auto [it, fresh] = class_ids.emplace(std::make_pair(ti, sigs[xi]),
                                         static_cast<int>(out.witnesses[ti].size()));
    cls[xi] = it->second;
    if (fresh)
      out.witnesses[ti].push_back(els[xi].second);
    else if (detail::word_less(els[xi].second, out.witnesses[ti][it->second]))
      out.witnesses[ti][it->second] = els[xi].second;
  }
  // cross-tag relatedness: no conflicting mutually-defined context
  for (size_t xi = 0; xi < els.size(); xi++)
    for (size_t yi = xi + 1; yi < els.size(); yi++) {
      if (els[xi].first.second == els[yi].first.second) continue;
      bool ok = true;
      for (size_t k = 0; k < sigs[xi].size() && ok; k++)
        if (sigs[xi][k] && sigs[yi][k] && sigs[xi][k] != sigs[yi][k]) ok = false;
      if (ok)
        out.related.insert({std::min(El{all_tags()[els[xi].first.second], cls[xi]},
                                     El{all_tags()[els[yi].first.second], cls[yi]}),
                            std::max(El{all_tags()[els[xi].first.second], cls[xi]},
                                     El{all_tags()[els[yi].first.second], cls[yi]})});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Differential check of the syntactic pipeline against the Nerode oracle.

struct VerifyReport {
  bool ok = true;
  std::string detail;
};

inline VerifyReport verify_syntactic(const RelationHandle& r, const SyntacticResult& synt,
                                     const OracleConfig& cfg) {
  VerifyReport rep;
  NerodeResult ner = nerode_classes(r, cfg);
  const SyncAlgebra& a = synt.algebra;
  std::array<std::vector<El>, kNumTags> image;  // nerode class -> algebra element
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    if (ner.count(t) != a.size(t)) {
      rep.ok = false;
      rep.detail = std::string("class count mismatch at tag ") + tag_name(t) + ": oracle " +
                   std::to_string(ner.count(t)) + " vs algebra " + std::to_string(a.size(t));
      return rep;
    }
    std::set<int> seen;
    for (const PairedWord& w : ner.witnesses[ti]) {
      El e = eval_morphism(synt.morphism, {w, t});
      image[ti].push_back(e);
      if (!seen.insert(e.idx).second) {
        rep.ok = false;
        rep.detail = std::string("two oracle classes map to one element at tag ") + tag_name(t) +
                     " (witness " + word_str(w) + ")";
        return rep;
      }
    }
  }
  // dependency pairs must match exactly
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      for (int i = 0; i < a.size(s); i++)
        for (int j = 0; j < a.size(t); j++) {
          El x{s, i}, y{t, j};
          if (!(x < y)) continue;
          bool oracle_rel = ner.related.count({x, y}) > 0 || x == y;
          bool alg_rel = a.dep(image[tag_index(s)][i], image[tag_index(t)][j]);
          if (s == t) oracle_rel = (i == j);
          if (oracle_rel != alg_rel) {
            rep.ok = false;
            rep.detail = "dependency mismatch between " + word_str(ner.witnesses[tag_index(s)][i]) +
                         ":" + tag_name(s) + " and " + word_str(ner.witnesses[tag_index(t)][j]) +
                         ":" + tag_name(t);
            return rep;
          }
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Bounded-witness composition membership: (u,w) with some middle word v of
// length <= max(|u|,|w|) + |Q_R|*|Q_S|.

inline bool compose_oracle_member(const RelationHandle& r, const RelationHandle& s,
                                  const std::string& u, const std::string& w) {
  int bound = static_cast<int>(std::max(u.size(), w.size())) +
              r.aut.num_states() * s.aut.num_states();
  std::string v;
  std::function<bool(int)> rec = [&](int remaining) -> bool {
    if (accepts_pair(r, u, v) && accepts_pair(s, v, w)) return true;
    if (remaining == 0) return false;
    for (char c : r.aut.alphabet) {
      v.push_back(c);
      if (rec(remaining - 1)) return true;
      v.pop_back();
    }
    return false;
  };
  return rec(bound);
}

// ---------------------------------------------------------------------------
// Bounded recognizable-decomposition probe: group left/right words by their
// bounded membership rows; applicable when class counts stabilize at the
// bound, in which case the relation factors through the classes.

struct RecDecomposition {
  bool applicable = false;
  std::vector<std::string> left_witness, right_witness;
  std::set<std::pair<int, int>> cells;  // (left class, right class) included in R
};

inline RecDecomposition recognizable_decomposition(const RelationHandle& r,
                                                   const OracleConfig& cfg) {
  if (cfg.max_total_len > 12) throw Error("BoundExceeded", "oracle bound capped at 12");
  std::vector<std::string> words{""};
  for (int len = 1; len <= cfg.max_total_len; len++) {
    size_t start = words.size();
    for (size_t i = 0; i < words.size(); i++)
      if (static_cast<int>(words[i].size()) == len - 1)
        for (char c : r.aut.alphabet) words.push_back(words[i] + c);
    (void)start;
  }
  auto classify_at = [&](int bound, bool left) {
    std::map<std::vector<uint8_t>, int> ids;
    std::vector<int> cls;
    std::vector<std::string> wit;
    for (const std::string& u : words) {
      if (static_cast<int>(u.size()) > bound) { cls.push_back(-1); continue; }
      std::vector<uint8_t> row;
      for (const std::string& v : words) {
        if (static_cast<int>(v.size()) > bound) continue;
        row.push_back((left ? accepts_pair(r, u, v) : accepts_pair(r, v, u)) ? 1 : 0);
      }
      auto [it, fresh] = ids.emplace(std::move(row), static_cast<int>(ids.size()));
      cls.push_back(it->second);
      if (fresh) wit.push_back(u);
    }
    return std::make_pair(cls, wit);
  };
  auto [lcls, lwit] = classify_at(cfg.max_total_len, true);
  auto [rcls, rwit] = classify_at(cfg.max_total_len, false);
  auto [lcls_prev, lwit_prev] = classify_at(cfg.max_total_len - 1, true);
  auto [rcls_prev, rwit_prev] = classify_at(cfg.max_total_len - 1, false);
  RecDecomposition out;
  if (lwit.size() != lwit_prev.size() || rwit.size() != rwit_prev.size()) return out;
  out.applicable = true;
  out.left_witness = lwit;
  out.right_witness = rwit;
  for (size_t i = 0; i < words.size(); i++)
    for (size_t j = 0; j < words.size(); j++)
      if (accepts_pair(r, words[i], words[j])) out.cells.insert({lcls[i], rcls[j]});
  return out;
}

// ---------------------------------------------------------------------------
// Seeded random fixtures

inline RelationHandle random_relation(uint64_t seed, int num_states = 2,
                                      const std::string& alphabet = "ab",
                                      Mode mode = Mode::Star) {
  std::mt19937_64 rng(seed);
  SyncAutomaton a = make_automaton(alphabet);
  for (int q = 0; q < num_states; q++) a.add_state("q" + std::to_string(q));
  a.initial = {0};
  std::uniform_int_distribution<int> st(0, num_states - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int q = 0; q < num_states; q++)
    for (PairedLetter l : a.letters) a.add_trans(q, l, st(rng));
  for (int q = 0; q < num_states; q++) a.final_states[q] = coin(rng) == 1;
  return {a, mode};
}

// A valid random synchronous algebra: the unital syntactic algebra of a
// seeded random relation, retried until the carrier is small enough.
inline SyntacticResult random_algebra(uint64_t seed, int max_total = 10) {
  for (uint64_t attempt = 0;; attempt++) {
    RelationHandle r = random_relation(seed * 1000003 + attempt * 7919 + 1, 2, "ab", Mode::Star);
    SyntacticResult synt = syntactic_sync_algebra(r, Variant::Unital);
    if (synt.algebra.total() <= max_total) return synt;
  }
}

}  // namespace syncalg
