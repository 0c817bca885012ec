#pragma once

// Syntactic objects of a relation: the syntactic monoid/semigroup of its
// paired-alphabet language, the syntactic (positive) synchronous algebra via
// the induced-algebra quotient pipeline, the naive variant, isomorphism
// checks, and the consolidation diagram verification.

#include <functional>
#include <map>

#include "syncalg/algebra.hpp"
#include "syncalg/automaton.hpp"
#include "syncalg/core.hpp"
#include "syncalg/semigroup.hpp"

namespace syncalg {

enum class Variant { Unital, Positive };

struct Provenance {
  int minimal_dfa_states = 0;
  int monoid_size = 0;
  std::array<int, kNumTags> class_counts{};
};

struct SyntacticResult {
  SyncAlgebra algebra;
  AlgebraMorphism morphism;  // surjective; accepting set attached
  ClosedSubset accepting;
  Provenance provenance;
};

// ---------------------------------------------------------------------------
// Underlying monoid / semigroup of a self-compatible tag

inline FiniteSemigroup underlying_semigroup(const SyncAlgebra& a, TypeTag t) {
  if (!self_compatible(t)) throw Error("NotSelfCompatible", tag_name(t));
  FiniteSemigroup s;
  s.names = a.ds.names[tag_index(t)];
  int n = a.size(t);
  s.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) s.table[i][j] = a.product({t, i}, {t, j}).idx;
  s.identity = a.positive ? find_identity(s) : a.units[tag_index(t)];
  s.zero = find_zero(s);
  return s;
}

// ---------------------------------------------------------------------------
// Canonical naming: every element is renamed by its shortest (then
// letter-order-least) preimage word, and carriers are reordered accordingly.

namespace detail {

inline bool word_less(const PairedWord& x, const PairedWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Computes preimage words for all elements of a letter-generated algebra and
// returns the renamed, reordered algebra together with the index permutation
// (old index -> new index, per tag).
struct Renamed {
  SyncAlgebra algebra;
  std::array<std::vector<int>, kNumTags> perm;
};

inline Renamed canonical_rename(const SyncAlgebra& a,
                                const std::map<PairedLetter, int>& gen,
                                const std::string& sigma) {
  std::map<El, PairedWord> names;
  auto assign = [&](El e, const PairedWord& w) { names.emplace(e, w); };
  std::set<El> visited;
  std::deque<std::pair<El, PairedWord>> queue;
  auto visit = [&](El e, const PairedWord& w) {
    if (visited.insert(e).second) {
      assign(e, w);
      if (!a.positive) {
        // promise tags of a pure word
        if (e.tag == TypeTag::LL) {
          assign(a.product(e, a.unit(TypeTag::LB)), w);
          assign(a.product(e, a.unit(TypeTag::BL)), w);
        } else if (e.tag == TypeTag::LB) {
          assign(a.product(a.unit(TypeTag::LL), e), w);
        } else if (e.tag == TypeTag::BL) {
          assign(a.product(a.unit(TypeTag::LL), e), w);
        }
      }
      queue.push_back({e, w});
    }
  };
  if (!a.positive)
    for (TypeTag t : all_tags()) {
      El u = a.unit(t);
      visited.insert(u);
      assign(u, {});
      // an arrow unit is a product of units; pure units promote to it, which
      // assign() above would cover, but units are seeded directly here
    }
  if (!a.positive)
    for (TypeTag t : all_tags()) queue.push_back({a.unit(t), {}});
  std::vector<PairedLetter> letters = paired_alphabet(sigma);
  for (PairedLetter l : letters) visit({letter_type(l), gen.at(l)}, {l});
  while (!queue.empty()) {
    auto [e, w] = queue.front();
    queue.pop_front();
    for (PairedLetter l : letters) {
      auto rt = concat_types(e.tag, letter_type(l));
      if (!rt) continue;
      El ne = a.product(e, {letter_type(l), gen.at(l)});
      PairedWord nw = w;
      nw.push_back(l);
      visit(ne, nw);
    }
  }
  for (El e : a.elements())
    if (!names.count(e))
      throw Error("Internal", "element without preimage word (morphism not surjective)");
  Renamed out;
  out.algebra.positive = a.positive;
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    std::vector<int> order(a.size(t));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      return word_less(names.at({t, i}), names.at({t, j}));
    });
    out.perm[ti].assign(a.size(t), -1);
    for (int ni = 0; ni < a.size(t); ni++) {
      out.perm[ti][order[ni]] = ni;
      out.algebra.ds.names[ti].push_back(word_str(names.at({t, order[ni]})));
    }
    if (!a.positive) out.algebra.units[ti] = out.perm[ti][a.units[ti]];
  }
  auto renum = [&](El e) { return El{e.tag, out.perm[tag_index(e.tag)][e.idx]}; };
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t)) {
        auto& tab = out.algebra.prod[tag_index(s)][tag_index(t)];
        tab.resize(static_cast<size_t>(a.size(s)) * a.size(t));
        for (int i = 0; i < a.size(s); i++)
          for (int j = 0; j < a.size(t); j++)
            tab[out.perm[tag_index(s)][i] * a.size(t) + out.perm[tag_index(t)][j]] =
                renum(a.product({s, i}, {t, j})).idx;
      }
  for (auto& [x, y] : a.ds.dep) out.algebra.ds.add_dep(renum(x), renum(y));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Syntactic monoid / semigroup of the relation's paired-alphabet language

inline TransitionAlgebraResult syntactic_monoid(const RelationHandle& r, SyntMode mode) {
  return transition_algebra(relation_dfa(r), mode);
}

// ---------------------------------------------------------------------------
// Syntactic synchronous algebra pipeline:
// minimal DFA -> syntactic monoid/semigroup -> induced algebra restricted to
// its letter-generated part -> quotient by the syntactic congruence of the
// accepting set.

inline SyntacticResult syntactic_sync_algebra(const RelationHandle& r, Variant variant) {
  if (r.aut.alphabet.empty()) throw Error("EmptyAlphabet", "relation over empty alphabet");
  bool positive = variant == Variant::Positive;
  if (positive && r.mode != Mode::Plus)
    throw Error("ModeMismatch", "the positive variant needs a plus-mode relation");
  SyncAutomaton dfa = relation_dfa(r);
  TransitionAlgebraResult ta =
      transition_algebra(dfa, positive ? SyntMode::SemigroupMode : SyntMode::MonoidMode);
  const FiniteSemigroup& m = ta.sg;

  // letter images per letter-type
  std::vector<PairedLetter> letters = paired_alphabet(r.aut.alphabet);
  std::array<std::vector<int>, kNumTags> gens{};
  for (size_t li = 0; li < letters.size(); li++)
    gens[tag_index(letter_type(letters[li]))].push_back(ta.letter_map[li]);

  // locally generated carriers inside the monoid/semigroup
  auto sub_closure = [&](const std::vector<int>& seeds) {
    std::set<int> s;
    std::deque<int> todo(seeds.begin(), seeds.end());
    for (int x : seeds) s.insert(x);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int g : seeds) {
        int y = m.mul(x, g);
        if (s.insert(y).second) todo.push_back(y);
      }
    }
    return s;
  };
  std::array<std::set<int>, kNumTags> carrier;
  carrier[tag_index(TypeTag::LL)] = sub_closure(gens[tag_index(TypeTag::LL)]);
  carrier[tag_index(TypeTag::LB)] = sub_closure(gens[tag_index(TypeTag::LB)]);
  carrier[tag_index(TypeTag::BL)] = sub_closure(gens[tag_index(TypeTag::BL)]);
  if (!positive)
    for (TypeTag t : {TypeTag::LL, TypeTag::LB, TypeTag::BL})
      carrier[tag_index(t)].insert(m.identity);
  for (auto [arrow, second] : {std::pair{TypeTag::LL_LB, TypeTag::LB},
                               std::pair{TypeTag::LL_BL, TypeTag::BL}})
    for (int x : carrier[tag_index(TypeTag::LL)])
      for (int y : carrier[tag_index(second)])
        carrier[tag_index(arrow)].insert(m.mul(x, y));

  // build the restricted induced algebra
  SyncAlgebra ind;
  ind.positive = positive;
  std::array<std::vector<int>, kNumTags> mem;     // tag -> list of monoid elements
  std::array<std::map<int, int>, kNumTags> back;  // monoid element -> index in tag
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    mem[ti].assign(carrier[ti].begin(), carrier[ti].end());
    for (size_t i = 0; i < mem[ti].size(); i++) {
      back[ti][mem[ti][i]] = static_cast<int>(i);
      ind.ds.names[ti].push_back(m.names[mem[ti][i]]);
    }
    if (!positive) ind.units[ti] = back[ti].at(m.identity);
  }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (auto rt = concat_types(s, t)) {
        auto& tab = ind.prod[tag_index(s)][tag_index(t)];
        tab.resize(mem[tag_index(s)].size() * mem[tag_index(t)].size());
        for (size_t i = 0; i < mem[tag_index(s)].size(); i++)
          for (size_t j = 0; j < mem[tag_index(t)].size(); j++) {
            int v = m.mul(mem[tag_index(s)][i], mem[tag_index(t)][j]);
            auto it = back[tag_index(*rt)].find(v);
            if (it == back[tag_index(*rt)].end())
              throw Error("Internal", "restricted induced algebra not product-closed");
            tab[i * mem[tag_index(t)].size() + j] = it->second;
          }
      }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (tag_index(s) < tag_index(t))
        for (size_t i = 0; i < mem[tag_index(s)].size(); i++) {
          auto it = back[tag_index(t)].find(mem[tag_index(s)][i]);
          if (it != back[tag_index(t)].end())
            ind.ds.add_dep({s, static_cast<int>(i)}, {t, it->second});
        }

  // accepting subset and the syntactic congruence quotient
  ClosedSubset acc = ClosedSubset::empty_like(ind.ds);
  for (TypeTag t : all_tags())
    for (size_t i = 0; i < mem[tag_index(t)].size(); i++)
      if (ta.accepting[mem[tag_index(t)][i]]) acc.insert({t, static_cast<int>(i)});
  CongruenceResult cong = syntactic_congruence(ind, acc);
  QuotientResult q = quotient(ind, cong.rel);

  // accepting classes, generator map on the quotient
  std::map<PairedLetter, int> qgen;
  for (size_t li = 0; li < letters.size(); li++) {
    TypeTag t = letter_type(letters[li]);
    qgen[letters[li]] = q.proj.at({t, back[tag_index(t)].at(ta.letter_map[li])}).idx;
  }
  ClosedSubset qacc = ClosedSubset::empty_like(q.algebra.ds);
  for (El e : acc.elements()) qacc.insert(q.proj.at(e));

  // canonical rename / reorder
  detail::Renamed ren = detail::canonical_rename(q.algebra, qgen, r.aut.alphabet);
  SyntacticResult out;
  out.algebra = ren.algebra;
  out.morphism.alphabet = r.aut.alphabet;
  out.morphism.target = ren.algebra;
  for (auto& [l, idx] : qgen)
    out.morphism.gen[l] = ren.perm[tag_index(letter_type(l))][idx];
  out.accepting = ClosedSubset::empty_like(ren.algebra.ds);
  for (El e : qacc.elements())
    out.accepting.insert({e.tag, ren.perm[tag_index(e.tag)][e.idx]});
  out.morphism.accepting = out.accepting;
  out.provenance.minimal_dfa_states = dfa.num_states();
  out.provenance.monoid_size = m.size();
  for (TypeTag t : all_tags())
    out.provenance.class_counts[tag_index(t)] = out.algebra.size(t);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism of synchronous algebras (per-tag bijections preserving product,
// dependency, and units)

inline bool algebras_isomorphic(const SyncAlgebra& a, const SyncAlgebra& b) {
  if (a.positive != b.positive) return false;
  for (TypeTag t : all_tags())
    if (a.size(t) != b.size(t)) return false;
  // backtracking over the flat element list
  std::vector<El> order = a.elements();
  std::map<El, El> f;
  std::array<std::vector<bool>, kNumTags> used;
  for (TypeTag t : all_tags()) used[tag_index(t)].assign(b.size(t), false);
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    El x = order[k];
    for (int j = 0; j < b.size(x.tag); j++) {
      if (used[tag_index(x.tag)][j]) continue;
      El y{x.tag, j};
      if (!a.positive && ((a.units[tag_index(x.tag)] == x.idx) != (b.units[tag_index(x.tag)] == j)))
        continue;
      bool ok = true;
      for (auto& [u, v] : f) {
        if (a.dep(x, u) != b.dep(y, v)) { ok = false; break; }
        if (auto p = a.try_product(x, u)) {
          auto fp = f.find(*p);
          if (fp != f.end() && !(*b.try_product(y, v) == fp->second)) { ok = false; break; }
        }
        if (auto p = a.try_product(u, x)) {
          auto fp = f.find(*p);
          if (fp != f.end() && !(*b.try_product(v, y) == fp->second)) { ok = false; break; }
        }
      }
      if (auto p = a.try_product(x, x)) {
        auto fp = f.find(*p);
        if (fp != f.end() && ok && !(*b.try_product(y, y) == fp->second)) ok = false;
      }
      if (!ok) continue;
      f[x] = y;
      used[tag_index(x.tag)][j] = true;
      if (rec(k + 1)) return true;
      f.erase(x);
      used[tag_index(x.tag)][j] = false;
    }
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Naive synchronous algebras: six types (the five tags plus a unique unit of
// type "1", compatible with everything); no dependency relation. The
// syntactic naive algebra quotients each forced-tag carrier by the two-sided
// context (Myhill) equivalence.

struct NaiveAlgebra {
  std::array<std::vector<std::string>, kNumTags> names;
  std::array<std::array<std::vector<int>, kNumTags>, kNumTags> prod{};
  // the type-1 unit is implicit and acts as a two-sided identity

  int size(TypeTag t) const { return static_cast<int>(names[tag_index(t)].size()); }
  El product(El x, El y) const {
    auto rt = concat_types(x.tag, y.tag);
    if (!rt) throw Error("IncompatibleProduct", "naive product undefined");
    return {*rt, prod[tag_index(x.tag)][tag_index(y.tag)][x.idx * size(y.tag) + y.idx]};
  }
};

struct NaiveResult {
  NaiveAlgebra algebra;
  std::array<std::vector<bool>, kNumTags> accepting;
  bool unit_accepting = false;  // whether (eps, eps) belongs to the relation
};

inline NaiveResult syntactic_naive_algebra(const RelationHandle& r) {
  if (r.mode != Mode::Plus) throw Error("ModeMismatch", "the naive variant needs a plus-mode relation");
  SyncAutomaton dfa = relation_dfa(r);
  TransitionAlgebraResult ta = transition_algebra(dfa, SyntMode::MonoidMode);
  const FiniteSemigroup& m = ta.sg;
  std::vector<PairedLetter> letters = paired_alphabet(r.aut.alphabet);

  // forced-tag carriers: (monoid value, tag) reachable by nonempty words
  std::set<El> carrier_set;  // idx field holds the monoid element here
  std::deque<El> todo;
  std::map<El, PairedWord> word_of;
  auto push = [&](El e, const PairedWord& w) {
    if (carrier_set.insert(e).second) {
      word_of[e] = w;
      todo.push_back(e);
    }
  };
  for (size_t li = 0; li < letters.size(); li++)
    push({letter_type(letters[li]), ta.letter_map[li]}, {letters[li]});
  while (!todo.empty()) {
    El e = todo.front();
    todo.pop_front();
    for (size_t li = 0; li < letters.size(); li++) {
      auto rt = concat_types(e.tag, letter_type(letters[li]));
      if (!rt) continue;
      PairedWord nw = word_of[e];
      nw.push_back(letters[li]);
      push({*rt, m.mul(e.idx, ta.letter_map[li])}, nw);
    }
  }
  std::array<std::vector<int>, kNumTags> mem;
  std::array<std::map<int, int>, kNumTags> back;
  for (El e : carrier_set) {
    back[tag_index(e.tag)][e.idx] = static_cast<int>(mem[tag_index(e.tag)].size());
    mem[tag_index(e.tag)].push_back(e.idx);
  }

  // two-sided Myhill equivalence per tag (contexts over the carrier plus the
  // absent context / the type-1 unit)
  std::vector<El> all;  // carrier elements, idx = index within tag
  for (TypeTag t : all_tags())
    for (size_t i = 0; i < mem[tag_index(t)].size(); i++) all.push_back({t, static_cast<int>(i)});
  auto mval = [&](El e) { return mem[tag_index(e.tag)][e.idx]; };
  auto sig_of = [&](El x) {
    std::vector<uint8_t> sig;
    for (int l = -1; l < static_cast<int>(all.size()); l++)
      for (int rgt = -1; rgt < static_cast<int>(all.size()); rgt++) {
        std::optional<TypeTag> tag = x.tag;
        int v = mval(x);
        if (l >= 0) {
          tag = concat_types(all[l].tag, *tag);
          if (!tag) { sig.push_back(0); continue; }
          v = m.mul(mval(all[l]), v);
        }
        if (rgt >= 0) {
          tag = concat_types(*tag, all[rgt].tag);
          if (!tag) { sig.push_back(0); continue; }
          v = m.mul(v, mval(all[rgt]));
        }
        sig.push_back(ta.accepting[v] ? 1 : 2);
      }
    return sig;
  };
  NaiveResult out;
  std::array<std::vector<int>, kNumTags> cls;
  std::array<std::vector<int>, kNumTags> rep;  // class -> member index
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    std::map<std::vector<uint8_t>, int> seen;
    cls[ti].assign(mem[ti].size(), -1);
    for (size_t i = 0; i < mem[ti].size(); i++) {
      auto [it, fresh] = seen.emplace(sig_of({t, static_cast<int>(i)}),
                                      static_cast<int>(seen.size()));
      cls[ti][i] = it->second;
      if (fresh) rep[ti].push_back(static_cast<int>(i));
    }
  }
  // names: shortest preimage among class members
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    std::vector<PairedWord> best(rep[ti].size());
    std::vector<bool> got(rep[ti].size(), false);
    for (size_t i = 0; i < mem[ti].size(); i++) {
      const PairedWord& w = word_of.at({t, mem[ti][i]});
      int c = cls[ti][i];
      if (!got[c] || detail::word_less(w, best[c])) {
        best[c] = w;
        got[c] = true;
      }
    }
    for (auto& w : best) out.algebra.names[ti].push_back(word_str(w));
  }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (auto rt = concat_types(s, t)) {
        auto& tab = out.algebra.prod[tag_index(s)][tag_index(t)];
        tab.assign(out.algebra.names[tag_index(s)].size() *
                       std::max<size_t>(out.algebra.names[tag_index(t)].size(), 1),
                   -1);
        for (size_t i = 0; i < mem[tag_index(s)].size(); i++)
          for (size_t j = 0; j < mem[tag_index(t)].size(); j++) {
            int v = m.mul(mem[tag_index(s)][i], mem[tag_index(t)][j]);
            int rc = cls[tag_index(*rt)][back[tag_index(*rt)].at(v)];
            int& cell = tab[cls[tag_index(s)][i] * out.algebra.names[tag_index(t)].size() +
                            cls[tag_index(t)][j]];
            if (cell >= 0 && cell != rc)
              throw Error("Internal", "naive quotient product not well-defined");
            cell = rc;
          }
      }
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    out.accepting[ti].assign(out.algebra.names[ti].size(), false);
    for (size_t i = 0; i < mem[ti].size(); i++)
      if (ta.accepting[mem[ti][i]]) out.accepting[ti][cls[ti][i]] = true;
  }
  out.unit_accepting = ta.accepting[m.identity] && r.mode == Mode::Star;
  return out;
}

inline bool naive_isomorphic(const NaiveAlgebra& a, const NaiveAlgebra& b) {
  for (TypeTag t : all_tags())
    if (a.size(t) != b.size(t)) return false;
  std::vector<El> order;
  for (TypeTag t : all_tags())
    for (int i = 0; i < a.size(t); i++) order.push_back({t, i});
  std::map<El, El> f;
  std::array<std::vector<bool>, kNumTags> used;
  for (TypeTag t : all_tags()) used[tag_index(t)].assign(b.size(t), false);
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    El x = order[k];
    for (int j = 0; j < b.size(x.tag); j++) {
      if (used[tag_index(x.tag)][j]) continue;
      El y{x.tag, j};
      bool ok = true;
      auto chk = [&](El u, El v) {
        if (concat_types(x.tag, u.tag)) {
          El p = a.product(x, u);
          auto fp = f.find(p);
          if (fp != f.end() && !(b.product(y, v) == fp->second)) ok = false;
        }
        if (ok && concat_types(u.tag, x.tag)) {
          El p = a.product(u, x);
          auto fp = f.find(p);
          if (fp != f.end() && !(b.product(v, y) == fp->second)) ok = false;
        }
      };
      for (auto& [u, v] : f) {
        chk(u, v);
        if (!ok) break;
      }
      if (ok) chk(x, y);
      if (!ok) continue;
      f[x] = y;
      used[tag_index(x.tag)][j] = true;
      if (rec(k + 1)) return true;
      f.erase(x);
      used[tag_index(x.tag)][j] = false;
    }
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Consolidation diagram: typemap and the syntactic semigroup morphism both
// factor through the consolidated syntactic positive algebra morphism.

struct DiagramReport {
  bool commutes = true;
  std::string detail;
  int projtype_image_size = 0;
  int value_semigroup_size = 0;
};

inline DiagramReport consolidation_diagram_check(const RelationHandle& r, int max_len = 6) {
  RelationHandle plus{r.aut, Mode::Plus};
  SyntacticResult synt = syntactic_sync_algebra(plus, Variant::Positive);
  Consolidation cons = consolidate(synt.algebra);
  SyncAutomaton dfa = relation_dfa(plus);
  TransitionAlgebraResult zeta = transition_algebra(dfa, SyntMode::SemigroupMode);
  std::vector<PairedLetter> letters = paired_alphabet(r.aut.alphabet);

  int zero = cons.sg.zero;
  // consolidated morphism is letter-generated: find witnesses by BFS
  std::vector<int> letter_cls(letters.size());
  for (size_t li = 0; li < letters.size(); li++) {
    El img = synt.morphism.image(letters[li]);
    letter_cls[li] = cons.class_of[synt.algebra.flat(img)];
  }
  std::vector<PairedWord> wit(cons.sg.size());
  std::vector<bool> have(cons.sg.size(), false);
  std::deque<int> bfs;
  for (size_t li = 0; li < letters.size(); li++)
    if (!have[letter_cls[li]]) {
      have[letter_cls[li]] = true;
      wit[letter_cls[li]] = {letters[li]};
      bfs.push_back(letter_cls[li]);
    }
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (size_t li = 0; li < letters.size(); li++) {
      int nc = cons.sg.mul(c, letter_cls[li]);
      if (!have[nc]) {
        have[nc] = true;
        wit[nc] = wit[c];
        wit[nc].push_back(letters[li]);
        bfs.push_back(nc);
      }
    }
  }
  DiagramReport rep;
  for (int c = 0; c < cons.sg.size(); c++)
    if (!have[c]) {
      rep.commutes = false;
      rep.detail = "consolidation element " + cons.sg.names[c] + " unreachable";
      return rep;
    }
  auto zeta_of = [&](const PairedWord& w) {
    int v = zeta.letter_map[dfa.letter_index(w[0])];
    for (size_t i = 1; i < w.size(); i++)
      v = zeta.sg.mul(v, zeta.letter_map[dfa.letter_index(w[i])]);
    return v;
  };
  // projval: class -> syntactic semigroup element, via witnesses
  std::vector<int> projval(cons.sg.size());
  for (int c = 0; c < cons.sg.size(); c++) projval[c] = zeta_of(wit[c]);
  // projval must be a surjective homomorphism
  for (int x = 0; x < cons.sg.size(); x++)
    for (int y = 0; y < cons.sg.size(); y++)
      if (projval[cons.sg.mul(x, y)] != zeta.sg.mul(projval[x], projval[y])) {
        rep.commutes = false;
        rep.detail = "projval is not a homomorphism at " + cons.sg.names[x] + " * " + cons.sg.names[y];
        return rep;
      }
  std::set<int> img(projval.begin(), projval.end());
  if (static_cast<int>(img.size()) != zeta.sg.size()) {
    rep.commutes = false;
    rep.detail = "projval is not surjective";
    return rep;
  }
  // projtype: class -> type-or-zero (positive consolidation never mixes tags)
  std::set<int> type_img;
  for (int c = 0; c < cons.sg.size(); c++) type_img.insert(cons.tag_of[c]);
  rep.projtype_image_size = static_cast<int>(type_img.size());
  rep.value_semigroup_size = zeta.sg.size();
  // both triangles, on every paired-alphabet word up to max_len
  std::function<bool(PairedWord&, int, int, int)> recurse = [&](PairedWord& w, int c, int z,
                                                                int depth) -> bool {
    if (!w.empty()) {
      Classified cl = classify_word(w);
      if (cl.well_formed ? (c == zero || cons.tag_of[c] != tag_index(cl.tag)) : (c != zero)) {
        rep.commutes = false;
        rep.detail = "typemap triangle fails at " + word_str(w);
        return false;
      }
      if (projval[c] != z) {
        rep.commutes = false;
        rep.detail = "value triangle fails at " + word_str(w);
        return false;
      }
    }
    if (depth == max_len) return true;
    for (size_t li = 0; li < letters.size(); li++) {
      w.push_back(letters[li]);
      int nc = w.size() == 1 ? letter_cls[li] : cons.sg.mul(c, letter_cls[li]);
      int nz = w.size() == 1 ? zeta.letter_map[dfa.letter_index(letters[li])]
                             : zeta.sg.mul(z, zeta.letter_map[dfa.letter_index(letters[li])]);
      bool cont = recurse(w, nc, nz, depth + 1);
      w.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  PairedWord w;
  recurse(w, -1, -1, 0);
  return rep;
}

}  // namespace syncalg
