#pragma once

// Finite synchronous algebras (unital and positive): axiom validation,
// morphisms and evaluation, products, induced algebras, consolidation,
// syntactic congruences, residuals and quotients.

#include <map>
#include <numeric>
#include <sstream>

#include "syncalg/automaton.hpp"
#include "syncalg/core.hpp"
#include "syncalg/semigroup.hpp"

namespace syncalg {

// Symmetric reflexive relation over typed elements (reflexive pairs implicit,
// stored (min,max)).
struct ElRel {
  std::set<std::pair<El, El>> pairs;
  bool related(El a, El b) const {
    if (a == b) return true;
    return pairs.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
  }
  void add(El a, El b) {
    if (!(a == b)) pairs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
};

struct SyncAlgebra {
  bool positive = false;
  DependentSet ds;  // carrier names + dependency relation
  // prod[s][t]: flattened |A_s| x |A_t| table of indices into A_{s⊙t};
  // empty vector when s,t incompatible
  std::array<std::array<std::vector<int>, kNumTags>, kNumTags> prod{};
  std::array<int, kNumTags> units{-1, -1, -1, -1, -1};

  int size(TypeTag t) const { return ds.size(t); }
  int total() const { return ds.total_size(); }
  const std::string& name(El x) const { return ds.names[tag_index(x.tag)][x.idx]; }
  bool has(El x) const { return ds.in_range(x); }
  bool dep(El x, El y) const { return ds.dep_related(x, y); }

  int flat(El x) const {
    int off = 0;
    for (TypeTag t : all_tags()) {
      if (t == x.tag) return off + x.idx;
      off += size(t);
    }
    return -1;
  }
  El unflat(int f) const {
    for (TypeTag t : all_tags()) {
      if (f < size(t)) return {t, f};
      f -= size(t);
    }
    throw Error("Internal", "flat index out of range");
  }

  std::optional<El> try_product(El x, El y) const {
    auto rt = concat_types(x.tag, y.tag);
    if (!rt) return std::nullopt;
    const auto& tab = prod[tag_index(x.tag)][tag_index(y.tag)];
    return El{*rt, tab[x.idx * size(y.tag) + y.idx]};
  }
  El product(El x, El y) const {
    auto r = try_product(x, y);
    if (!r) throw Error("IncompatibleProduct",
                        tag_name(x.tag) + std::string(" . ") + tag_name(y.tag));
    return *r;
  }
  El unit(TypeTag t) const {
    if (positive || units[tag_index(t)] < 0) throw Error("NoUnit", tag_name(t));
    return {t, units[tag_index(t)]};
  }

  std::vector<El> elements() const { return ds.elements(); }
};

// ---------------------------------------------------------------------------
// Axiom validation. Returns an empty report iff the structure is a valid
// (positive) synchronous algebra.

inline std::vector<std::string> validate(const SyncAlgebra& a) {
  std::vector<std::string> rep;
  auto el_str = [&](El x) { return std::string(tag_name(x.tag)) + ":" + a.name(x); };
  // carrier / table shape
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags()) {
      const auto& tab = a.prod[tag_index(s)][tag_index(t)];
      size_t want = concat_types(s, t)
                        ? static_cast<size_t>(a.size(s)) * static_cast<size_t>(a.size(t))
                        : 0;
      if (tab.size() != want) {
        rep.push_back(std::string("product table shape wrong for ") + tag_name(s) + " . " +
                      tag_name(t));
        return rep;  // structural; nothing else is meaningful
      }
      if (auto rt = concat_types(s, t))
        for (int v : tab)
          if (v < 0 || v >= a.size(*rt)) {
            rep.push_back(std::string("product table range error for ") + tag_name(s) + " . " +
                          tag_name(t));
            return rep;
          }
    }
  // dependency relation sanity (symmetry is structural; same-tag ⇒ equality)
  for (auto& msg : a.ds.validate()) rep.push_back(msg);
  // associativity over compatible triples
  std::vector<El> els = a.elements();
  for (El x : els)
    for (El y : els)
      for (El z : els) {
        auto xy = a.try_product(x, y);
        auto yz = a.try_product(y, z);
        bool ldef = xy && a.try_product(*xy, z);
        bool rdef = yz && a.try_product(x, *yz);
        if (ldef != rdef)
          rep.push_back("associativity definedness mismatch at (" + el_str(x) + ", " + el_str(y) +
                        ", " + el_str(z) + ")");
        else if (ldef && !(*a.try_product(*xy, z) == *a.try_product(x, *yz)))
          rep.push_back("associativity fails at (" + el_str(x) + ", " + el_str(y) + ", " +
                        el_str(z) + ")");
      }
  // monotonicity: x ≍ x′ and both products with y defined ⇒ products ≍
  auto mono = [&](El x, El xp, El y, bool left) {
    auto p = left ? a.try_product(y, x) : a.try_product(x, y);
    auto q = left ? a.try_product(y, xp) : a.try_product(xp, y);
    if (p && q && !a.dep(*p, *q))
      rep.push_back("monotonicity fails: " + el_str(x) + " ~ " + el_str(xp) + " times " +
                    el_str(y));
  };
  for (auto& [x, xp] : a.ds.dep)
    for (El y : els) {
      mono(x, xp, y, false);
      mono(x, xp, y, true);
    }
  if (!a.positive) {
    for (TypeTag t : all_tags())
      if (a.units[tag_index(t)] < 0 || a.units[tag_index(t)] >= a.size(t)) {
        rep.push_back(std::string("missing unit for tag ") + tag_name(t));
        return rep;
      }
    // unit laws up to dep
    for (TypeTag t : all_tags())
      for (El x : els) {
        El u = a.unit(t);
        if (auto p = a.try_product(u, x); p && !a.dep(*p, x))
          rep.push_back("left unit law fails: 1:" + std::string(tag_name(t)) + " . " + el_str(x));
        if (auto p = a.try_product(x, u); p && !a.dep(*p, x))
          rep.push_back("right unit law fails: " + el_str(x) + " . 1:" + tag_name(t));
      }
    // 1:ll_lb = 1:ll . 1:lb  and  1:ll_bl = 1:ll . 1:bl
    for (TypeTag b : {TypeTag::LB, TypeTag::BL}) {
      El u = a.product(a.unit(TypeTag::LL), a.unit(b));
      El want = a.unit(b == TypeTag::LB ? TypeTag::LL_LB : TypeTag::LL_BL);
      if (!(u == want))
        rep.push_back(std::string("arrow unit is not the product of units for tag ") +
                      tag_name(want.tag));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Product algebra (componentwise)

inline SyncAlgebra product_algebra(const SyncAlgebra& a, const SyncAlgebra& b) {
  if (a.positive != b.positive) throw Error("VariantMismatch", "unital vs positive");
  SyncAlgebra p;
  p.positive = a.positive;
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    for (int i = 0; i < a.size(t); i++)
      for (int j = 0; j < b.size(t); j++)
        p.ds.names[ti].push_back("(" + a.ds.names[ti][i] + "," + b.ds.names[ti][j] + ")");
    if (!p.positive) p.units[ti] = a.units[ti] * b.size(t) + b.units[ti];
  }
  auto pid = [&](El xa, El xb) { return El{xa.tag, xa.idx * b.size(xa.tag) + xb.idx}; };
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (auto rt = concat_types(s, t)) {
        auto& tab = p.prod[tag_index(s)][tag_index(t)];
        tab.resize(static_cast<size_t>(p.size(s)) * p.size(t));
        for (int i = 0; i < a.size(s); i++)
          for (int j = 0; j < b.size(s); j++)
            for (int k = 0; k < a.size(t); k++)
              for (int l = 0; l < b.size(t); l++) {
                El r = pid(a.product({s, i}, {t, k}), b.product({s, j}, {t, l}));
                tab[(i * b.size(s) + j) * p.size(t) + (k * b.size(t) + l)] = r.idx;
                (void)rt;
              }
      }
  // dep = conjunction componentwise
  auto dep_list = [&](const SyncAlgebra& x) {
    std::vector<std::pair<El, El>> l(x.ds.dep.begin(), x.ds.dep.end());
    for (El e : x.elements()) l.push_back({e, e});
    return l;
  };
  for (auto& [xa, ya] : dep_list(a))
    for (auto& [xb, yb] : dep_list(b)) {
      if (xa.tag == xb.tag && ya.tag == yb.tag) p.ds.add_dep(pid(xa, xb), pid(ya, yb));
      if (xa.tag == yb.tag && ya.tag == xb.tag) p.ds.add_dep(pid(xa, yb), pid(ya, xb));
    }
  return p;
}

// ---------------------------------------------------------------------------
// Induced algebras M↑ / S↑: one copy of the monoid (semigroup) per tag,
// products multiply underlying elements, dep relates equal underlying
// elements across tags.

inline SyncAlgebra induced_algebra(const FiniteSemigroup& m, bool positive) {
  if (!positive && !m.is_monoid()) throw Error("NotAMonoid", "induced unital algebra needs an identity");
  SyncAlgebra a;
  a.positive = positive;
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    a.ds.names[ti] = m.names;
    if (!positive) a.units[ti] = m.identity;
  }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t)) {
        auto& tab = a.prod[tag_index(s)][tag_index(t)];
        tab.resize(static_cast<size_t>(m.size()) * m.size());
        for (int i = 0; i < m.size(); i++)
          for (int j = 0; j < m.size(); j++) tab[i * m.size() + j] = m.mul(i, j);
      }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (tag_index(s) < tag_index(t))
        for (int i = 0; i < m.size(); i++) a.ds.add_dep({s, i}, {t, i});
  return a;
}

// ---------------------------------------------------------------------------
// Morphisms and evaluation

struct AlgebraMorphism {
  std::string alphabet;
  SyncAlgebra target;
  std::map<PairedLetter, int> gen;  // letter -> element index at its letter-type
  std::optional<ClosedSubset> accepting;

  El image(PairedLetter l) const {
    auto it = gen.find(l);
    if (it == gen.end()) throw Error("UnknownLetter", letter_str(l));
    return {letter_type(l), it->second};
  }
};

// Evaluate a typed word. The raw fold yields the word's forced tag; when the
// requested tag is one of the word's promise tags (a pure word standing for an
// arrow type), the value is promoted by multiplying with units (unital only).
inline El eval_morphism(const AlgebraMorphism& m, const TypedWord& w) {
  const SyncAlgebra& a = m.target;
  if (w.word.empty()) {
    if (a.positive) throw Error("EmptyWordInPositive", "positive morphisms evaluate non-empty words only");
    return a.unit(w.tag);
  }
  std::vector<TypeTag> ok = free_algebra_tags(w.word, a.positive);
  if (std::find(ok.begin(), ok.end(), w.tag) == ok.end())
    throw Error("InconsistentTag", std::string("word cannot carry tag ") + tag_name(w.tag));
  El val = m.image(w.word[0]);
  for (size_t i = 1; i < w.word.size(); i++) val = a.product(val, m.image(w.word[i]));
  if (val.tag == w.tag) return val;
  // promotion: pure word promoted to an arrow tag (or positional combination)
  if (a.positive) throw Error("InconsistentTag", "positive words have forced tags");
  if (val.tag == TypeTag::LL && w.tag == TypeTag::LL_LB) return a.product(val, a.unit(TypeTag::LB));
  if (val.tag == TypeTag::LL && w.tag == TypeTag::LL_BL) return a.product(val, a.unit(TypeTag::BL));
  if (val.tag == TypeTag::LB && w.tag == TypeTag::LL_LB) return a.product(a.unit(TypeTag::LL), val);
  if (val.tag == TypeTag::BL && w.tag == TypeTag::LL_BL) return a.product(a.unit(TypeTag::LL), val);
  throw Error("InconsistentTag", "no promotion path");
}

// DFA whose states are the morphism's reachable values (plus a fresh start
// and a dead state); semantics = φ⁻¹[Acc] ∩ WF.
inline RelationHandle recognizer_to_dfa(const AlgebraMorphism& m) {
  if (!m.accepting) throw Error("NoAcceptingSet", "recognizer_to_dfa needs an accepting set");
  const SyncAlgebra& a = m.target;
  if (!is_closed(a.ds, *m.accepting)) {
    for (auto& [x, y] : a.ds.dep)
      if (m.accepting->contains(x) != m.accepting->contains(y))
        throw Error("NonClosedAccepting",
                    std::string(tag_name(x.tag)) + ":" + a.name(x) + " vs " +
                        tag_name(y.tag) + ":" + a.name(y));
    throw Error("NonClosedAccepting", "accepting set not closed under dep");
  }
  SyncAutomaton aut = make_automaton(m.alphabet);
  int n = a.total();
  int start = aut.add_state("start");
  for (int f = 0; f < n; f++) {
    El e = a.unflat(f);
    aut.add_state(std::string(tag_name(e.tag)) + ":" + a.name(e));
  }
  int dead = aut.add_state("dead");
  aut.initial = {start};
  for (PairedLetter l : aut.letters) {
    El img = m.image(l);
    aut.add_trans(start, l, 1 + a.flat(img));
    for (int f = 0; f < n; f++) {
      auto p = a.try_product(a.unflat(f), img);
      aut.add_trans(1 + f, l, p ? 1 + a.flat(*p) : dead);
    }
    aut.add_trans(dead, l, dead);
  }
  for (int f = 0; f < n; f++) aut.final_states[1 + f] = m.accepting->contains(a.unflat(f));
  if (!a.positive) aut.final_states[start] = m.accepting->contains(a.unit(TypeTag::LL));
  return {aut, a.positive ? Mode::Plus : Mode::Star};
}

// ---------------------------------------------------------------------------
// Syntactic congruence of a closed subset C: x:σ ≅_C y:τ iff every context
// (l?, r?) over A ∪ {absent} that is defined around both gives equal
// C-membership (covers the two-sided, one-sided and bare clauses).

struct CongruenceResult {
  ElRel rel;
  bool locally_transitive = true;
  std::optional<std::array<El, 4>> lt_witness;  // x', x, y, y'
};

inline CongruenceResult syntactic_congruence(const SyncAlgebra& a, const ClosedSubset& c) {
  std::vector<El> els = a.elements();
  int n = static_cast<int>(els.size());
  // contexts: (l, r) with -1 = absent
  std::vector<std::pair<int, int>> ctxs;
  for (int l = -1; l < n; l++)
    for (int r = -1; r < n; r++) ctxs.push_back({l, r});
  // value of element under context: 0 undefined, 1 in C, 2 out of C
  auto sig_of = [&](El x) {
    std::vector<uint8_t> sig(ctxs.size());
    for (size_t k = 0; k < ctxs.size(); k++) {
      auto [l, r] = ctxs[k];
      std::optional<El> v = x;
      if (l >= 0) v = a.try_product(els[l], *v);
      if (v && r >= 0) v = a.try_product(*v, els[r]);
      sig[k] = !v ? 0 : (c.contains(*v) ? 1 : 2);
    }
    return sig;
  };
  std::vector<std::vector<uint8_t>> sigs(n);
  for (int i = 0; i < n; i++) sigs[i] = sig_of(els[i]);
  CongruenceResult out;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      bool ok = true;
      for (size_t k = 0; k < ctxs.size() && ok; k++)
        if (sigs[i][k] && sigs[j][k] && sigs[i][k] != sigs[j][k]) ok = false;
      if (ok) out.rel.add(els[i], els[j]);
    }
  // local transitivity: x′ ≅ x (same tag), x ≅ y, y ≅ y′ (same tag) ⇒ x′ ≅ y′
  for (El x : els)
    for (El xp : els) {
      if (xp.tag != x.tag || !out.rel.related(xp, x)) continue;
      for (El y : els) {
        if (!out.rel.related(x, y)) continue;
        for (El yp : els) {
          if (yp.tag != y.tag || !out.rel.related(y, yp)) continue;
          if (!out.rel.related(xp, yp)) {
            out.locally_transitive = false;
            if (!out.lt_witness) out.lt_witness = {xp, x, y, yp};
          }
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Residuals

enum class Side { Left, Right };

inline ClosedSubset residual(Side side, const SyncAlgebra& a, const ClosedSubset& c, El x) {
  ElRel cong = syntactic_congruence(a, c).rel;
  ClosedSubset out = ClosedSubset::empty_like(a.ds);
  for (El y : a.elements())
    for (El yp : a.elements()) {
      if (!cong.related(y, yp)) continue;
      auto p = side == Side::Left ? a.try_product(x, yp) : a.try_product(yp, x);
      if (p && c.contains(*p)) {
        out.insert(y);
        break;
      }
    }
  // residuals are closed because ≅_C is coarser than dep; assert via saturation
  return close_subset(a.ds, out.elements());
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientResult {
  SyncAlgebra algebra;
  std::map<El, El> proj;  // element -> class
};

// ≈ must be reflexive (implicit), symmetric (by storage), coarser than dep,
// locally transitive, and compatible with the product.
inline QuotientResult quotient(const SyncAlgebra& a, const ElRel& rel) {
  for (auto& [x, y] : a.ds.dep)
    if (!rel.related(x, y))
      throw Error("NotACongruence", "not coarser than dep at " + a.name(x) + " ~ " + a.name(y));
  std::vector<El> els = a.elements();
  // local transitivity (also makes the same-tag restriction an equivalence)
  for (El xp : els)
    for (El x : els)
      for (El y : els)
        for (El yp : els)
          if (xp.tag == x.tag && yp.tag == y.tag && rel.related(xp, x) && rel.related(x, y) &&
              rel.related(y, yp) && !rel.related(xp, yp))
            throw Error("NotACongruence", "local transitivity fails at " + a.name(xp) + ", " +
                                              a.name(x) + ", " + a.name(y) + ", " + a.name(yp));
  // product compatibility
  for (El x : els)
    for (El xp : els) {
      if (!rel.related(x, xp)) continue;
      for (El y : els) {
        auto check = [&](std::optional<El> p, std::optional<El> q) {
          if (p && q && !rel.related(*p, *q))
            throw Error("NotACongruence", "product compatibility fails at " + a.name(x) + " ~ " +
                                              a.name(xp) + " with " + a.name(y));
        };
        check(a.try_product(x, y), a.try_product(xp, y));
        check(a.try_product(y, x), a.try_product(y, xp));
      }
    }
  // same-tag classes
  QuotientResult out;
  out.algebra.positive = a.positive;
  std::array<std::vector<int>, kNumTags> cls;  // per tag: element idx -> class idx
  for (TypeTag t : all_tags()) {
    int ti = tag_index(t);
    cls[ti].assign(a.size(t), -1);
    for (int i = 0; i < a.size(t); i++) {
      for (int j = 0; j < i; j++)
        if (rel.related({t, i}, {t, j})) {
          cls[ti][i] = cls[ti][j];
          break;
        }
      if (cls[ti][i] < 0) {
        cls[ti][i] = static_cast<int>(out.algebra.ds.names[ti].size());
        out.algebra.ds.names[ti].push_back(a.ds.names[ti][i]);
      }
    }
    if (!a.positive) out.algebra.units[ti] = cls[ti][a.units[ti]];
  }
  auto cls_of = [&](El x) { return El{x.tag, cls[tag_index(x.tag)][x.idx]}; };
  for (El x : els) out.proj[x] = cls_of(x);
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t)) {
        auto& tab = out.algebra.prod[tag_index(s)][tag_index(t)];
        tab.assign(static_cast<size_t>(out.algebra.size(s)) * out.algebra.size(t), -1);
        for (int i = 0; i < a.size(s); i++)
          for (int j = 0; j < a.size(t); j++) {
            El r = cls_of(a.product({s, i}, {t, j}));
            int& cell = tab[cls[tag_index(s)][i] * out.algebra.size(t) + cls[tag_index(t)][j]];
            if (cell >= 0 && cell != r.idx)
              throw Error("NotACongruence", "product not well-defined on classes");
            cell = r.idx;
          }
      }
  // induced dep between classes: [x] ≍ [y] iff some members are ≈-related
  for (El x : els)
    for (El y : els)
      if (rel.related(x, y)) out.algebra.ds.add_dep(cls_of(x), cls_of(y));
  return out;
}

// ---------------------------------------------------------------------------
// Consolidation

struct Consolidation {
  FiniteSemigroup sg;             // with zero; identity set in the unital case
  std::vector<int> class_of;      // flat element index -> sg element
  std::vector<int> tag_of;        // sg element -> tag index; -1 zero; -2 mixed
  std::vector<El> rep;            // sg element -> a representative (zero: El{LL,-1})
};

inline Consolidation consolidate(const SyncAlgebra& a) {
  int n = a.total();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) uf[std::max(x, y)] = std::min(x, y);
  };
  if (!a.positive) {
    // merge the five units, then close: x~x′, y~y′, both products defined ⇒
    // results merged (the congruence generated by identifying the units)
    for (TypeTag t : all_tags()) unite(a.flat(a.unit(TypeTag::LL)), a.flat(a.unit(t)));
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; x++)
        for (int xp = 0; xp < n; xp++) {
          if (find(x) != find(xp)) continue;
          for (int y = 0; y < n; y++)
            for (int yp = 0; yp < n; yp++) {
              if (find(y) != find(yp)) continue;
              auto p = a.try_product(a.unflat(x), a.unflat(y));
              if (!p) continue;
              auto q = a.try_product(a.unflat(xp), a.unflat(yp));
              if (!q) continue;
              int fp = find(a.flat(*p)), fq = find(a.flat(*q));
              if (fp != fq) {
                unite(fp, fq);
                changed = true;
              }
            }
        }
    }
  }
  Consolidation out;
  std::map<int, int> ids;  // uf root -> sg element
  out.class_of.assign(n, -1);
  for (int f = 0; f < n; f++) {
    int r = find(f);
    auto [it, fresh] = ids.emplace(r, static_cast<int>(ids.size()));
    if (fresh) {
      out.rep.push_back(a.unflat(r));
      out.tag_of.push_back(tag_index(a.unflat(r).tag));
    }
    out.class_of[f] = it->second;
    if (tag_index(a.unflat(f).tag) != out.tag_of[it->second]) out.tag_of[it->second] = -2;
  }
  int k = static_cast<int>(ids.size());
  int zero = k;
  out.rep.push_back({TypeTag::LL, -1});
  out.tag_of.push_back(-1);
  out.sg.table.assign(k + 1, std::vector<int>(k + 1, zero));
  // class product: any defined representative pair (consistent by closure)
  std::vector<std::vector<int>> members(k);
  for (int f = 0; f < n; f++) members[out.class_of[f]].push_back(f);
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) {
      int res = zero;
      for (int x : members[i]) {
        for (int y : members[j]) {
          auto p = a.try_product(a.unflat(x), a.unflat(y));
          if (p) {
            int c = out.class_of[a.flat(*p)];
            if (res != zero && res != c) throw Error("Internal", "consolidation product not well-defined");
            res = c;
          }
        }
      }
      out.sg.table[i][j] = res;
    }
  // names
  int unit_class = a.positive ? -1 : out.class_of[a.flat(a.unit(TypeTag::LL))];
  for (int i = 0; i < k; i++) {
    if (i == unit_class)
      out.sg.names.push_back("1");
    else
      out.sg.names.push_back(std::string(tag_name(out.rep[i].tag)) + ":" + a.name(out.rep[i]));
  }
  out.sg.names.push_back("0");
  out.sg.zero = zero;
  out.sg.identity = find_identity(out.sg);
  return out;
}

// ---------------------------------------------------------------------------
// Algebra text format

// Display name in the text format: names are per-tag, so qualify with the
// tag to keep them globally unique as the parser requires.
inline std::string qualified_name(const SyncAlgebra& a, El x) {
  return std::string(tag_name(x.tag)) + ":" + a.name(x);
}

inline std::string print_algebra(const SyncAlgebra& a) {
  std::ostringstream out;
  out << "variant: " << (a.positive ? "positive" : "unital") << "\n";
  for (TypeTag t : all_tags()) {
    out << "elements " << tag_name(t) << ":";
    for (int i = 0; i < a.size(t); i++) out << ' ' << qualified_name(a, {t, i});
    out << '\n';
  }
  if (!a.positive)
    for (TypeTag t : all_tags())
      out << "unit " << tag_name(t) << ": " << qualified_name(a, a.unit(t)) << '\n';
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t))
        for (int i = 0; i < a.size(s); i++)
          for (int j = 0; j < a.size(t); j++)
            out << "prod: " << qualified_name(a, {s, i}) << ' ' << qualified_name(a, {t, j})
                << " = " << qualified_name(a, a.product({s, i}, {t, j})) << '\n';
  for (auto& [x, y] : a.ds.dep)
    out << "dep: " << qualified_name(a, x) << ' ' << qualified_name(a, y) << '\n';
  return out.str();
}

// Element names must be globally unique across tags in the text format.
inline SyncAlgebra parse_algebra(const std::string& text, bool run_validate = true) {
  std::istringstream in(text);
  std::string line;
  SyncAlgebra a;
  bool variant_seen = false;
  std::map<std::string, El> by_name;
  std::vector<std::array<std::string, 3>> prods;  // x y = z
  std::vector<std::array<std::string, 2>> deps;
  std::vector<std::pair<TypeTag, std::string>> units;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto bad = [&](const std::string& msg) { return ParseError("line " + std::to_string(lineno) + ": " + msg); };
    if (key == "variant:") {
      std::string v;
      if (!(ls >> v)) throw bad("missing variant");
      if (v == "unital") a.positive = false;
      else if (v == "positive") a.positive = true;
      else throw bad("variant must be unital|positive");
      variant_seen = true;
    } else if (key == "elements") {
      std::string tagtok;
      if (!(ls >> tagtok) || tagtok.empty() || tagtok.back() != ':') throw bad("expected 'elements <tag>:'");
      auto pt = parse_tag(tagtok.substr(0, tagtok.size() - 1));
      if (!pt) throw bad("unknown tag in " + tagtok);
      TypeTag t = *pt;
      std::string nm;
      while (ls >> nm) {
        if (by_name.count(nm)) throw bad("duplicate element name " + nm);
        by_name[nm] = {t, static_cast<int>(a.ds.names[tag_index(t)].size())};
        a.ds.names[tag_index(t)].push_back(nm);
      }
    } else if (key == "unit") {
      std::string tagtok, nm;
      if (!(ls >> tagtok) || tagtok.empty() || tagtok.back() != ':' || !(ls >> nm))
        throw bad("expected 'unit <tag>: <element>'");
      auto pt = parse_tag(tagtok.substr(0, tagtok.size() - 1));
      if (!pt) throw bad("unknown tag in " + tagtok);
      units.push_back({*pt, nm});
    } else if (key == "prod:") {
      std::string x, y, eq, z;
      if (!(ls >> x >> y >> eq >> z) || eq != "=") throw bad("expected 'prod: x y = z'");
      prods.push_back({x, y, z});
    } else if (key == "dep:") {
      std::string x, y;
      if (!(ls >> x >> y)) throw bad("expected 'dep: x y'");
      deps.push_back({x, y});
    } else {
      throw bad("unknown directive '" + key + "'");
    }
  }
  if (!variant_seen) throw ParseError("missing variant");
  auto el_of = [&](const std::string& nm) {
    auto it = by_name.find(nm);
    if (it == by_name.end()) throw ParseError("unknown element " + nm);
    return it->second;
  };
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t))
        a.prod[tag_index(s)][tag_index(t)].assign(
            static_cast<size_t>(a.size(s)) * a.size(t), -1);
  for (auto& [x, y, z] : prods) {
    El ex = el_of(x), ey = el_of(y), ez = el_of(z);
    auto rt = concat_types(ex.tag, ey.tag);
    if (!rt) throw ParseError("product declared on incompatible tags: " + x + " " + y);
    if (*rt != ez.tag) throw ParseError("product result has wrong tag: " + x + " " + y + " = " + z);
    a.prod[tag_index(ex.tag)][tag_index(ey.tag)][ex.idx * a.size(ey.tag) + ey.idx] = ez.idx;
  }
  for (auto& [x, y] : deps) a.ds.add_dep(el_of(x), el_of(y));
  for (auto& [t, nm] : units) {
    El e = el_of(nm);
    if (e.tag != t) throw ParseError("unit of tag " + std::string(tag_name(t)) + " has wrong tag");
    a.units[tag_index(t)] = e.idx;
  }
  for (TypeTag s : all_tags())
    for (TypeTag t : all_tags())
      if (concat_types(s, t))
        for (int v : a.prod[tag_index(s)][tag_index(t)])
          if (v < 0)
            throw ParseError(std::string("product table incomplete for ") + tag_name(s) + " . " +
                             tag_name(t));
  if (run_validate) {
    auto rep = validate(a);
    if (!rep.empty()) throw Error("InvalidAlgebra", rep.front());
  }
  return a;
}

}  // namespace syncalg
