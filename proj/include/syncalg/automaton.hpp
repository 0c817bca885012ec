#pragma once

// Finite automata over the paired alphabet: construction, Boolean algebra,
// subset construction and minimization with canonical numbering, the
// well-formedness filter, relation semantics, permutation test, and the
// 3-track composition of relations.

#include <deque>
#include <map>
#include <queue>
#include <sstream>

#include "syncalg/core.hpp"

namespace syncalg {

struct SyncAutomaton {
  std::string alphabet;                   // sorted, unique base letters
  std::vector<PairedLetter> letters;      // paired alphabet, canonical order
  std::vector<std::string> state_names;
  std::vector<int> initial;               // sorted state set
  std::vector<bool> final_states;
  // delta[state][letter] = sorted list of target states
  std::vector<std::vector<std::vector<int>>> delta;

  int num_states() const { return static_cast<int>(state_names.size()); }
  int num_letters() const { return static_cast<int>(letters.size()); }

  int letter_index(PairedLetter l) const {
    auto it = std::lower_bound(letters.begin(), letters.end(), l);
    if (it == letters.end() || !(*it == l))
      throw Error("UnknownLetter", letter_str(l) + " not over alphabet '" + alphabet + "'");
    return static_cast<int>(it - letters.begin());
  }

  bool deterministic() const {
    if (initial.size() != 1) return false;
    for (auto& row : delta)
      for (auto& ts : row)
        if (ts.size() > 1) return false;
    return true;
  }
  bool complete() const {
    for (auto& row : delta)
      for (auto& ts : row)
        if (ts.empty()) return false;
    return !initial.empty();
  }

  int add_state(const std::string& name) {
    state_names.push_back(name);
    final_states.push_back(false);
    delta.emplace_back(letters.size());
    return num_states() - 1;
  }
  void add_trans(int from, PairedLetter l, int to) {
    auto& ts = delta[from][letter_index(l)];
    auto it = std::lower_bound(ts.begin(), ts.end(), to);
    if (it == ts.end() || *it != to) ts.insert(it, to);
  }
  // Deterministic step; requires a complete DFA.
  int step(int q, int li) const { return delta[q][li][0]; }
};

inline SyncAutomaton make_automaton(const std::string& sigma) {
  SyncAutomaton a;
  a.alphabet = sigma;
  std::sort(a.alphabet.begin(), a.alphabet.end());
  a.alphabet.erase(std::unique(a.alphabet.begin(), a.alphabet.end()), a.alphabet.end());
  a.letters = paired_alphabet(a.alphabet);
  return a;
}

enum class Mode { Star, Plus };

// A relation: the automaton's paired-alphabet language intersected with
// well-formed words; Plus mode additionally excludes the pair (eps, eps).
struct RelationHandle {
  SyncAutomaton aut;
  Mode mode = Mode::Star;
};

// ---------------------------------------------------------------------------
// Language primitives

inline bool accepts(const SyncAutomaton& a, const PairedWord& w) {
  std::vector<bool> cur(a.num_states(), false);
  for (int q : a.initial) cur[q] = true;
  for (PairedLetter l : w) {
    int li = a.letter_index(l);
    std::vector<bool> nxt(a.num_states(), false);
    for (int q = 0; q < a.num_states(); q++)
      if (cur[q])
        for (int t : a.delta[q][li]) nxt[t] = true;
    cur = std::move(nxt);
  }
  for (int q = 0; q < a.num_states(); q++)
    if (cur[q] && a.final_states[q]) return true;
  return false;
}

inline bool accepts_pair(const RelationHandle& r, const std::string& u, const std::string& v) {
  if (r.mode == Mode::Plus && u.empty() && v.empty()) return false;
  return accepts(r.aut, encode_pair(u, v).word);
}

// Subset construction; result is a complete DFA (empty subset = sink).
inline SyncAutomaton determinize(const SyncAutomaton& a) {
  SyncAutomaton d = make_automaton(a.alphabet);
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> todo;
  auto intern = [&](std::vector<int> s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(ids.size()));
    if (fresh) {
      d.add_state("s" + std::to_string(it->second));
      for (int q : s)
        if (a.final_states[q]) d.final_states[it->second] = true;
      todo.push_back(std::move(s));
    }
    return it->second;
  };
  d.initial = {intern(a.initial)};
  while (!todo.empty()) {
    std::vector<int> s = todo.front();
    todo.pop_front();
    int sid = ids[s];
    for (int li = 0; li < a.num_letters(); li++) {
      std::vector<int> t;
      for (int q : s)
        for (int x : a.delta[q][li]) t.push_back(x);
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      d.delta[sid][li] = {intern(std::move(t))};
    }
  }
  return d;
}

// Moore partition refinement on a complete DFA, then canonical BFS numbering
// from the initial state with letters in canonical order, so equal languages
// yield identical tables.
inline SyncAutomaton minimize_dfa(const SyncAutomaton& d) {
  int n = d.num_states(), m = d.num_letters();
  std::vector<int> cls(n);
  for (int q = 0; q < n; q++) cls[q] = d.final_states[q] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n);
    for (int q = 0; q < n; q++) {
      std::vector<int> sig{cls[q]};
      for (int li = 0; li < m; li++) sig.push_back(cls[d.step(q, li)]);
      auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next[q] = it->second;
    }
    bool changed = false;
    for (int q = 0; q < n; q++)
      if (next[q] != cls[q]) changed = true;
    cls = std::move(next);
    if (!changed) break;
  }
  // BFS renumber over classes
  std::vector<int> order(n, -1);  // class id -> new id (indexed by class rep)
  std::map<int, int> renum;
  std::queue<int> bfs;
  auto visit = [&](int c) {
    if (!renum.count(c)) {
      renum[c] = static_cast<int>(renum.size());
      bfs.push(c);
    }
  };
  std::vector<int> rep(n, -1);  // class -> some state
  for (int q = 0; q < n; q++)
    if (rep[cls[q]] < 0) rep[cls[q]] = q;
  visit(cls[d.initial[0]]);
  SyncAutomaton out = make_automaton(d.alphabet);
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop();
    for (int li = 0; li < m; li++) visit(cls[d.step(rep[c], li)]);
  }
  (void)order;
  int k = static_cast<int>(renum.size());
  for (int i = 0; i < k; i++) out.add_state("q" + std::to_string(i));
  out.initial = {renum[cls[d.initial[0]]]};
  for (auto& [c, id] : renum) {
    out.final_states[id] = d.final_states[rep[c]];
    for (int li = 0; li < m; li++) out.delta[id][li] = {renum[cls[d.step(rep[c], li)]]};
  }
  return out;
}

inline SyncAutomaton determinize_minimize(const SyncAutomaton& a) {
  return minimize_dfa(determinize(a));
}

// Complete-DFA product with a boolean combiner on acceptance.
template <typename F>
inline SyncAutomaton product_dfa(const SyncAutomaton& a, const SyncAutomaton& b, F&& accept) {
  if (a.alphabet != b.alphabet) throw Error("AlphabetMismatch", a.alphabet + " vs " + b.alphabet);
  SyncAutomaton p = make_automaton(a.alphabet);
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> todo;
  auto intern = [&](std::pair<int, int> s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(ids.size()));
    if (fresh) {
      p.add_state("s" + std::to_string(it->second));
      p.final_states[it->second] = accept(a.final_states[s.first], b.final_states[s.second]);
      todo.push_back(s);
    }
    return it->second;
  };
  p.initial = {intern({a.initial[0], b.initial[0]})};
  while (!todo.empty()) {
    auto [qa, qb] = todo.front();
    todo.pop_front();
    int sid = ids[{qa, qb}];
    for (int li = 0; li < p.num_letters(); li++)
      p.delta[sid][li] = {intern({a.step(qa, li), b.step(qb, li)})};
  }
  return p;
}

inline SyncAutomaton complement_dfa(SyncAutomaton d) {
  for (int q = 0; q < d.num_states(); q++) d.final_states[q] = !d.final_states[q];
  return d;
}

// Minimal DFA of the well-formed words over sigma: neutral / right-padding /
// left-padding plus a sink (4 states in total).
inline SyncAutomaton wf_automaton(const std::string& sigma) {
  SyncAutomaton a = make_automaton(sigma);
  int neutral = a.add_state("neutral");
  int rpad = a.add_state("rpad");
  int lpad = a.add_state("lpad");
  int sink = a.add_state("sink");
  a.initial = {neutral};
  a.final_states = {true, true, true, false};
  for (PairedLetter l : a.letters) {
    TypeTag lt = letter_type(l);
    a.add_trans(neutral, l, lt == TypeTag::LL ? neutral : (lt == TypeTag::LB ? rpad : lpad));
    a.add_trans(rpad, l, lt == TypeTag::LB ? rpad : sink);
    a.add_trans(lpad, l, lt == TypeTag::BL ? lpad : sink);
    a.add_trans(sink, l, sink);
  }
  return minimize_dfa(a);
}

// DFA for non-empty words (used to realize Plus-mode semantics in language
// comparisons; membership itself handles Plus by the (eps,eps) test).
inline SyncAutomaton nonempty_automaton(const std::string& sigma) {
  SyncAutomaton a = make_automaton(sigma);
  int s0 = a.add_state("e"), s1 = a.add_state("ne");
  a.initial = {s0};
  a.final_states = {false, true};
  for (PairedLetter l : a.letters) {
    a.add_trans(s0, l, s1);
    a.add_trans(s1, l, s1);
  }
  return a;
}

// Minimal DFA of the handle's exact pair language: L(aut) intersected with WF
// (and with non-empty words in Plus mode).
inline SyncAutomaton relation_dfa(const RelationHandle& r) {
  SyncAutomaton d = product_dfa(determinize(r.aut), wf_automaton(r.aut.alphabet),
                                [](bool x, bool y) { return x && y; });
  if (r.mode == Mode::Plus)
    d = product_dfa(d, determinize(nonempty_automaton(r.aut.alphabet)),
                    [](bool x, bool y) { return x && y; });
  return minimize_dfa(d);
}

// ---------------------------------------------------------------------------
// Boolean algebra on relations

enum class BoolOp { Union, Intersection, Complement, Difference };

inline RelationHandle boolean_combine(BoolOp op, const RelationHandle& a,
                                      const RelationHandle* b = nullptr) {
  if (b && a.mode != b->mode) throw Error("ModeMismatch", "star vs plus");
  SyncAutomaton da = relation_dfa(a);
  SyncAutomaton res;
  switch (op) {
    case BoolOp::Complement:
      // relative to all pairs (Star) or all pairs but (eps,eps) (Plus)
      res = complement_dfa(da);
      break;
    case BoolOp::Union:
      res = product_dfa(da, relation_dfa(*b), [](bool x, bool y) { return x || y; });
      break;
    case BoolOp::Intersection:
      res = product_dfa(da, relation_dfa(*b), [](bool x, bool y) { return x && y; });
      break;
    case BoolOp::Difference:
      res = product_dfa(da, relation_dfa(*b), [](bool x, bool y) { return x && !y; });
      break;
  }
  RelationHandle out{product_dfa(res, wf_automaton(a.aut.alphabet),
                                 [](bool x, bool y) { return x && y; }),
                     a.mode};
  if (a.mode == Mode::Plus)
    out.aut = product_dfa(out.aut, determinize(nonempty_automaton(a.aut.alphabet)),
                          [](bool x, bool y) { return x && y; });
  out.aut = minimize_dfa(out.aut);
  return out;
}

// ---------------------------------------------------------------------------
// Comparison with shortest witnesses

struct CompareResult {
  bool holds = false;
  std::optional<std::pair<std::string, std::string>> witness;  // decoded pair
};

// Shortest (then letter-order-least) accepted word of a complete DFA.
inline std::optional<PairedWord> shortest_accepted(const SyncAutomaton& d) {
  int n = d.num_states();
  std::vector<int> pred(n, -1), pletter(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  int start = d.initial[0];
  seen[start] = true;
  q.push(start);
  int hit = d.final_states[start] ? start : -1;
  while (hit < 0 && !q.empty()) {
    int s = q.front();
    q.pop();
    for (int li = 0; li < d.num_letters() && hit < 0; li++) {
      int t = d.step(s, li);
      if (!seen[t]) {
        seen[t] = true;
        pred[t] = s;
        pletter[t] = li;
        if (d.final_states[t]) hit = t;
        q.push(t);
      }
    }
  }
  if (hit < 0) return std::nullopt;
  PairedWord w;
  for (int s = hit; pred[s] >= 0; s = pred[s]) w.push_back(d.letters[pletter[s]]);
  std::reverse(w.begin(), w.end());
  return w;
}

enum class CompareKind { Empty, Universal, Included, Equivalent };

inline CompareResult compare(CompareKind kind, const RelationHandle& a,
                             const RelationHandle* b = nullptr) {
  auto witness_of = [&](const SyncAutomaton& d) -> CompareResult {
    auto w = shortest_accepted(d);
    if (!w) return {true, std::nullopt};
    Classified c = classify_word(*w);
    return {false, std::make_pair(c.left, c.right)};
  };
  SyncAutomaton da = relation_dfa(a);
  switch (kind) {
    case CompareKind::Empty:
      return witness_of(da);
    case CompareKind::Universal: {
      RelationHandle univ{wf_automaton(a.aut.alphabet), a.mode};
      SyncAutomaton missing = relation_dfa(boolean_combine(BoolOp::Difference, univ, &a));
      return witness_of(missing);
    }
    case CompareKind::Included: {
      SyncAutomaton extra = relation_dfa(boolean_combine(BoolOp::Difference, a, b));
      return witness_of(extra);
    }
    case CompareKind::Equivalent: {
      CompareResult r1 = compare(CompareKind::Included, a, b);
      if (!r1.holds) return r1;
      return compare(CompareKind::Included, *b, &a);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Enumeration

// All member pairs with |u|+|v| <= max_total_len, ordered by total length,
// then |v|, then u, then v.
inline std::vector<std::pair<std::string, std::string>> enumerate_pairs(
    const RelationHandle& r, int max_total_len, int hard_cap = 12) {
  if (max_total_len > hard_cap) throw Error("BoundExceeded", "max_total_len > " + std::to_string(hard_cap));
  std::vector<std::string> words_by_len_cache;
  auto words_of_len = [&](int len) {
    std::vector<std::string> out{""};
    for (int i = 0; i < len; i++) {
      std::vector<std::string> nxt;
      for (auto& w : out)
        for (char c : r.aut.alphabet) nxt.push_back(w + c);
      out = std::move(nxt);
    }
    return out;
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (int total = 0; total <= max_total_len; total++)
    for (int lv = 0; lv <= total; lv++)
      for (auto& u : words_of_len(total - lv))
        for (auto& v : words_of_len(lv))
          if (accepts_pair(r, u, v)) out.push_back({u, v});
  return out;
}

// ---------------------------------------------------------------------------
// Permutation automata

inline bool is_permutation_automaton(const SyncAutomaton& a) {
  if (!a.deterministic() || !a.complete())
    throw Error("NotDeterministicComplete", "permutation test needs a complete DFA");
  for (int li = 0; li < a.num_letters(); li++) {
    std::vector<bool> hit(a.num_states(), false);
    for (int q = 0; q < a.num_states(); q++) {
      int t = a.step(q, li);
      if (hit[t]) return false;
      hit[t] = true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Composition of relations (3-track product-projection)
//
// (u,w) is in R.S iff some middle word v has (u,v) in R and (v,w) in S. The
// product runs WF-filtered copies of both automata: on an output letter (x,z)
// it guesses the middle symbol y and advances the R-track by (x,y) and the
// S-track by (y,z); a track whose input is exhausted (both its components
// padded) must sit in an accepting state and parks in a DONE flag. Middle
// symbols outliving both u and w are consumed by epsilon moves reading
// ((_,y),(y,_)); filtering each track by WF beforehand makes those moves sound
// anywhere (a track cannot resume after padding). Result is intersected with
// WF and minimized.

inline RelationHandle compose_relations(const RelationHandle& r, const RelationHandle& s) {
  if (r.aut.alphabet != s.aut.alphabet)
    throw Error("AlphabetMismatch", r.aut.alphabet + " vs " + s.aut.alphabet);
  const std::string& sigma = r.aut.alphabet;
  SyncAutomaton dr = relation_dfa(r), ds = relation_dfa(s);
  int nr = dr.num_states(), ns = ds.num_states();
  const int DONE_R = nr, DONE_S = ns;

  // step of a track on a possibly fully-padded letter; -1 = reject
  auto track_step = [](const SyncAutomaton& d, int done_id, int q, char a, char b) -> int {
    if (a == kPad && b == kPad) {
      if (q == done_id) return done_id;
      return d.final_states[q] ? done_id : -1;
    }
    if (q == done_id) return -1;
    return d.step(q, d.letter_index({a, b}));
  };

  // NFA with epsilon moves over product states
  int n = (nr + 1) * (ns + 1);
  auto id = [&](int p, int q) { return p * (ns + 1) + q; };
  std::vector<std::vector<int>> eps(n);
  SyncAutomaton prod = make_automaton(sigma);
  for (int p = 0; p <= nr; p++)
    for (int q = 0; q <= ns; q++)
      prod.add_state("p" + std::to_string(p) + "_" + std::to_string(q));
  prod.initial = {id(dr.initial[0], ds.initial[0])};
  for (int p = 0; p <= nr; p++)
    for (int q = 0; q <= ns; q++) {
      bool fr = (p == DONE_R) || (p < nr && dr.final_states[p]);
      bool fs = (q == DONE_S) || (q < ns && ds.final_states[q]);
      prod.final_states[id(p, q)] = fr && fs;
      std::string mids = sigma + kPad;
      for (PairedLetter out : prod.letters)
        for (char y : mids) {
          int p2 = track_step(dr, DONE_R, p, out.left, y);
          if (p2 < 0) continue;
          int q2 = track_step(ds, DONE_S, q, y, out.right);
          if (q2 < 0) continue;
          prod.add_trans(id(p, q), out, id(p2, q2));
        }
      for (char y : sigma) {  // middle-only saturation: no output letter
        if (p == DONE_R || q == DONE_S) continue;
        int p2 = dr.step(p, dr.letter_index({kPad, y}));
        int q2 = ds.step(q, ds.letter_index({y, kPad}));
        eps[id(p, q)].push_back(id(p2, q2));
      }
    }

  // eliminate epsilon moves: transitive closure, fold into transitions/finals
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; i++) {
    std::vector<int> stack{i};
    reach[i][i] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : eps[x])
        if (!reach[i][y]) { reach[i][y] = true; stack.push_back(y); }
    }
  }
  SyncAutomaton nfa = make_automaton(sigma);
  for (int i = 0; i < n; i++) nfa.add_state(prod.state_names[i]);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++)
      if (reach[i][j]) {
        if (prod.final_states[j]) nfa.final_states[i] = true;
        for (int li = 0; li < prod.num_letters(); li++)
          for (int t : prod.delta[j][li])
            for (int k = 0; k < n; k++)
              if (reach[t][k]) nfa.delta[i][li].push_back(k);
      }
    for (auto& ts : nfa.delta[i]) {
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
  }
  nfa.initial = prod.initial;

  Mode mode = (r.mode == Mode::Star && s.mode == Mode::Star) ? Mode::Star : Mode::Plus;
  RelationHandle out{nfa, mode};
  out.aut = relation_dfa(out);
  return out;
}

// ---------------------------------------------------------------------------
// Text format and DOT export

// Directives: alphabet, mode (optional, default star), states, initial,
// final, trans; '#' starts a comment.
inline RelationHandle parse_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string sigma;
  Mode mode = Mode::Star;
  std::vector<std::string> states, initial, finals;
  std::vector<std::array<std::string, 3>> trans;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto want = [&](const char* what) {
      std::string v;
      if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": missing " + what);
      return v;
    };
    if (key == "alphabet:") {
      std::string tok;
      while (ls >> tok) {
        if (tok.size() != 1 || tok[0] == kPad)
          throw ParseError("line " + std::to_string(lineno) +
                           ": letters must be single characters other than '_'");
        sigma += tok[0];
      }
    } else if (key == "mode:") {
      std::string v = want("mode");
      if (v == "star") mode = Mode::Star;
      else if (v == "plus") mode = Mode::Plus;
      else throw ParseError("line " + std::to_string(lineno) + ": mode must be star|plus");
    } else if (key == "states:") {
      std::string tok;
      while (ls >> tok) states.push_back(tok);
    } else if (key == "initial:") {
      std::string tok;
      while (ls >> tok) initial.push_back(tok);
    } else if (key == "final:") {
      std::string tok;
      while (ls >> tok) finals.push_back(tok);
    } else if (key == "trans:") {
      std::string from = want("source state"), lt = want("letter"), to = want("target state");
      trans.push_back({from, lt, to});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + key + "'");
    }
  }
  if (sigma.empty()) throw ParseError("missing alphabet");
  SyncAutomaton a = make_automaton(sigma);
  std::map<std::string, int> sid;
  for (auto& s : states) {
    if (sid.count(s)) throw ParseError("duplicate state " + s);
    sid[s] = a.add_state(s);
  }
  auto state_of = [&](const std::string& s) {
    auto it = sid.find(s);
    if (it == sid.end()) throw ParseError("unknown state " + s);
    return it->second;
  };
  for (auto& s : initial) a.initial.push_back(state_of(s));
  std::sort(a.initial.begin(), a.initial.end());
  a.initial.erase(std::unique(a.initial.begin(), a.initial.end()), a.initial.end());
  for (auto& s : finals) a.final_states[state_of(s)] = true;
  for (auto& [from, lt, to] : trans) {
    PairedWord w = parse_paired_word(lt);
    if (w.size() != 1) throw ParseError("transition letter must be a single pair: " + lt);
    a.add_trans(state_of(from), w[0], state_of(to));  // letter_index rejects foreign letters
  }
  if (a.initial.empty()) throw ParseError("missing initial state");
  return {a, mode};
}

inline std::string print_automaton(const RelationHandle& r) {
  std::ostringstream out;
  out << "alphabet:";
  for (char c : r.aut.alphabet) out << ' ' << c;
  out << "\nmode: " << (r.mode == Mode::Star ? "star" : "plus") << "\nstates:";
  for (auto& s : r.aut.state_names) out << ' ' << s;
  out << "\ninitial:";
  for (int q : r.aut.initial) out << ' ' << r.aut.state_names[q];
  out << "\nfinal:";
  for (int q = 0; q < r.aut.num_states(); q++)
    if (r.aut.final_states[q]) out << ' ' << r.aut.state_names[q];
  out << '\n';
  for (int q = 0; q < r.aut.num_states(); q++)
    for (int li = 0; li < r.aut.num_letters(); li++)
      for (int t : r.aut.delta[q][li])
        out << "trans: " << r.aut.state_names[q] << ' ' << letter_str(r.aut.letters[li])
            << ' ' << r.aut.state_names[t] << '\n';
  return out.str();
}

inline std::string to_dot(const SyncAutomaton& a) {
  std::ostringstream out;
  out << "digraph sync {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int q = 0; q < a.num_states(); q++)
    out << "  q" << q << " [label=\"" << a.state_names[q] << "\", shape="
        << (a.final_states[q] ? "doublecircle" : "circle") << "];\n";
  for (int q : a.initial) out << "  init -> q" << q << ";\n";
  for (int q = 0; q < a.num_states(); q++)
    for (int li = 0; li < a.num_letters(); li++)
      for (int t : a.delta[q][li])
        out << "  q" << q << " -> q" << t << " [label=\""
            << letter_str(a.letters[li]) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace syncalg
