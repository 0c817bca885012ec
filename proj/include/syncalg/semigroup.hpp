#pragma once

// Finite semigroups and monoids: multiplication tables, transition
// monoids/semigroups of DFAs (= syntactic objects of their languages),
// idempotent powers, structural predicates, and a small-order catalog.

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "syncalg/automaton.hpp"
#include "syncalg/core.hpp"

namespace syncalg {

struct FiniteSemigroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[x][y] = x*y
  int identity = -1;                    // -1 if none designated
  int zero = -1;                        // -1 if none designated

  int size() const { return static_cast<int>(names.size()); }
  int mul(int x, int y) const { return table[x][y]; }
  bool is_monoid() const { return identity >= 0; }
};
using FiniteMonoid = FiniteSemigroup;  // identity designated

inline std::optional<std::array<int, 3>> associativity_witness(const FiniteSemigroup& s) {
  int n = s.size();
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      for (int z = 0; z < n; z++)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}
inline bool is_associative(const FiniteSemigroup& s) { return !associativity_witness(s); }

inline int find_identity(const FiniteSemigroup& s) {
  for (int e = 0; e < s.size(); e++) {
    bool ok = true;
    for (int x = 0; x < s.size() && ok; x++)
      if (s.mul(e, x) != x || s.mul(x, e) != x) ok = false;
    if (ok) return e;
  }
  return -1;
}
inline int find_zero(const FiniteSemigroup& s) {
  for (int z = 0; z < s.size(); z++) {
    bool ok = true;
    for (int x = 0; x < s.size() && ok; x++)
      if (s.mul(z, x) != z || s.mul(x, z) != z) ok = false;
    if (ok) return z;
  }
  return -1;
}

// The unique idempotent in {x, x^2, x^3, ...}.
inline int idempotent_power(const FiniteSemigroup& s, int x) {
  // find cycle of the power sequence
  std::vector<int> seen_at(s.size(), -1);
  std::vector<int> powers;  // powers[k] = x^{k+1}
  int cur = x;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(powers.size());
    powers.push_back(cur);
    cur = s.mul(cur, x);
  }
  int mu = seen_at[cur];                                  // x^{mu+1} first repeated
  int lambda = static_cast<int>(powers.size()) - mu;      // cycle length
  // the idempotent is x^k with k in the cycle and k ≡ 0 mod lambda
  int k = ((mu + 1) + lambda - 1) / lambda * lambda;      // smallest multiple of lambda ≥ mu+1
  return powers[k - 1];
}

inline bool is_group(const FiniteSemigroup& s) {
  int e = find_identity(s);
  if (e < 0) return false;
  for (int x = 0; x < s.size(); x++) {
    bool inv = false;
    for (int y = 0; y < s.size(); y++)
      if (s.mul(x, y) == e && s.mul(y, x) == e) inv = true;
    if (!inv) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transition monoid / semigroup of a complete DFA. When the DFA is minimal,
// this is the syntactic monoid (resp. semigroup) of its language.

enum class SyntMode { MonoidMode, SemigroupMode };

struct TransitionAlgebraResult {
  FiniteSemigroup sg;
  std::vector<int> letter_map;       // letter index -> element
  std::vector<bool> accepting;       // element maps initial into finals
  std::vector<std::vector<int>> fn;  // element -> state transition function
  std::vector<PairedWord> witness;   // shortest word realizing each element
};

inline TransitionAlgebraResult transition_algebra(const SyncAutomaton& dfa, SyntMode mode) {
  if (!dfa.deterministic() || !dfa.complete())
    throw Error("NotDeterministicComplete", "transition algebra needs a complete DFA");
  int n = dfa.num_states();
  TransitionAlgebraResult out;
  std::map<std::vector<int>, int> ids;
  std::deque<int> todo;
  auto add = [&](const std::vector<int>& f, const PairedWord& w) -> std::pair<int, bool> {
    auto [it, fresh] = ids.emplace(f, static_cast<int>(ids.size()));
    if (fresh) {
      out.fn.push_back(f);
      out.witness.push_back(w);
      todo.push_back(it->second);
    }
    return {it->second, fresh};
  };
  if (mode == SyntMode::MonoidMode) {
    std::vector<int> idf(n);
    for (int q = 0; q < n; q++) idf[q] = q;
    add(idf, {});
  }
  out.letter_map.resize(dfa.num_letters());
  for (int li = 0; li < dfa.num_letters(); li++) {
    std::vector<int> f(n);
    for (int q = 0; q < n; q++) f[q] = dfa.step(q, li);
    out.letter_map[li] = add(f, {dfa.letters[li]}).first;
  }
  // BFS closure under right multiplication by letters (words in shortest-first,
  // letter-order; first witness found is shortest-then-least)
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    std::vector<int> f = out.fn[id];  // copy: out.fn may reallocate
    PairedWord w = out.witness[id];
    for (int li = 0; li < dfa.num_letters(); li++) {
      std::vector<int> g(n);
      for (int q = 0; q < n; q++) g[q] = dfa.step(f[q], li);
      PairedWord wl = w;
      wl.push_back(dfa.letters[li]);
      add(g, wl);
    }
  }
  int m = static_cast<int>(out.fn.size());
  out.sg.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      std::vector<int> h(n);
      for (int q = 0; q < n; q++) h[q] = out.fn[j][out.fn[i][q]];  // first i, then j
      out.sg.table[i][j] = ids.at(h);
    }
  for (int i = 0; i < m; i++) out.sg.names.push_back(word_str(out.witness[i]));
  out.sg.identity = find_identity(out.sg);
  out.sg.zero = find_zero(out.sg);
  out.accepting.assign(m, false);
  int q0 = dfa.initial[0];
  for (int i = 0; i < m; i++) out.accepting[i] = dfa.final_states[out.fn[i][q0]];
  return out;
}

// ---------------------------------------------------------------------------
// Small catalogs

inline FiniteSemigroup cyclic_group(int k) {
  FiniteSemigroup s;
  for (int i = 0; i < k; i++) s.names.push_back("g" + std::to_string(i));
  s.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) s.table[i][j] = (i + j) % k;
  s.identity = 0;
  if (k == 1) s.zero = 0;
  return s;
}

inline FiniteSemigroup left_zero_semigroup(int k) {
  FiniteSemigroup s;
  for (int i = 0; i < k; i++) s.names.push_back("l" + std::to_string(i));
  s.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) s.table[i][j] = i;
  return s;
}

// Monogenic semigroup with index i and period p: elements x, x^2, ..., x^{i+p-1}.
inline FiniteSemigroup monogenic(int index, int period) {
  int n = index + period - 1;
  FiniteSemigroup s;
  for (int k = 1; k <= n; k++) s.names.push_back("x" + std::to_string(k));
  s.table.assign(n, std::vector<int>(n));
  auto norm = [&](int e) {  // exponent -> element id
    while (e > n) e -= period;
    return e - 1;
  };
  for (int a = 1; a <= n; a++)
    for (int b = 1; b <= n; b++) s.table[a - 1][b - 1] = norm(a + b);
  s.identity = find_identity(s);
  s.zero = find_zero(s);
  return s;
}

// Brandt semigroup B2: five elements {a, b, ab, ba, 0}.
inline FiniteSemigroup brandt_b2() {
  FiniteSemigroup s;
  s.names = {"a", "b", "ab", "ba", "0"};
  const int A = 0, B = 1, AB = 2, BA = 3, Z = 4;
  s.table.assign(5, std::vector<int>(5, Z));
  s.table[A][B] = AB;  s.table[B][A] = BA;
  s.table[A][BA] = A;  s.table[AB][A] = A;
  s.table[B][AB] = B;  s.table[BA][B] = B;
  s.table[AB][AB] = AB;
  s.table[BA][BA] = BA;
  s.zero = Z;
  return s;
}

// Every associative multiplication table on {0..n-1} (labeled), by
// backtracking with eager associativity pruning. Feasible through n = 4
// (1, 8, 113, 3492 tables).
inline std::vector<FiniteSemigroup> all_semigroups(int n) {
  std::vector<FiniteSemigroup> out;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  // prune: reject as soon as some fully-determined triple breaks associativity
  auto ok = [&]() {
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++) {
        int xy = t[x][y];
        if (xy < 0) continue;
        for (int z = 0; z < n; z++) {
          int yz = t[y][z];
          if (yz < 0) continue;
          int l = t[xy][z], r = t[x][yz];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  };
  std::function<void(int)> rec = [&](int cell) {
    if (cell == n * n) {
      FiniteSemigroup s;
      for (int i = 0; i < n; i++) s.names.push_back("e" + std::to_string(i));
      s.table = t;
      s.identity = find_identity(s);
      s.zero = find_zero(s);
      out.push_back(std::move(s));
      return;
    }
    int i = cell / n, j = cell % n;
    for (int v = 0; v < n; v++) {
      t[i][j] = v;
      if (ok()) rec(cell + 1);
    }
    t[i][j] = -1;
  };
  rec(0);
  return out;
}

}  // namespace syncalg
