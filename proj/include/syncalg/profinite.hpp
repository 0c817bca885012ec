#pragma once

// ω-terms, typings, profinite equalities (over monoids/semigroups) and
// profinite dependencies (over synchronous algebras): parsing, evaluation via
// idempotent powers, typing enumeration, induced dependencies, satisfaction.

#include <map>

#include "syncalg/algebra.hpp"
#include "syncalg/core.hpp"
#include "syncalg/semigroup.hpp"

namespace syncalg {

// ---------------------------------------------------------------------------
// ω-terms: variables, binary products (flattened), ω-powers. Non-empty.

struct OmegaTerm {
  enum class Kind { Var, Prod, Omega };
  Kind kind = Kind::Var;
  std::string var;                  // Kind::Var
  std::vector<OmegaTerm> children;  // Prod: >= 2 factors; Omega: exactly 1

  static OmegaTerm make_var(std::string v) {
    OmegaTerm t;
    t.var = std::move(v);
    return t;
  }
  static OmegaTerm make_prod(std::vector<OmegaTerm> fs) {
    if (fs.size() == 1) return fs[0];
    OmegaTerm t;
    t.kind = Kind::Prod;
    t.children = std::move(fs);
    return t;
  }
  static OmegaTerm make_omega(OmegaTerm inner) {
    OmegaTerm t;
    t.kind = Kind::Omega;
    t.children.push_back(std::move(inner));
    return t;
  }
};

inline std::string term_str(const OmegaTerm& t) {
  switch (t.kind) {
    case OmegaTerm::Kind::Var: return t.var;
    case OmegaTerm::Kind::Omega: {
      const OmegaTerm& c = t.children[0];
      std::string inner = term_str(c);
      return c.kind == OmegaTerm::Kind::Var ? inner + "^w" : "(" + inner + ")^w";
    }
    case OmegaTerm::Kind::Prod: {
      std::string out;
      for (size_t i = 0; i < t.children.size(); i++) {
        if (i) out += " ";
        const OmegaTerm& c = t.children[i];
        out += c.kind == OmegaTerm::Kind::Prod ? "(" + term_str(c) + ")" : term_str(c);
      }
      return out;
    }
  }
  return "?";
}

// Variables in order of first occurrence.
inline void collect_variables(const OmegaTerm& t, std::vector<std::string>& out) {
  if (t.kind == OmegaTerm::Kind::Var) {
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
  } else {
    for (const auto& c : t.children) collect_variables(c, out);
  }
}
inline std::vector<std::string> term_variables(const OmegaTerm& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Term text: variables [a-z][a-z0-9]*, product by juxtaposition or `*`,
// ω-power `^w`, parentheses for grouping.

namespace detail {
struct TermParser {
  const std::string& s;
  size_t i = 0;
  explicit TermParser(const std::string& text) : s(text) {}
  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) i++;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      i++;
      return true;
    }
    return false;
  }
  OmegaTerm parse_factor() {
    skip();
    OmegaTerm base;
    if (eat('(')) {
      base = parse_product();
      if (!eat(')')) throw ParseError("expected ')' in term '" + s + "'");
    } else {
      if (i >= s.size() || s[i] < 'a' || s[i] > 'z')
        throw ParseError("expected variable at position " + std::to_string(i) + " in '" + s + "'");
      std::string v;
      v += s[i++];
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= '0' && s[i] <= '9')))
        v += s[i++];
      base = OmegaTerm::make_var(v);
    }
    while (true) {
      skip();
      if (i + 1 < s.size() && s[i] == '^' && s[i + 1] == 'w') {
        i += 2;
        base = OmegaTerm::make_omega(base);
      } else {
        break;
      }
    }
    return base;
  }
  OmegaTerm parse_product() {
    std::vector<OmegaTerm> fs;
    fs.push_back(parse_factor());
    while (true) {
      skip();
      if (i < s.size() && s[i] == '*') {
        i++;
        fs.push_back(parse_factor());
      } else if (i < s.size() && (s[i] == '(' || (s[i] >= 'a' && s[i] <= 'z'))) {
        fs.push_back(parse_factor());
      } else {
        break;
      }
    }
    return OmegaTerm::make_prod(std::move(fs));
  }
};
}  // namespace detail

inline OmegaTerm parse_term(const std::string& text) {
  detail::TermParser p(text);
  OmegaTerm t = p.parse_product();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing input in term '" + text + "'");
  return t;
}

// ---------------------------------------------------------------------------
// Typings

using Typing = std::map<std::string, TypeTag>;

// Derived tag of a term under a typing, if the term type-checks (chain of
// compatible tags; ω only over self-compatible tags).
inline std::optional<TypeTag> term_tag(const OmegaTerm& t, const Typing& typing) {
  switch (t.kind) {
    case OmegaTerm::Kind::Var: {
      auto it = typing.find(t.var);
      if (it == typing.end()) return std::nullopt;
      return it->second;
    }
    case OmegaTerm::Kind::Omega: {
      auto inner = term_tag(t.children[0], typing);
      if (!inner || !self_compatible(*inner)) return std::nullopt;
      return inner;
    }
    case OmegaTerm::Kind::Prod: {
      auto acc = term_tag(t.children[0], typing);
      for (size_t k = 1; acc && k < t.children.size(); k++) {
        auto next = term_tag(t.children[k], typing);
        acc = next ? concat_types(*acc, *next) : std::nullopt;
      }
      return acc;
    }
  }
  return std::nullopt;
}

struct ProfiniteDependency {
  OmegaTerm lhs, rhs;
  Typing typing;
};

inline std::string dependency_str(const ProfiniteDependency& d) {
  std::string out = term_str(d.lhs) + " ~dep " + term_str(d.rhs) + "  [";
  bool first = true;
  for (auto& [v, t] : d.typing) {
    if (!first) out += ", ";
    first = false;
    out += v + ":" + tag_name(t);
  }
  return out + "]";
}

struct EqualitySet {
  std::string name;
  std::vector<std::pair<OmegaTerm, OmegaTerm>> equations;
};

// All typings of the shared variables making both sides type-check.
// Deterministic order: variables by first occurrence (lhs then rhs),
// assignments in lexicographic tag-index order.
inline std::vector<Typing> enumerate_typings(const OmegaTerm& lhs, const OmegaTerm& rhs) {
  std::vector<std::string> vars = term_variables(lhs);
  for (const std::string& v : term_variables(rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::vector<Typing> out;
  std::vector<int> idx(vars.size(), 0);
  while (true) {
    Typing ty;
    for (size_t k = 0; k < vars.size(); k++) ty[vars[k]] = all_tags()[idx[k]];
    if (term_tag(lhs, ty) && term_tag(rhs, ty)) out.push_back(ty);
    size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == kNumTags) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline std::vector<ProfiniteDependency> induced_dependencies(const EqualitySet& e) {
  std::vector<ProfiniteDependency> out;
  std::set<std::string> seen;
  for (auto& [lhs, rhs] : e.equations)
    for (Typing& ty : enumerate_typings(lhs, rhs)) {
      ProfiniteDependency d{lhs, rhs, ty};
      if (seen.insert(dependency_str(d)).second) out.push_back(std::move(d));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

inline int eval_term(const FiniteSemigroup& s, const OmegaTerm& t,
                     const std::map<std::string, int>& assignment) {
  switch (t.kind) {
    case OmegaTerm::Kind::Var: {
      auto it = assignment.find(t.var);
      if (it == assignment.end()) throw Error("UnknownVariable", t.var);
      return it->second;
    }
    case OmegaTerm::Kind::Omega:
      return idempotent_power(s, eval_term(s, t.children[0], assignment));
    case OmegaTerm::Kind::Prod: {
      int v = eval_term(s, t.children[0], assignment);
      for (size_t k = 1; k < t.children.size(); k++)
        v = s.mul(v, eval_term(s, t.children[k], assignment));
      return v;
    }
  }
  throw Error("Internal", "bad term");
}

// Idempotent power inside an underlying semigroup of a synchronous algebra.
inline El idempotent_power(const SyncAlgebra& a, El x) {
  if (!self_compatible(x.tag))
    throw Error("IllTypedTerm",
                std::string("no idempotent power at tag ") + tag_name(x.tag));
  std::map<int, int> seen_at;
  std::vector<int> powers;
  int cur = x.idx;
  while (!seen_at.count(cur)) {
    seen_at[cur] = static_cast<int>(powers.size());
    powers.push_back(cur);
    cur = a.product({x.tag, cur}, x).idx;
  }
  int mu = seen_at[cur];
  int lambda = static_cast<int>(powers.size()) - mu;
  int k = ((mu + 1) + lambda - 1) / lambda * lambda;
  return {x.tag, powers[k - 1]};
}

inline El eval_term(const SyncAlgebra& a, const OmegaTerm& t, const Typing& typing,
                    const std::map<std::string, El>& assignment) {
  if (!term_tag(t, typing)) throw Error("IllTypedTerm", term_str(t));
  switch (t.kind) {
    case OmegaTerm::Kind::Var: {
      auto it = assignment.find(t.var);
      if (it == assignment.end()) throw Error("UnknownVariable", t.var);
      if (it->second.tag != typing.at(t.var))
        throw Error("IllTypedTerm", "assignment violates typing for " + t.var);
      return it->second;
    }
    case OmegaTerm::Kind::Omega:
      return idempotent_power(a, eval_term(a, t.children[0], typing, assignment));
    case OmegaTerm::Kind::Prod: {
      El v = eval_term(a, t.children[0], typing, assignment);
      for (size_t k = 1; k < t.children.size(); k++)
        v = a.product(v, eval_term(a, t.children[k], typing, assignment));
      return v;
    }
  }
  throw Error("Internal", "bad term");
}

// ---------------------------------------------------------------------------
// Satisfaction

struct SatisfactionResult {
  bool holds = true;
  std::optional<std::map<std::string, El>> counterexample;  // lexicographically least
};

inline SatisfactionResult satisfies(const SyncAlgebra& a, const ProfiniteDependency& d,
                                    uint64_t guard = 4'000'000) {
  std::vector<std::string> vars;
  for (auto& [v, t] : d.typing) vars.push_back(v);  // map order = sorted, deterministic
  uint64_t count = 1;
  for (const std::string& v : vars) {
    int n = a.size(d.typing.at(v));
    if (n == 0) return {};  // no assignment exists: vacuously satisfied
    count *= static_cast<uint64_t>(n);
    if (count > guard) throw Error("SizeGuardExceeded", "too many assignments");
  }
  std::vector<int> idx(vars.size(), 0);
  SatisfactionResult out;
  while (true) {
    std::map<std::string, El> asg;
    for (size_t k = 0; k < vars.size(); k++) asg[vars[k]] = {d.typing.at(vars[k]), idx[k]};
    El l = eval_term(a, d.lhs, d.typing, asg);
    El r = eval_term(a, d.rhs, d.typing, asg);
    if (!a.dep(l, r)) {
      out.holds = false;
      out.counterexample = asg;
      return out;
    }
    size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == a.size(d.typing.at(vars[k - 1]))) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

struct SatisfactionResultSg {
  bool holds = true;
  std::optional<std::map<std::string, int>> counterexample;
};

inline SatisfactionResultSg satisfies_eq(const FiniteSemigroup& s, const OmegaTerm& lhs,
                                         const OmegaTerm& rhs, uint64_t guard = 4'000'000) {
  std::vector<std::string> vars = term_variables(lhs);
  for (const std::string& v : term_variables(rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  uint64_t count = 1;
  for (size_t k = 0; k < vars.size(); k++) {
    if (s.size() == 0) return {};
    count *= static_cast<uint64_t>(s.size());
    if (count > guard) throw Error("SizeGuardExceeded", "too many assignments");
  }
  std::vector<int> idx(vars.size(), 0);
  SatisfactionResultSg out;
  while (true) {
    std::map<std::string, int> asg;
    for (size_t k = 0; k < vars.size(); k++) asg[vars[k]] = idx[k];
    if (eval_term(s, lhs, asg) != eval_term(s, rhs, asg)) {
      out.holds = false;
      out.counterexample = asg;
      return out;
    }
    size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == s.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline SatisfactionResultSg satisfies_all_eq(const FiniteSemigroup& s, const EqualitySet& e) {
  for (auto& [lhs, rhs] : e.equations) {
    auto r = satisfies_eq(s, lhs, rhs);
    if (!r.holds) return r;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Built-in equality sets and the equation file format:
// optional `variety: <name>` header, then one `lhs = rhs` per line.

inline EqualitySet builtin_equality_set(const std::string& name) {
  auto eq = [](const std::string& l, const std::string& r) {
    return std::pair{parse_term(l), parse_term(r)};
  };
  if (name == "groups") return {name, {eq("x^w y", "y"), eq("y x^w", "y")}};
  if (name == "commutative") return {name, {eq("x y", "y x")}};
  if (name == "aperiodic") return {name, {eq("x^w x", "x^w")}};
  if (name == "nilpotent") return {name, {eq("x^w y", "x^w"), eq("y x^w", "x^w")}};
  if (name == "loctriv") return {name, {eq("x^w y z^w", "x^w z^w")}};
  if (name == "loctriv-weak") return {name, {eq("x^w y x^w", "x^w")}};
  throw Error("UnknownVariety", name);
}

inline EqualitySet parse_equality_set(const std::string& text) {
  EqualitySet out;
  out.name = "custom";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line.compare(b, 8, "variety:") == 0) {
      std::istringstream ls(line.substr(b + 8));
      ls >> out.name;
      continue;
    }
    auto eqpos = line.find('=');
    if (eqpos == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'lhs = rhs'");
    out.equations.push_back({parse_term(line.substr(0, eqpos)), parse_term(line.substr(eqpos + 1))});
  }
  return out;
}

}  // namespace syncalg
