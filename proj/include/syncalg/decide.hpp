#pragma once

// Decision procedures for V-relation membership: the monoid lifting route
// (unital algebras, *-pseudovarieties), the induced-dependency route
// (positive algebras, +-pseudovarieties), and the Henckell pointlike route
// through the consolidation.

#include "syncalg/algebra.hpp"
#include "syncalg/profinite.hpp"
#include "syncalg/syntactic.hpp"

namespace syncalg {

enum class VarietyKind { MonoidVariety, SemigroupVariety };
enum class Method { MonoidLifting, InducedDependencies, Pointlikes };

struct VarietySpec {
  std::string name;
  VarietyKind kind = VarietyKind::SemigroupVariety;
  EqualitySet equalities;
  bool henckell_trusted = false;  // whether Cl_E is known exact for this E
};

struct Verdict {
  bool is_v_relation = false;
  Method method = Method::MonoidLifting;
  std::string evidence;    // present whenever is_v_relation is false
  bool sound_only = false; // dependency/pointlike route without Henckell backing
};

inline VarietySpec builtin_variety(const std::string& name) {
  VarietySpec v;
  v.name = name;
  v.equalities = builtin_equality_set(name);
  if (name == "groups" || name == "commutative" || name == "aperiodic")
    v.kind = VarietyKind::MonoidVariety;
  else
    v.kind = VarietyKind::SemigroupVariety;
  v.henckell_trusted = (name == "aperiodic");
  return v;
}

inline std::vector<std::string> builtin_variety_names() {
  return {"groups", "commutative", "aperiodic", "nilpotent", "loctriv", "loctriv-weak"};
}

// ---------------------------------------------------------------------------
// Monoid lifting: R is a V-relation (V a *-pseudovariety) iff all underlying
// monoids of its unital syntactic synchronous algebra are in V.

inline Verdict decide_monoid_lifting(const RelationHandle& r, const VarietySpec& v) {
  if (v.kind != VarietyKind::MonoidVariety)
    throw Error("KindMismatch", "monoid lifting needs a MonoidVariety");
  SyntacticResult synt = syntactic_sync_algebra(r, Variant::Unital);
  Verdict out;
  out.method = Method::MonoidLifting;
  out.is_v_relation = true;
  for (TypeTag t : {TypeTag::LL, TypeTag::LB, TypeTag::BL}) {
    FiniteSemigroup m = underlying_semigroup(synt.algebra, t);
    auto res = satisfies_all_eq(m, v.equalities);
    std::string line = std::string("underlying monoid of tag ") + tag_name(t) + " (size " +
                       std::to_string(m.size()) + "): " + (res.holds ? "in" : "not in") + " " +
                       v.name;
    if (!res.holds) {
      out.is_v_relation = false;
      line += "; failing assignment:";
      for (auto& [var, e] : *res.counterexample) line += " " + var + "=" + m.names[e];
    }
    if (!out.evidence.empty()) out.evidence += "\n";
    out.evidence += line;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Induced-dependency route on the positive syntactic algebra.

inline Verdict decide_positive_dependencies(const RelationHandle& r, const VarietySpec& v,
                                            uint64_t guard = 4'000'000) {
  RelationHandle plus{r.aut, Mode::Plus};
  SyntacticResult synt = syntactic_sync_algebra(plus, Variant::Positive);
  Verdict out;
  out.method = Method::InducedDependencies;
  out.is_v_relation = true;
  out.sound_only = !v.henckell_trusted;
  for (const ProfiniteDependency& d : induced_dependencies(v.equalities)) {
    auto res = satisfies(synt.algebra, d, guard);
    if (!res.holds) {
      out.is_v_relation = false;
      out.evidence = "failing induced dependency: " + dependency_str(d) + "; assignment:";
      for (auto& [var, e] : *res.counterexample)
        out.evidence +=
            " " + var + "=" + std::string(tag_name(e.tag)) + ":" + synt.algebra.name(e);
      return out;
    }
  }
  out.evidence = "all induced dependencies of " + v.name + " hold";
  return out;
}

// ---------------------------------------------------------------------------
// Henckell E-closure Cl_E(S): least downward-closed subsemigroup of P(S)
// containing the singletons and closed under X -> phihat(u) ∪ phihat(v) for
// (u = v) in E, phi ranging over assignments into current members.
// Represented as the antichain of maximal sets (bitmask over S); all operators
// involved are monotone, so maximal members generate the same closure.

using ElementSet = uint32_t;  // bitmask; requires |S| <= 24 (guard)

namespace detail {

inline ElementSet set_product(const FiniteSemigroup& s, ElementSet x, ElementSet y) {
  ElementSet out = 0;
  for (int i = 0; i < s.size(); i++)
    if (x >> i & 1)
      for (int j = 0; j < s.size(); j++)
        if (y >> j & 1) out |= ElementSet{1} << s.mul(i, j);
  return out;
}

inline ElementSet set_idempotent_power(const FiniteSemigroup& s, ElementSet x) {
  std::map<ElementSet, int> seen_at;
  std::vector<ElementSet> powers;
  ElementSet cur = x;
  while (!seen_at.count(cur)) {
    seen_at[cur] = static_cast<int>(powers.size());
    powers.push_back(cur);
    cur = set_product(s, cur, x);
  }
  int mu = seen_at[cur];
  int lambda = static_cast<int>(powers.size()) - mu;
  int k = ((mu + 1) + lambda - 1) / lambda * lambda;
  return powers[k - 1];
}

inline ElementSet eval_set_term(const FiniteSemigroup& s, const OmegaTerm& t,
                                const std::map<std::string, ElementSet>& asg) {
  switch (t.kind) {
    case OmegaTerm::Kind::Var: return asg.at(t.var);
    case OmegaTerm::Kind::Omega: return set_idempotent_power(s, eval_set_term(s, t.children[0], asg));
    case OmegaTerm::Kind::Prod: {
      ElementSet v = eval_set_term(s, t.children[0], asg);
      for (size_t k = 1; k < t.children.size(); k++)
        v = set_product(s, v, eval_set_term(s, t.children[k], asg));
      return v;
    }
  }
  throw Error("Internal", "bad term");
}

}  // namespace detail

struct HenckellClosure {
  std::vector<ElementSet> maximal;  // antichain of maximal members, sorted
  bool contains(ElementSet x) const {
    for (ElementSet m : maximal)
      if ((x & ~m) == 0) return true;
    return false;
  }
  bool trivial() const {
    for (ElementSet m : maximal)
      if ((m & (m - 1)) != 0) return false;  // some member is not a singleton
    return true;
  }
};

inline HenckellClosure henckell_closure(const FiniteSemigroup& s, const EqualitySet& e,
                                        int guard = 24) {
  if (s.size() > guard || s.size() > 24)
    throw Error("SizeGuardExceeded",
                "semigroup of size " + std::to_string(s.size()) + " exceeds the closure guard");
  std::vector<ElementSet> maximal;
  auto insert = [&](ElementSet x) {
    if (x == 0) return false;
    for (ElementSet m : maximal)
      if ((x & ~m) == 0) return false;
    std::erase_if(maximal, [&](ElementSet m) { return (m & ~x) == 0; });
    maximal.push_back(x);
    return true;
  };
  for (int i = 0; i < s.size(); i++) insert(ElementSet{1} << i);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementSet> snapshot = maximal;
    for (ElementSet x : snapshot)
      for (ElementSet y : snapshot)
        if (insert(detail::set_product(s, x, y))) changed = true;
    for (auto& [lhs, rhs] : e.equations) {
      std::vector<std::string> vars = term_variables(lhs);
      for (const std::string& v : term_variables(rhs))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      if (vars.size() > 6) throw Error("SizeGuardExceeded", "too many equation variables");
      std::vector<size_t> idx(vars.size(), 0);
      while (true) {
        std::map<std::string, ElementSet> asg;
        for (size_t k = 0; k < vars.size(); k++) asg[vars[k]] = snapshot[idx[k]];
        ElementSet u = detail::eval_set_term(s, lhs, asg);
        ElementSet v = detail::eval_set_term(s, rhs, asg);
        if (insert(u | v)) changed = true;
        size_t k = vars.size();
        while (k > 0 && ++idx[k - 1] == snapshot.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  std::sort(maximal.begin(), maximal.end());
  return {maximal};
}

// ---------------------------------------------------------------------------
// Pointlike route: no Cl_E set of consol(SyntSA+(R)) may meet the image of R
// and the image of its well-formed complement.

inline Verdict decide_pointlikes(const RelationHandle& r, const VarietySpec& v, int guard = 24) {
  RelationHandle plus{r.aut, Mode::Plus};
  SyntacticResult synt = syntactic_sync_algebra(plus, Variant::Positive);
  Consolidation cons = consolidate(synt.algebra);
  HenckellClosure cl = henckell_closure(cons.sg, v.equalities, guard);
  ElementSet img_in = 0, img_out = 0;
  for (El e : synt.algebra.elements()) {
    int c = cons.class_of[synt.algebra.flat(e)];
    if (synt.accepting.contains(e))
      img_in |= ElementSet{1} << c;
    else
      img_out |= ElementSet{1} << c;
  }
  Verdict out;
  out.method = Method::Pointlikes;
  out.sound_only = !v.henckell_trusted;
  out.is_v_relation = true;
  for (ElementSet m : cl.maximal)
    if ((m & img_in) && (m & img_out)) {
      out.is_v_relation = false;
      out.evidence = "pointlike set meets both images: {";
      bool first = true;
      for (int i = 0; i < cons.sg.size(); i++)
        if (m >> i & 1) {
          if (!first) out.evidence += ", ";
          first = false;
          out.evidence += cons.sg.names[i];
        }
      out.evidence += "}";
      return out;
    }
  out.evidence = "no " + v.name + "-closure set meets both images";
  return out;
}

// ---------------------------------------------------------------------------
// Front door: run every built-in variety with its appropriate method(s).

struct ClassifyRow {
  std::string variety;
  Method method;
  Verdict verdict;
};

inline std::vector<ClassifyRow> classify(const RelationHandle& r) {
  std::vector<ClassifyRow> rows;
  for (const std::string& name : builtin_variety_names()) {
    VarietySpec v = builtin_variety(name);
    if (v.kind == VarietyKind::MonoidVariety)
      rows.push_back({name, Method::MonoidLifting, decide_monoid_lifting(r, v)});
    rows.push_back({name, Method::InducedDependencies, decide_positive_dependencies(r, v)});
  }
  return rows;
}

}  // namespace syncalg
