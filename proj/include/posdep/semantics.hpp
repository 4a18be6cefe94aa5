// Copyright 2026 The posdep Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Interpretations, satisfaction, the reduct, and exhaustive enumeration of
// classical, stable, supported and pointwise stable models.
//
// Enumeration ranges over subsets of a finite universe (atoms(t) unless
// given) and refuses universes larger than the cap instead of truncating.
// Internally candidates are bitmasks over the sorted universe and formulas
// are flattened into a postfix program; the reduct is never materialized on
// the enumeration path (see CompiledFormula::satisfies_reduct).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posdep/errors.hpp"
#include "posdep/formula.hpp"
#include "posdep/syntax.hpp"

namespace posdep {

/// A set of atoms, identified with the assignment making exactly its
/// members true.
using Interpretation = AtomSet;

inline constexpr std::size_t kDefaultEnumerationCap = 20;
inline constexpr std::size_t kMaxEnumerationCap = 30;

/// Order of every model list: by cardinality, then lexicographically.
inline bool interpretation_less(const Interpretation& a, const Interpretation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline void sort_interpretations(std::vector<Interpretation>& v) {
  std::sort(v.begin(), v.end(), interpretation_less);
}

inline bool satisfies(const Interpretation& i, const Formula& f) {
  switch (f.kind()) {
    case Connective::Bottom:
      return false;
    case Connective::Atom:
      return i.count(f.atom_value()) > 0;
    case Connective::And:
      return satisfies(i, f.lhs()) && satisfies(i, f.rhs());
    case Connective::Or:
      return satisfies(i, f.lhs()) || satisfies(i, f.rhs());
    case Connective::Implies:
      return !satisfies(i, f.lhs()) || satisfies(i, f.rhs());
  }
  return false;
}

inline bool satisfies(const Interpretation& i, const Theory& t) {
  return std::all_of(t.begin(), t.end(),
                     [&](const Formula& f) { return satisfies(i, f); });
}

/// F^I: every maximal subformula not satisfied by `i` replaced by bot.
/// Computed top-down, which selects exactly the maximal ones.
inline Formula reduct(const Formula& f, const Interpretation& i) {
  if (!satisfies(i, f)) return Formula::bottom();
  switch (f.kind()) {
    case Connective::Bottom:  // unreachable: bot is never satisfied
    case Connective::Atom:
      return f;
    case Connective::And:
      return Formula::conj(reduct(f.lhs(), i), reduct(f.rhs(), i));
    case Connective::Or:
      return Formula::disj(reduct(f.lhs(), i), reduct(f.rhs(), i));
    case Connective::Implies:
      return Formula::implies(reduct(f.lhs(), i), reduct(f.rhs(), i));
  }
  return f;
}

inline Theory reduct_theory(const Theory& t, const Interpretation& i) {
  Theory out;
  out.formulas.reserve(t.size());
  for (const Formula& f : t) out.formulas.push_back(reduct(f, i));
  return out;
}

namespace detail {

using Mask = std::uint64_t;

/// Bit assignment for a sorted universe of atoms.
class AtomIndex {
 public:
  explicit AtomIndex(const AtomSet& universe) : atoms_(universe.begin(), universe.end()) {
    for (std::size_t k = 0; k < atoms_.size(); ++k) bits_.emplace(atoms_[k], k);
  }

  std::size_t size() const { return atoms_.size(); }

  /// Mask bit for `a`; 0 if `a` is not in the universe (always false).
  Mask bit(const Atom& a) const {
    auto it = bits_.find(a);
    return it == bits_.end() ? 0 : Mask{1} << it->second;
  }

  Mask mask(const Interpretation& i) const {
    Mask m = 0;
    for (const Atom& a : i) m |= bit(a);
    return m;
  }

  Interpretation interpretation(Mask m) const {
    Interpretation out;
    for (std::size_t k = 0; k < atoms_.size(); ++k)
      if (m >> k & 1) out.insert(atoms_[k]);
    return out;
  }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, std::size_t> bits_;
};

/// Postfix program for a formula over an AtomIndex.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const AtomIndex& index) {
    code_.reserve(f.size());
    compile(f, index);
  }

  bool satisfies(Mask i) const {
    std::vector<char> v(code_.size());
    for (std::size_t k = 0; k < code_.size(); ++k) v[k] = eval(k, i, v);
    return v.back();
  }

  /// Whether `j` satisfies the reduct of the formula with respect to `i`.
  /// A node of F^I is bot where I falsifies the node and otherwise the same
  /// connective over the children's reducts.
  bool satisfies_reduct(Mask i, Mask j) const {
    std::vector<char> vi(code_.size()), vj(code_.size());
    for (std::size_t k = 0; k < code_.size(); ++k) {
      vi[k] = eval(k, i, vi);
      vj[k] = vi[k] && eval(k, j, vj);
    }
    return vj.back();
  }

 private:
  struct Instr {
    Connective op;
    Mask bit;
    std::size_t lhs;
    std::size_t rhs;
  };

  std::size_t compile(const Formula& f, const AtomIndex& index) {
    Instr ins{f.kind(), 0, 0, 0};
    if (f.is_atom()) {
      ins.bit = index.bit(f.atom_value());
    } else if (!f.is_bottom()) {
      ins.lhs = compile(f.lhs(), index);
      ins.rhs = compile(f.rhs(), index);
    }
    code_.push_back(ins);
    return code_.size() - 1;
  }

  bool eval(std::size_t k, Mask m, const std::vector<char>& v) const {
    const Instr& ins = code_[k];
    switch (ins.op) {
      case Connective::Bottom: return false;
      case Connective::Atom: return (m & ins.bit) != 0;
      case Connective::And: return v[ins.lhs] && v[ins.rhs];
      case Connective::Or: return v[ins.lhs] || v[ins.rhs];
      case Connective::Implies: return !v[ins.lhs] || v[ins.rhs];
    }
    return false;
  }

  std::vector<Instr> code_;
};

class CompiledTheory {
 public:
  CompiledTheory(const Theory& t, const AtomIndex& index) {
    for (const Formula& f : t) members_.emplace_back(f, index);
  }

  bool satisfies(Mask i) const {
    return std::all_of(members_.begin(), members_.end(),
                       [i](const CompiledFormula& f) { return f.satisfies(i); });
  }

  bool satisfies_reduct(Mask i, Mask j) const {
    return std::all_of(members_.begin(), members_.end(),
                       [i, j](const CompiledFormula& f) { return f.satisfies_reduct(i, j); });
  }

  /// `i` is a model and no proper subset of it satisfies T^I. Subsets of
  /// `i` suffice because every atom of T^I belongs to I.
  bool stable(Mask i) const {
    if (!satisfies(i)) return false;
    for (Mask j = (i - 1) & i;; j = (j - 1) & i) {
      if (j != i && satisfies_reduct(i, j)) return false;
      if (j == 0) break;
    }
    return true;
  }

  bool pointwise_stable(Mask i) const {
    if (!satisfies(i)) return false;
    for (Mask rest = i; rest != 0; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      if (satisfies_reduct(i, i & ~bit)) return false;
    }
    return true;
  }

 private:
  std::vector<CompiledFormula> members_;
};

inline void check_cap(std::size_t count, std::size_t cap, const char* what) {
  if (cap > kMaxEnumerationCap) cap = kMaxEnumerationCap;
  if (count > cap) throw CapExceeded(cap, count, what);
}

// Single-candidate checks only need the universe to fit in a Mask.
inline void check_mask_width(std::size_t count, const char* what) {
  if (count >= 64) throw CapExceeded(63, count, what);
}

template <class Pred>
std::vector<Interpretation> enumerate(const AtomSet& universe, std::size_t cap,
                                      const char* what, Pred keep) {
  check_cap(universe.size(), cap, what);
  AtomIndex index(universe);
  std::vector<Interpretation> out;
  Mask end = Mask{1} << universe.size();
  for (Mask m = 0; m < end; ++m)
    if (keep(m)) out.push_back(index.interpretation(m));
  sort_interpretations(out);
  return out;
}

inline AtomSet with(AtomSet a, const AtomSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace detail

/// All subsets of `universe` satisfying every member of `t`.
inline std::vector<Interpretation> classical_models(const Theory& t, const AtomSet& universe,
                                                    std::size_t cap = kDefaultEnumerationCap) {
  AtomSet needed = atoms(t);
  if (!std::includes(universe.begin(), universe.end(), needed.begin(), needed.end()))
    throw InvalidArgument("universe " + to_string(universe) + " does not contain the atoms " +
                          to_string(needed) + " of the theory");
  detail::check_cap(universe.size(), cap, "model enumeration");
  detail::AtomIndex index(universe);
  detail::CompiledTheory ct(t, index);
  return detail::enumerate(universe, cap, "model enumeration",
                           [&](detail::Mask m) { return ct.satisfies(m); });
}

inline std::vector<Interpretation> classical_models(const Theory& t,
                                                    std::size_t cap = kDefaultEnumerationCap) {
  return classical_models(t, atoms(t), cap);
}

inline bool is_stable(const Interpretation& i, const Theory& t) {
  detail::AtomIndex index(detail::with(atoms(t), i));
  detail::check_mask_width(index.size(), "stability check");
  return detail::CompiledTheory(t, index).stable(index.mask(i));
}

inline bool is_pointwise_stable(const Interpretation& i, const Theory& t) {
  detail::AtomIndex index(detail::with(atoms(t), i));
  detail::check_mask_width(index.size(), "stability check");
  return detail::CompiledTheory(t, index).pointwise_stable(index.mask(i));
}

/// Stable models among the subsets of `universe`. A stable model never
/// contains an atom outside atoms(t), so any universe ⊇ atoms(t) gives the
/// same list.
inline std::vector<Interpretation> stable_models(const Theory& t, const AtomSet& universe,
                                                 std::size_t cap = kDefaultEnumerationCap) {
  AtomSet u = detail::with(universe, atoms(t));
  detail::check_cap(u.size(), cap, "stable model enumeration");
  detail::AtomIndex index(u);
  detail::CompiledTheory ct(t, index);
  return detail::enumerate(u, cap, "stable model enumeration",
                           [&](detail::Mask m) { return ct.stable(m); });
}

inline std::vector<Interpretation> stable_models(const Theory& t,
                                                 std::size_t cap = kDefaultEnumerationCap) {
  return stable_models(t, atoms(t), cap);
}

inline std::vector<Interpretation> pointwise_stable_models(
    const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
  AtomSet u = atoms(t);
  detail::check_cap(u.size(), cap, "pointwise stable model enumeration");
  detail::AtomIndex index(u);
  detail::CompiledTheory ct(t, index);
  return detail::enumerate(u, cap, "pointwise stable model enumeration",
                           [&](detail::Mask m) { return ct.pointwise_stable(m); });
}

// ---------------------------------------------------------------------------
// Nondisjunctive theories: supported models and completion
// ---------------------------------------------------------------------------

/// Members of `t` as nondisjunctive rules; throws NotNondisjunctive.
inline std::vector<NondisjunctiveRule> nondisjunctive_rules(const Theory& t) {
  std::vector<NondisjunctiveRule> rules;
  rules.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto r = as_nondisjunctive_rule(t.formulas[k]);
    if (!r) throw NotNondisjunctive(k, print_formula(t.formulas[k]));
    rules.push_back(std::move(*r));
  }
  return rules;
}

/// A model of `t` in which every true atom heads a rule whose body holds.
inline bool is_supported(const Interpretation& i, const Theory& t) {
  std::vector<NondisjunctiveRule> rules = nondisjunctive_rules(t);
  if (!satisfies(i, t)) return false;
  for (const Atom& a : i) {
    bool supported = std::any_of(rules.begin(), rules.end(), [&](const NondisjunctiveRule& r) {
      return r.head == a && satisfies(i, r.body);
    });
    if (!supported) return false;
  }
  return true;
}

inline std::vector<Interpretation> supported_models(const Theory& t,
                                                    std::size_t cap = kDefaultEnumerationCap) {
  std::vector<NondisjunctiveRule> rules = nondisjunctive_rules(t);
  AtomSet u = atoms(t);
  detail::check_cap(u.size(), cap, "supported model enumeration");
  detail::AtomIndex index(u);
  detail::CompiledTheory ct(t, index);
  std::vector<std::pair<detail::Mask, detail::CompiledFormula>> bodies;
  for (const NondisjunctiveRule& r : rules)
    bodies.emplace_back(index.bit(r.head), detail::CompiledFormula(r.body, index));
  return detail::enumerate(u, cap, "supported model enumeration", [&](detail::Mask m) {
    if (!ct.satisfies(m)) return false;
    detail::Mask supported = 0;
    for (const auto& [head, body] : bodies)
      if (body.satisfies(m)) supported |= head;
    return (m & ~supported) == 0;
  });
}

/// Clark completion: for each atom A of `t`, in lexicographic order,
/// A <-> (B1 | ... | Bn) over the bodies of the rules with head A in rule
/// order, or A <-> bot if there are none. Bodies are kept verbatim and the
/// biconditional is desugared.
inline Theory completion(const Theory& t) {
  std::vector<NondisjunctiveRule> rules = nondisjunctive_rules(t);
  Theory out;
  for (const Atom& a : atoms(t)) {
    std::optional<Formula> support;
    for (const NondisjunctiveRule& r : rules) {
      if (r.head != a) continue;
      support = support ? Formula::disj(*support, r.body) : r.body;
    }
    out.formulas.push_back(Formula::iff(Formula::atom(a), support.value_or(Formula::bottom())));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truth-table utilities
// ---------------------------------------------------------------------------

inline bool is_tautology(const Formula& f) {
  AtomSet u = atoms(f);
  detail::check_cap(u.size(), kMaxEnumerationCap, "tautology check");
  detail::AtomIndex index(u);
  detail::CompiledFormula cf(f, index);
  for (detail::Mask m = 0; m < (detail::Mask{1} << u.size()); ++m)
    if (!cf.satisfies(m)) return false;
  return true;
}

inline bool is_satisfiable(const Formula& f) {
  return !is_tautology(Formula::negation(f));
}

/// Truth-table equivalence over the union of both formulas' atoms.
inline bool equivalent(const Formula& f, const Formula& g) {
  return is_tautology(Formula::iff(f, g));
}

}  // namespace posdep
