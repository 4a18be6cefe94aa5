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

// Test-only brute-force oracles. They work straight from the definitions on
// std::set interpretations and never touch the library's bitmask
// enumeration. The reduct is built from the "replace every maximal
// unsatisfied subformula" phrasing by explicit position search rather than
// the library's top-down recursion.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "posdep/formula.hpp"
#include "posdep/semantics.hpp"

namespace oracle {

using posdep::Atom;
using posdep::AtomSet;
using posdep::Connective;
using posdep::Formula;
using posdep::Interpretation;
using posdep::Path;
using posdep::Theory;

inline std::vector<Interpretation> subsets(const AtomSet& universe) {
  std::vector<Atom> v(universe.begin(), universe.end());
  std::vector<Interpretation> out;
  for (unsigned m = 0; m < (1u << v.size()); ++m) {
    Interpretation i;
    for (unsigned k = 0; k < v.size(); ++k)
      if (m >> k & 1u) i.insert(v[k]);
    out.push_back(i);
  }
  return out;
}

inline bool truth(const Interpretation& i, const Formula& f) {
  switch (f.kind()) {
    case Connective::Bottom: return false;
    case Connective::Atom: return i.count(f.atom_value()) == 1;
    case Connective::And: return truth(i, f.lhs()) && truth(i, f.rhs());
    case Connective::Or: return truth(i, f.lhs()) || truth(i, f.rhs());
    case Connective::Implies: return !truth(i, f.lhs()) || truth(i, f.rhs());
  }
  return false;
}

inline bool truth(const Interpretation& i, const Theory& t) {
  return std::all_of(t.begin(), t.end(), [&](const Formula& f) { return truth(i, f); });
}

inline void positions(const Formula& f, Path& at, std::vector<Path>& out) {
  out.push_back(at);
  if (f.is_atom() || f.is_bottom()) return;
  at.push_back(0);
  positions(f.lhs(), at, out);
  at.back() = 1;
  positions(f.rhs(), at, out);
  at.pop_back();
}

inline bool is_prefix(const Path& a, const Path& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

inline Formula replace_at(const Formula& f, const Path& path, std::size_t depth) {
  if (depth == path.size()) return Formula::bottom();
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  Formula nl = path[depth] == 0 ? replace_at(l, path, depth + 1) : l;
  Formula nr = path[depth] == 1 ? replace_at(r, path, depth + 1) : r;
  switch (f.kind()) {
    case Connective::And: return Formula::conj(nl, nr);
    case Connective::Or: return Formula::disj(nl, nr);
    default: return Formula::implies(nl, nr);
  }
}

/// F^I from the definition: find every unsatisfied subformula position,
/// keep those with no unsatisfied proper ancestor, replace them by bot.
inline Formula reduct(const Formula& f, const Interpretation& i) {
  std::vector<Path> all;
  Path at;
  positions(f, at, all);
  std::vector<Path> unsatisfied;
  for (const Path& p : all)
    if (!truth(i, *posdep::subformula_at(f, p))) unsatisfied.push_back(p);
  Formula out = f;
  for (const Path& p : unsatisfied) {
    bool maximal = std::none_of(unsatisfied.begin(), unsatisfied.end(), [&](const Path& q) {
      return q != p && is_prefix(q, p);
    });
    if (maximal) out = replace_at(out, p, 0);
  }
  return out;
}

inline Theory reduct(const Theory& t, const Interpretation& i) {
  Theory out;
  for (const Formula& f : t) out.formulas.push_back(oracle::reduct(f, i));
  return out;
}

inline bool proper_subset(const Interpretation& a, const Interpretation& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Minimal among the models of T^I, checked against every subset of the
/// universe.
inline bool stable(const Interpretation& i, const Theory& t, const AtomSet& universe) {
  if (!truth(i, t)) return false;
  Theory red = oracle::reduct(t, i);
  for (const Interpretation& j : subsets(universe))
    if (proper_subset(j, i) && truth(j, red)) return false;
  return true;
}

inline bool pointwise_stable(const Interpretation& i, const Theory& t) {
  if (!truth(i, t)) return false;
  Theory red = oracle::reduct(t, i);
  for (const Atom& a : i) {
    Interpretation smaller = i;
    smaller.erase(a);
    if (truth(smaller, red)) return false;
  }
  return true;
}

/// Every true atom is the consequent of some member Body -> A (or a bare
/// fact A) whose body is true.
inline bool supported(const Interpretation& i, const Theory& t) {
  if (!truth(i, t)) return false;
  for (const Atom& a : i) {
    bool ok = false;
    for (const Formula& f : t) {
      if (f.is_atom() && f.atom_value() == a) ok = true;
      if (f.is_implication() && f.rhs().is_atom() && f.rhs().atom_value() == a &&
          truth(i, f.lhs()))
        ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

template <class Pred>
std::vector<Interpretation> filter(const AtomSet& universe, Pred keep) {
  std::vector<Interpretation> out;
  for (const Interpretation& i : subsets(universe))
    if (keep(i)) out.push_back(i);
  posdep::sort_interpretations(out);
  return out;
}

inline std::vector<Interpretation> models(const Theory& t, const AtomSet& universe) {
  return filter(universe, [&](const Interpretation& i) { return truth(i, t); });
}

inline std::vector<Interpretation> stable_models(const Theory& t) {
  AtomSet u = posdep::atoms(t);
  return filter(u, [&](const Interpretation& i) { return stable(i, t, u); });
}

inline std::vector<Interpretation> pointwise_stable_models(const Theory& t) {
  return filter(posdep::atoms(t), [&](const Interpretation& i) { return pointwise_stable(i, t); });
}

inline std::vector<Interpretation> supported_models(const Theory& t) {
  return filter(posdep::atoms(t), [&](const Interpretation& i) { return supported(i, t); });
}

/// Truth-table equivalence over the union of both formulas' atoms.
inline bool equivalent(const Formula& f, const Formula& g) {
  AtomSet u = posdep::atoms(f);
  AtomSet ug = posdep::atoms(g);
  u.insert(ug.begin(), ug.end());
  for (const Interpretation& i : subsets(u))
    if (truth(i, f) != truth(i, g)) return false;
  return true;
}

inline bool tautology(const Formula& f) {
  for (const Interpretation& i : subsets(posdep::atoms(f)))
    if (!truth(i, f)) return false;
  return true;
}

/// Mutual reachability classes of a graph, by transitive closure.
inline std::set<AtomSet> reachability_classes(const AtomSet& vertices,
                                              const std::set<std::pair<Atom, Atom>>& edges) {
  std::map<Atom, AtomSet> reach;
  for (const Atom& v : vertices) reach[v] = {v};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [from, to] : edges)
      for (auto& [v, r] : reach)
        if (r.count(from))
          for (const Atom& w : AtomSet(reach[to]))
            changed |= r.insert(w).second;
  }
  std::set<AtomSet> out;
  for (const Atom& v : vertices) {
    AtomSet cls;
    for (const Atom& w : vertices)
      if (reach[v].count(w) && reach[w].count(v)) cls.insert(w);
    out.insert(cls);
  }
  return out;
}

}  // namespace oracle
