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

// Negated external support formulas and loop formulas.
//
// For a formula F and a set Y of its atoms, NES_F(Y) is
//   A            -> bot if A is in Y, else A
//   bot          -> bot
//   F & G, F | G -> the same connective over NES_F(Y), NES_G(Y)
//   F -> G       -> (NES_F(Y) -> NES_G(Y)) & (F -> G)
// and the loop formula of Y is the conjunction of A -> not NES_F(Y) over
// A in Y. A subset I of atoms(F) is stable iff it satisfies F and the loop
// formulas of all nonempty Y; restricting Y to the loops of the PNN graph
// keeps this exact, restricting to loops of the SP graph does not.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "posdep/depgraph.hpp"
#include "posdep/errors.hpp"
#include "posdep/formula.hpp"
#include "posdep/semantics.hpp"
#include "posdep/syntax.hpp"

namespace posdep {

namespace detail {

inline void require_atoms_of(const AtomSet& subset, const Formula& f, const char* what) {
  AtomSet all = atoms(f);
  if (!std::includes(all.begin(), all.end(), subset.begin(), subset.end()))
    throw InvalidArgument(std::string(what) + " " + to_string(subset) +
                          " is not a set of atoms occurring in the formula");
}

inline Formula nes_unchecked(const Formula& f, const AtomSet& y) {
  switch (f.kind()) {
    case Connective::Bottom:
      return f;
    case Connective::Atom:
      return y.count(f.atom_value()) ? Formula::bottom() : f;
    case Connective::And:
      return Formula::conj(nes_unchecked(f.lhs(), y), nes_unchecked(f.rhs(), y));
    case Connective::Or:
      return Formula::disj(nes_unchecked(f.lhs(), y), nes_unchecked(f.rhs(), y));
    case Connective::Implies:
      return Formula::conj(
          Formula::implies(nes_unchecked(f.lhs(), y), nes_unchecked(f.rhs(), y)), f);
  }
  return f;
}

inline Formula loop_formula_unchecked(const Formula& f, const AtomSet& y) {
  Formula not_nes = Formula::negation(nes_unchecked(f, y));
  std::optional<Formula> acc;
  for (const Atom& a : y) {
    Formula clause = Formula::implies(Formula::atom(a), not_nes);
    acc = acc ? Formula::conj(*acc, clause) : clause;
  }
  return *acc;
}

}  // namespace detail

/// NES_F(Y). Throws InvalidArgument unless Y ⊆ atoms(f).
inline Formula nes(const Formula& f, const AtomSet& y) {
  detail::require_atoms_of(y, f, "set");
  return detail::nes_unchecked(f, y);
}

/// Conjunction over A in Y (lexicographic) of A -> not NES_F(Y). Y must be
/// a nonempty subset of atoms(f).
inline Formula loop_formula(const Formula& f, const AtomSet& y) {
  if (y.empty()) throw InvalidArgument("loop formula of the empty set is undefined");
  detail::require_atoms_of(y, f, "loop");
  return detail::loop_formula_unchecked(f, y);
}

namespace detail {

inline void check_candidate(const Interpretation& i, const Formula& f, std::size_t cap) {
  require_atoms_of(i, f, "interpretation");
  AtomSet all = atoms(f);
  if (all.size() > cap || all.size() >= 64)
    throw CapExceeded(cap, all.size(), "loop formula check");
}

inline bool satisfies_loop_formulas(const Interpretation& i, const Formula& f,
                                    const std::vector<AtomSet>& loops) {
  if (!satisfies(i, f)) return false;
  return std::all_of(loops.begin(), loops.end(), [&](const AtomSet& y) {
    return satisfies(i, loop_formula_unchecked(f, y));
  });
}

}  // namespace detail

/// I ⊨ F and I satisfies the loop formula of every nonempty Y ⊆ atoms(F).
inline bool stable_via_all_sets(const Interpretation& i, const Formula& f,
                                std::size_t cap = kDefaultEnumerationCap) {
  detail::check_candidate(i, f, cap);
  if (!satisfies(i, f)) return false;
  std::vector<Atom> all;
  for (const Atom& a : atoms(f)) all.push_back(a);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << all.size()); ++m) {
    AtomSet y;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (m >> k & 1) y.insert(all[k]);
    if (!satisfies(i, detail::loop_formula_unchecked(f, y))) return false;
  }
  return true;
}

/// I ⊨ F and I satisfies the loop formula of every loop of the `kind` graph
/// of F. Exact for PNN; with SP it can accept unstable interpretations.
inline bool stable_via_loops(const Interpretation& i, const Formula& f, GraphKind kind,
                             std::size_t cap = kDefaultLoopCap) {
  detail::check_candidate(i, f, cap);
  return detail::satisfies_loop_formulas(
      i, f, strongly_connected_subsets(dependency_graph(f, kind), cap));
}

}  // namespace posdep
