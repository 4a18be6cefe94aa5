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

// Splitting a conjunction F & G along a partition {P, Q} of its atoms.
//
// When (i) spos(F) ⊆ P, (ii) spos(G) ⊆ Q and (iii) every strongly connected
// component of the PNN graph of F & G lies inside P or inside Q, the stable
// models of F & G are exactly the sets that are stable for both
//   F & (A | not A) for A in Q   and   G & (A | not A) for A in P.
// Condition (iii) can be evaluated on the SP graph instead to exhibit the
// case where the equivalence breaks.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "posdep/depgraph.hpp"
#include "posdep/errors.hpp"
#include "posdep/formula.hpp"
#include "posdep/semantics.hpp"
#include "posdep/syntax.hpp"

namespace posdep {

/// f & (A | not A) for each A in xs, lexicographic; f itself if xs is empty.
inline Formula choice_augment(const Formula& f, const AtomSet& xs) {
  Formula acc = f;
  for (const Atom& a : xs) {
    Formula atom = Formula::atom(a);
    acc = Formula::conj(acc, Formula::disj(atom, Formula::negation(atom)));
  }
  return acc;
}

struct SplitReport {
  GraphKind kind = GraphKind::PNN;
  AtomSet p;
  AtomSet q;

  bool cond_i = false;
  AtomSet cond_i_offending;  ///< spos(F) \ P
  bool cond_ii = false;
  AtomSet cond_ii_offending;  ///< spos(G) \ Q
  bool cond_iii = false;
  std::optional<AtomSet> cond_iii_offending;  ///< first component meeting both P and Q

  bool equivalence_holds = false;
  std::vector<Interpretation> stable_whole;
  std::vector<Interpretation> stable_part_f;  ///< of F augmented with choices over Q
  std::vector<Interpretation> stable_part_g;  ///< of G augmented with choices over P
  std::vector<Interpretation> stable_both_parts;

  bool conditions_hold() const { return cond_i && cond_ii && cond_iii; }
};

namespace detail {

inline AtomSet difference(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline std::vector<Interpretation> intersection(const std::vector<Interpretation>& a,
                                                const std::vector<Interpretation>& b) {
  std::vector<Interpretation> out;
  for (const Interpretation& i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) out.push_back(i);
  sort_interpretations(out);
  return out;
}

}  // namespace detail

/// Evaluates conditions (i)-(iii) with the `kind` graph and compares the
/// stable models of f & g with those stable for both augmented parts, all
/// enumerated over atoms(f & g). {p, q} must partition atoms(f & g).
inline SplitReport check_split(const Formula& f, const Formula& g, const AtomSet& p,
                               const AtomSet& q, GraphKind kind = GraphKind::PNN,
                               std::size_t cap = kDefaultEnumerationCap) {
  Formula whole = Formula::conj(f, g);
  AtomSet universe = atoms(whole);
  AtomSet joined = detail::with(p, q);
  if (joined != universe || joined.size() != p.size() + q.size())
    throw InvalidArgument("P = " + to_string(p) + " and Q = " + to_string(q) +
                          " do not partition the atoms " + to_string(universe));
  if (universe.size() > cap) throw CapExceeded(cap, universe.size(), "split check");

  SplitReport r;
  r.kind = kind;
  r.p = p;
  r.q = q;
  r.cond_i_offending = detail::difference(spos(f), p);
  r.cond_i = r.cond_i_offending.empty();
  r.cond_ii_offending = detail::difference(spos(g), q);
  r.cond_ii = r.cond_ii_offending.empty();

  r.cond_iii = true;
  for (const AtomSet& component : sccs(dependency_graph(whole, kind))) {
    bool inside_p = std::includes(p.begin(), p.end(), component.begin(), component.end());
    bool inside_q = std::includes(q.begin(), q.end(), component.begin(), component.end());
    if (!inside_p && !inside_q) {
      r.cond_iii = false;
      r.cond_iii_offending = component;
      break;
    }
  }

  r.stable_whole = stable_models(Theory{{whole}}, universe, cap);
  r.stable_part_f = stable_models(Theory{{choice_augment(f, q)}}, universe, cap);
  r.stable_part_g = stable_models(Theory{{choice_augment(g, p)}}, universe, cap);
  r.stable_both_parts = detail::intersection(r.stable_part_f, r.stable_part_g);
  r.equivalence_holds = r.stable_whole == r.stable_both_parts;
  return r;
}

}  // namespace posdep
