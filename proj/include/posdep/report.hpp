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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posdep/formula.hpp"
#include "posdep/semantics.hpp"
#include "posdep/splitting.hpp"

namespace posdep {

/// Every model list of a theory over its own atoms. `supported` is filled
/// only when each member is a nondisjunctive rule.
struct ModelReport {
  AtomSet universe;
  std::vector<Interpretation> classical;
  std::vector<Interpretation> stable;
  std::optional<std::vector<Interpretation>> supported;
  std::vector<Interpretation> pointwise_stable;
};

inline ModelReport analyze_models(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
  ModelReport r;
  r.universe = atoms(t);
  r.classical = classical_models(t, r.universe, cap);
  r.stable = stable_models(t, cap);
  if (is_nondisjunctive(t)) r.supported = supported_models(t, cap);
  r.pointwise_stable = pointwise_stable_models(t, cap);
  return r;
}

inline nlohmann::ordered_json atoms_json(const AtomSet& s) {
  auto out = nlohmann::ordered_json::array();
  for (const Atom& a : s) out.push_back(a.name);
  return out;
}

inline nlohmann::ordered_json models_json(const std::vector<Interpretation>& ms) {
  auto out = nlohmann::ordered_json::array();
  for (const Interpretation& i : ms) out.push_back(atoms_json(i));
  return out;
}

/// Keys universe, classical, stable, supported (when present),
/// pointwise_stable; interpretations are sorted arrays of atom names.
inline nlohmann::ordered_json to_json(const ModelReport& r) {
  nlohmann::ordered_json j;
  j["universe"] = atoms_json(r.universe);
  j["classical"] = models_json(r.classical);
  j["stable"] = models_json(r.stable);
  if (r.supported) j["supported"] = models_json(*r.supported);
  j["pointwise_stable"] = models_json(r.pointwise_stable);
  return j;
}

inline nlohmann::ordered_json to_json(const SplitReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = to_string(r.kind);
  j["p"] = atoms_json(r.p);
  j["q"] = atoms_json(r.q);
  j["cond_i"] = {{"holds", r.cond_i}, {"offending", atoms_json(r.cond_i_offending)}};
  j["cond_ii"] = {{"holds", r.cond_ii}, {"offending", atoms_json(r.cond_ii_offending)}};
  j["cond_iii"] = {{"holds", r.cond_iii},
                   {"offending", r.cond_iii_offending ? atoms_json(*r.cond_iii_offending)
                                                      : nlohmann::ordered_json(nullptr)}};
  j["equivalence_holds"] = r.equivalence_holds;
  j["stable_whole"] = models_json(r.stable_whole);
  j["stable_part_f"] = models_json(r.stable_part_f);
  j["stable_part_g"] = models_json(r.stable_part_g);
  j["stable_both_parts"] = models_json(r.stable_both_parts);
  return j;
}

}  // namespace posdep
