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

// Refutation-seeking property checks over seeded random theories. Each
// property draws one theory (or formula pair) per case from its own
// case_seed stream and compares two independent routes to the same answer.
// A violation carries a theory text and the posdep invocation that
// reproduces it.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posdep/depgraph.hpp"
#include "posdep/errors.hpp"
#include "posdep/formula.hpp"
#include "posdep/loopformulas.hpp"
#include "posdep/random.hpp"
#include "posdep/semantics.hpp"
#include "posdep/splitting.hpp"
#include "posdep/syntax.hpp"

namespace posdep {

enum class Property {
  Theorem1,     ///< acyclic SP graph: supported = stable (nondisjunctive)
  Theorem2,     ///< acyclic SP graph: pointwise stable = stable
  LoopOracle,   ///< is_stable = all-sets loop check = graph-loop check
  Splitting,    ///< conditions (i)-(iii) imply the stable-model equivalence
  ReductLemma,  ///< I ⊨ F^I iff I ⊨ F; atoms(F^I) ⊆ I; reduct idempotent
  Lemma1,       ///< I ⊨ F and spos(F^I) ⊆ J imply J ⊨ F^I
  SpSubgraph,   ///< SP graph ⊆ PNN graph
  Chain,        ///< stable ⊆ pointwise ⊆ models; stable ⊆ supported; completion
};

inline constexpr std::string_view kPropertyNames[] = {
    "theorem1", "theorem2", "loop-oracle", "splitting",
    "reduct-lemma", "lemma1", "sp-subgraph", "chain"};

inline std::string_view to_string(Property p) { return kPropertyNames[static_cast<int>(p)]; }

inline std::optional<Property> parse_property(std::string_view name) {
  for (std::size_t k = 0; k < std::size(kPropertyNames); ++k)
    if (kPropertyNames[k] == name) return static_cast<Property>(k);
  return std::nullopt;
}

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_atoms = 4;
  std::size_t max_depth = 4;
  std::size_t max_members = 3;
  /// Graph used by the property; nullopt picks the sound default (SP for
  /// the two theorems, PNN for loop-oracle and splitting).
  std::optional<GraphKind> graph;
};

struct Counterexample {
  std::size_t case_index = 0;
  /// Self-contained input, one formula per line.
  std::string theory_text;
  /// What disagreed.
  std::string detail;
  /// Shell command that feeds theory_text to the matching subcommand.
  std::string reproduce;
};

struct FuzzResult {
  Property property = Property::Theorem1;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::optional<Counterexample> first;
};

inline GraphKind default_graph(Property p) {
  return p == Property::Theorem1 || p == Property::Theorem2 ? GraphKind::SP : GraphKind::PNN;
}

namespace detail {

inline std::string models_text(const std::vector<Interpretation>& ms) {
  std::string out = "[";
  for (std::size_t k = 0; k < ms.size(); ++k) out += (k ? ", " : "") + to_string(ms[k]);
  return out + "]";
}

inline std::string comma_list(const AtomSet& s) {
  std::string out;
  for (const Atom& a : s) out += (out.empty() ? "" : ",") + a.name;
  return out;
}

/// printf '%s\n' 'F1' 'F2' | posdep <args>
inline std::string pipe_command(const Theory& t, const std::string& args) {
  std::string out = "printf '%s\\n'";
  for (const Formula& f : t) out += " '" + print_formula(f) + "'";
  return out + " | posdep " + args;
}

inline std::string theory_lines(const Theory& t) {
  std::string out;
  for (const Formula& f : t) out += print_formula(f) + "\n";
  return out;
}

inline Counterexample make_cex(const Theory& t, std::string detail, std::string args) {
  return Counterexample{0, theory_lines(t), std::move(detail), pipe_command(t, args)};
}

constexpr std::size_t kMaxRejections = 10000;

template <class Draw, class Accept>
auto draw_until(Rng& rng, Draw draw, Accept accept) {
  for (std::size_t attempt = 0; attempt < kMaxRejections; ++attempt) {
    auto candidate = draw(rng);
    if (accept(candidate)) return candidate;
  }
  throw Error("fuzz generator rejected " + std::to_string(kMaxRejections) +
              " candidates in a row; loosen the generator bounds");
}

using CaseCheck = std::function<std::optional<Counterexample>(Rng&, std::size_t)>;

inline CaseCheck theorem_check(Property prop, const FuzzOptions& o, GraphKind kind) {
  FormulaGenerator gen(atom_pool(o.max_atoms), o.max_depth);
  std::size_t members = o.max_members;
  return [=](Rng& rng, std::size_t /*index*/) -> std::optional<Counterexample> {
    auto acyclic = [&](const Theory& t) { return !has_cycle(dependency_graph(t, kind)); };
    std::string graph_flag = std::string("--graph ") + to_string(kind);
    if (prop == Property::Theorem1) {
      Theory t = draw_until(rng, [&](Rng& r) { return gen.nondisjunctive_theory(r, members); },
                            acyclic);
      auto supported = supported_models(t);
      auto stable = stable_models(t);
      if (supported == stable) return std::nullopt;
      return make_cex(t, "supported " + models_text(supported) + " != stable " +
                             models_text(stable), "tight " + graph_flag);
    }
    Theory t = draw_until(rng, [&](Rng& r) { return gen.theory(r, members); }, acyclic);
    auto pointwise = pointwise_stable_models(t);
    auto stable = stable_models(t);
    if (pointwise == stable) return std::nullopt;
    return make_cex(t, "pointwise stable " + models_text(pointwise) + " != stable " +
                           models_text(stable), "tight " + graph_flag);
  };
}

inline CaseCheck loop_oracle_check(const FuzzOptions& o, GraphKind kind) {
  FormulaGenerator gen(atom_pool(o.max_atoms), o.max_depth);
  return [=](Rng& rng, std::size_t /*index*/) -> std::optional<Counterexample> {
    Formula f = gen.formula(rng);
    AtomSet universe = atoms(f);
    for (const Interpretation& i : classical_models(Theory{}, universe)) {
      bool brute = is_stable(i, Theory{{f}});
      bool all_sets = stable_via_all_sets(i, f);
      bool loops = stable_via_loops(i, f, kind);
      if (brute == all_sets && all_sets == loops) continue;
      std::string detail = "I = " + to_string(i) + ": stable " + (brute ? "yes" : "no") +
                           ", all-sets loop check " + (all_sets ? "yes" : "no") + ", " +
                           to_string(kind) + "-loop check " + (loops ? "yes" : "no");
      return make_cex(Theory{{f}}, detail,
                      std::string("loops --graph ") + to_string(kind) + " --interp '" +
                          comma_list(i) + "'");
    }
    return std::nullopt;
  };
}

inline CaseCheck splitting_check(const FuzzOptions& o, GraphKind kind) {
  std::vector<Atom> pool = atom_pool(o.max_atoms);
  std::size_t depth = o.max_depth;
  struct Sample {
    Formula f, g;
    AtomSet p, q;
    SplitReport report;
  };
  return [=](Rng& rng, std::size_t /*index*/) -> std::optional<Counterexample> {
    auto draw = [&](Rng& r) {
      std::vector<Atom> side_p, side_q;
      for (const Atom& a : pool) (r.coin() ? side_p : side_q).push_back(a);
      Formula f = FormulaGenerator(side_p, pool, depth).formula(r);
      Formula g = FormulaGenerator(side_q, pool, depth).formula(r);
      AtomSet p, q;
      for (const Atom& a : atoms(Formula::conj(f, g)))
        (std::find(side_p.begin(), side_p.end(), a) != side_p.end() ? p : q).insert(a);
      return Sample{f, g, p, q, check_split(f, g, p, q, kind)};
    };
    Sample s = draw_until(rng, draw, [](const Sample& c) { return c.report.conditions_hold(); });
    if (s.report.equivalence_holds) return std::nullopt;
    std::string detail = "P = " + to_string(s.p) + ", Q = " + to_string(s.q) + ": stable " +
                         models_text(s.report.stable_whole) + " != stable for both parts " +
                         models_text(s.report.stable_both_parts);
    Counterexample cex;
    cex.theory_text = theory_lines(Theory{{s.f, s.g}});
    cex.detail = detail;
    cex.reproduce = "posdep split '" + print_formula(s.f) + "' '" + print_formula(s.g) +
                    "' --p '" + comma_list(s.p) + "' --graph " + to_string(kind);
    return cex;
  };
}

inline CaseCheck lemma_check(Property prop, const FuzzOptions& o) {
  FormulaGenerator gen(atom_pool(o.max_atoms), o.max_depth);
  return [=](Rng& rng, std::size_t /*index*/) -> std::optional<Counterexample> {
    Formula f = gen.formula(rng);
    AtomSet universe = atoms(f);
    std::vector<Interpretation> all = classical_models(Theory{}, universe);
    for (const Interpretation& i : all) {
      Formula r = reduct(f, i);
      std::string args = "models --interp '" + comma_list(i) + "'";
      if (prop == Property::ReductLemma) {
        if (satisfies(i, r) != satisfies(i, f))
          return make_cex(Theory{{f}}, "I = " + to_string(i) + " disagrees on F and F^I", args);
        AtomSet ra = atoms(r);
        if (!std::includes(i.begin(), i.end(), ra.begin(), ra.end()))
          return make_cex(Theory{{f}}, "atoms of F^I " + to_string(ra) + " not within I = " +
                                           to_string(i), args);
        if (!(reduct(r, i) == r))
          return make_cex(Theory{{f}}, "reduct not idempotent at I = " + to_string(i), args);
        continue;
      }
      if (!satisfies(i, f)) continue;
      AtomSet sp = spos(r);
      for (const Interpretation& j : all) {
        if (!std::includes(j.begin(), j.end(), sp.begin(), sp.end())) continue;
        if (!satisfies(j, r))
          return make_cex(Theory{{f}}, "I = " + to_string(i) + ", J = " + to_string(j) +
                                           " contains spos(F^I) but falsifies F^I", args);
      }
    }
    return std::nullopt;
  };
}

inline CaseCheck sp_subgraph_check(const FuzzOptions& o) {
  FormulaGenerator gen(atom_pool(o.max_atoms), o.max_depth);
  std::size_t members = o.max_members;
  return [=](Rng& rng, std::size_t /*index*/) -> std::optional<Counterexample> {
    Theory t = gen.theory(rng, members);
    if (subgraph_of(g_sp(t), g_pnn(t))) return std::nullopt;
    return make_cex(t, "SP graph is not a subgraph of the PNN graph", "graph --graph sp");
  };
}

/// Even cases draw nondisjunctive theories (which also exercise the
/// supported and completion parts), odd cases arbitrary ones.
inline CaseCheck chain_check(const FuzzOptions& o) {
  FormulaGenerator gen(atom_pool(o.max_atoms), o.max_depth);
  std::size_t members = o.max_members;
  return [=](Rng& rng, std::size_t index) -> std::optional<Counterexample> {
    bool nondisjunctive = index % 2 == 0;
    Theory t = nondisjunctive ? gen.nondisjunctive_theory(rng, members) : gen.theory(rng, members);
    auto models = classical_models(t);
    auto stable = stable_models(t);
    auto pointwise = pointwise_stable_models(t);
    auto subset = [](const std::vector<Interpretation>& a, const std::vector<Interpretation>& b) {
      return std::all_of(a.begin(), a.end(), [&](const Interpretation& i) {
        return std::find(b.begin(), b.end(), i) != b.end();
      });
    };
    if (!subset(stable, pointwise))
      return make_cex(t, "stable " + models_text(stable) + " not within pointwise stable " +
                             models_text(pointwise), "models");
    if (!subset(pointwise, models))
      return make_cex(t, "pointwise stable " + models_text(pointwise) + " not within models " +
                             models_text(models), "models");
    if (is_nondisjunctive(t)) {
      auto supported = supported_models(t);
      if (!subset(stable, supported))
        return make_cex(t, "stable " + models_text(stable) + " not within supported " +
                               models_text(supported), "models");
      auto completed = classical_models(completion(t), atoms(t));
      if (completed != supported)
        return make_cex(t, "completion models " + models_text(completed) + " != supported " +
                               models_text(supported), "models");
    }
    return std::nullopt;
  };
}

}  // namespace detail

/// Runs `count` cases of `prop`. Cases are independent: case k draws from
/// Rng(case_seed(seed, k)).
inline FuzzResult run_fuzz(Property prop, const FuzzOptions& options) {
  GraphKind kind = options.graph.value_or(default_graph(prop));
  detail::CaseCheck check;
  switch (prop) {
    case Property::Theorem1:
    case Property::Theorem2:
      check = detail::theorem_check(prop, options, kind);
      break;
    case Property::LoopOracle:
      check = detail::loop_oracle_check(options, kind);
      break;
    case Property::Splitting:
      check = detail::splitting_check(options, kind);
      break;
    case Property::ReductLemma:
    case Property::Lemma1:
      check = detail::lemma_check(prop, options);
      break;
    case Property::SpSubgraph:
      check = detail::sp_subgraph_check(options);
      break;
    case Property::Chain:
      check = detail::chain_check(options);
      break;
  }
  FuzzResult result;
  result.property = prop;
  for (std::size_t k = 0; k < options.count; ++k) {
    Rng rng(case_seed(options.seed, k));
    ++result.cases;
    if (auto cex = check(rng, k)) {
      ++result.violations;
      if (!result.first) {
        cex->case_index = k;
        result.first = std::move(*cex);
      }
    }
  }
  return result;
}

}  // namespace posdep
