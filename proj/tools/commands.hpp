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

// Subcommands of the posdep tool. Each takes already-read input text,
// writes its result to `out` and returns the process exit code; errors
// propagate as posdep::Error and are mapped to exit codes by run_guarded.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posdep/depgraph.hpp"
#include "posdep/errors.hpp"
#include "posdep/formula.hpp"
#include "posdep/fuzz.hpp"
#include "posdep/loopformulas.hpp"
#include "posdep/report.hpp"
#include "posdep/semantics.hpp"
#include "posdep/splitting.hpp"
#include "posdep/syntax.hpp"

namespace posdep::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCapExceeded = 2,
  kConditionFailed = 3,     // tight: cyclic graph; split: a condition fails
  kEquivalenceFailed = 4,   // split: conditions hold, equivalence does not
  kViolation = 5,           // fuzz or an in-tool verification found a counterexample
};

struct Common {
  bool json = false;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Parses "p,q r" style atom lists; an empty string is the empty set.
inline AtomSet parse_atom_list(const std::string& text) {
  AtomSet out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out.insert(make_atom(word));
    word.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}')
      flush();
    else
      word += c;
  }
  flush();
  return out;
}

/// ∅ for the empty set, otherwise {a b c}.
inline std::string show(const Interpretation& i) { return i.empty() ? "∅" : to_string(i); }

inline std::string show(const std::vector<Interpretation>& ms) {
  if (ms.empty()) return "none";
  std::string out;
  for (const Interpretation& i : ms) out += (out.empty() ? "" : ", ") + show(i);
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string show_edges(const DepGraph& g) {
  if (g.edges.empty()) return "none";
  std::string out;
  for (const Edge& e : edges_for_output(g))
    out += (out.empty() ? "" : " ") + std::string("(") + e.from.name + "," + e.to.name + ")";
  return out;
}

// ---------------------------------------------------------------------------

inline int cmd_models(const std::string& input, const Common& c,
                      const std::optional<AtomSet>& interp, std::ostream& out) {
  Theory t = parse_theory(input);
  ModelReport r = analyze_models(t, c.cap);
  std::optional<Theory> completed;
  if (r.supported) completed = completion(t);

  if (c.json) {
    nlohmann::ordered_json j = to_json(r);
    if (interp) {
      auto reduct_json = nlohmann::ordered_json::array();
      for (const Formula& f : reduct_theory(t, *interp)) reduct_json.push_back(print_formula(f));
      j["interpretation"] = atoms_json(*interp);
      j["reduct"] = reduct_json;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "universe: " << to_string(r.universe) << "\n";
  out << "classical: " << show(r.classical) << "\n";
  out << "stable: " << show(r.stable) << "\n";
  if (r.supported) out << "supported: " << show(*r.supported) << "\n";
  out << "pointwise_stable: " << show(r.pointwise_stable) << "\n";
  if (completed) {
    out << "completion:\n";
    for (const Formula& f : *completed) out << "  " << print_formula(f) << "\n";
  }
  if (interp) {
    Theory red = reduct_theory(t, *interp);
    out << "reduct w.r.t. " << show(*interp) << ":\n";
    for (const Formula& f : red) out << "  " << print_formula(f) << "\n";
    out << "satisfies theory: " << yes_no(satisfies(*interp, t)) << "\n";
    out << "satisfies reduct: " << yes_no(satisfies(*interp, red)) << "\n";
    out << "spos of reduct: " << to_string(spos(red)) << "\n";
  }
  return kOk;
}

enum class GraphFormat { Dot, Edges };

inline int cmd_graph(const std::string& input, GraphKind kind, GraphFormat format,
                     const Common& c, std::ostream& out) {
  DepGraph g = dependency_graph(parse_theory(input), kind);
  if (c.json) {
    nlohmann::ordered_json j;
    j["graph"] = to_string(kind);
    j["vertices"] = atoms_json(g.vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : edges_for_output(g)) edges.push_back({e.from.name, e.to.name});
    j["edges"] = edges;
    out << j.dump(2) << "\n";
  } else if (format == GraphFormat::Dot) {
    out << to_dot(g, kind == GraphKind::SP ? "G_sp" : "G_pnn");
  } else {
    out << to_edge_list(g);
  }
  return kOk;
}

inline int cmd_tight(const std::string& input, GraphKind kind, const Common& c,
                     std::ostream& out) {
  Theory t = parse_theory(input);
  DepGraph g = dependency_graph(t, kind);
  bool acyclic = !has_cycle(g);
  nlohmann::ordered_json j;
  j["graph"] = to_string(kind);
  j["edges"] = show_edges(g);
  j["acyclic"] = acyclic;

  std::vector<std::string> lines;
  lines.push_back(std::string("graph: ") + to_string(kind));
  lines.push_back("edges: " + show_edges(g));
  lines.push_back("acyclic: " + yes_no(acyclic));
  int code = acyclic ? kOk : kConditionFailed;

  if (!acyclic) {
    for (const AtomSet& comp : sccs(g)) {
      if (comp.size() > 1 || g.has_edge(*comp.begin(), *comp.begin())) {
        lines.push_back("cycle through: " + to_string(comp));
        j["cycle_through"] = atoms_json(comp);
        break;
      }
    }
  } else if (atoms(t).size() > c.cap) {
    lines.push_back("verification skipped: " + std::to_string(atoms(t).size()) +
                    " atoms exceed the enumeration cap of " + std::to_string(c.cap));
  } else {
    // An acyclic graph of either kind makes the SP graph acyclic.
    auto stable = stable_models(t, c.cap);
    auto pointwise = pointwise_stable_models(t, c.cap);
    lines.push_back("stable: " + show(stable));
    j["stable"] = models_json(stable);
    if (is_nondisjunctive(t)) {
      auto supported = supported_models(t, c.cap);
      bool same = supported == stable;
      lines.push_back("supported: " + show(supported));
      lines.push_back(std::string("supported = stable: ") + (same ? "verified" : "VIOLATED"));
      j["supported"] = models_json(supported);
      j["supported_equals_stable"] = same;
      if (!same) code = kViolation;
    }
    bool same = pointwise == stable;
    lines.push_back("pointwise_stable: " + show(pointwise));
    lines.push_back(std::string("pointwise_stable = stable: ") + (same ? "verified" : "VIOLATED"));
    j["pointwise_stable"] = models_json(pointwise);
    j["pointwise_equals_stable"] = same;
    if (!same) code = kViolation;
  }

  if (c.json)
    out << j.dump(2) << "\n";
  else
    for (const std::string& l : lines) out << l << "\n";
  return code;
}

inline std::string loop_verdict(GraphKind kind, bool accepted) {
  std::string g = to_string(kind);
  if (!accepted) return "rejected by " + g + "-loop oracle";
  return "accepted by " + g + "-loop oracle" + (kind == GraphKind::SP ? " (UNSOUND)" : "");
}

inline int cmd_loops(const std::string& input, GraphKind kind,
                     const std::optional<AtomSet>& interp, const Common& c, std::ostream& out) {
  Formula f = conjunction(parse_theory(input));
  std::size_t loop_cap = std::min(c.cap, kDefaultLoopCap);
  std::vector<AtomSet> loops =
      strongly_connected_subsets(dependency_graph(f, kind), loop_cap);

  nlohmann::ordered_json j;
  j["graph"] = to_string(kind);
  j["formula"] = print_formula(f);
  auto loops_json = nlohmann::ordered_json::array();
  std::vector<std::string> lines;
  lines.push_back(std::string("graph: ") + to_string(kind));
  lines.push_back("formula: " + print_formula(f));
  if (loops.empty()) lines.push_back("loops: none");

  for (const AtomSet& y : loops) {
    Formula lf = loop_formula(f, y);
    nlohmann::ordered_json lj;
    lj["loop"] = atoms_json(y);
    lj["nes"] = print_formula(nes(f, y));
    lj["loop_formula"] = print_formula(lf);
    lj["tautology"] = is_tautology(lf);
    lines.push_back("loop " + to_string(y) + ":");
    lines.push_back("  nes: " + print_formula(nes(f, y)));
    lines.push_back("  loop formula: " + print_formula(lf));
    lines.push_back("  tautology: " + yes_no(is_tautology(lf)));
    if (interp) {
      bool sat = satisfies(*interp, lf);
      lj["satisfied"] = sat;
      lines.push_back(std::string("  under ") + show(*interp) + ": " +
                      (sat ? "satisfied" : "violated"));
    }
    loops_json.push_back(lj);
  }
  j["loops"] = loops_json;

  if (interp) {
    bool accepted = stable_via_loops(*interp, f, kind, loop_cap);
    bool stable = is_stable(*interp, Theory{{f}});
    j["interpretation"] = atoms_json(*interp);
    j["satisfies_formula"] = satisfies(*interp, f);
    j["verdict"] = loop_verdict(kind, accepted);
    j["stable"] = stable;
    lines.push_back("satisfies formula: " + yes_no(satisfies(*interp, f)));
    lines.push_back("verdict: " + loop_verdict(kind, accepted));
    lines.push_back("stable (brute force): " + yes_no(stable));
  }

  if (c.json)
    out << j.dump(2) << "\n";
  else
    for (const std::string& l : lines) out << l << "\n";
  return kOk;
}

inline int cmd_nes(const std::string& input, const AtomSet& y, const Common& c,
                   std::ostream& out) {
  Formula f = conjunction(parse_theory(input));
  Formula n = nes(f, y);
  std::optional<Formula> lf;
  if (!y.empty()) lf = loop_formula(f, y);
  if (c.json) {
    nlohmann::ordered_json j;
    j["formula"] = print_formula(f);
    j["set"] = atoms_json(y);
    j["nes"] = print_formula(n);
    if (lf) {
      j["loop_formula"] = print_formula(*lf);
      j["tautology"] = is_tautology(*lf);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "formula: " << print_formula(f) << "\n";
  out << "set: " << to_string(y) << "\n";
  out << "nes: " << print_formula(n) << "\n";
  if (lf) {
    out << "loop formula: " << print_formula(*lf) << "\n";
    out << "tautology: " << yes_no(is_tautology(*lf)) << "\n";
  }
  return kOk;
}

inline int cmd_split(const std::string& f_text, const std::string& g_text, const AtomSet& p,
                     GraphKind kind, const Common& c, std::ostream& out) {
  Formula f = parse_formula(f_text);
  Formula g = parse_formula(g_text);
  AtomSet universe = atoms(Formula::conj(f, g));
  AtomSet q;
  for (const Atom& a : universe)
    if (!p.count(a)) q.insert(a);
  SplitReport r = check_split(f, g, p, q, kind, c.cap);

  int code = !r.conditions_hold() ? kConditionFailed
             : r.equivalence_holds ? kOk
                                   : kEquivalenceFailed;
  if (c.json) {
    out << to_json(r).dump(2) << "\n";
    return code;
  }
  auto cond = [](bool holds, const std::string& offending) {
    return holds ? std::string("holds") : "fails (" + offending + ")";
  };
  out << "graph: " << to_string(kind) << "\n";
  out << "P: " << to_string(r.p) << "\n";
  out << "Q: " << to_string(r.q) << "\n";
  out << "condition (i) spos(F) within P: " << cond(r.cond_i, to_string(r.cond_i_offending))
      << "\n";
  out << "condition (ii) spos(G) within Q: " << cond(r.cond_ii, to_string(r.cond_ii_offending))
      << "\n";
  out << "condition (iii) components within P or Q: "
      << cond(r.cond_iii, r.cond_iii_offending ? to_string(*r.cond_iii_offending) : "") << "\n";
  out << "part F: " << print_formula(choice_augment(f, r.q)) << "\n";
  out << "part G: " << print_formula(choice_augment(g, r.p)) << "\n";
  out << "stable F & G: " << show(r.stable_whole) << "\n";
  out << "stable part F: " << show(r.stable_part_f) << "\n";
  out << "stable part G: " << show(r.stable_part_g) << "\n";
  out << "stable for both parts: " << show(r.stable_both_parts) << "\n";
  out << "equivalence: " << (r.equivalence_holds ? "holds" : "FAILS") << "\n";
  return code;
}

struct FuzzArgs {
  std::string property;
  FuzzOptions options;
};

inline int cmd_fuzz(const FuzzArgs& a, const Common& c, std::ostream& out) {
  std::optional<Property> prop = parse_property(a.property);
  if (!prop) {
    std::string names;
    for (auto n : kPropertyNames) names += (names.empty() ? "" : ", ") + std::string(n);
    throw InvalidArgument("unknown property '" + a.property + "' (expected one of " + names +
                          ")");
  }
  if (a.options.max_atoms < 1 || a.options.max_atoms > 4)
    throw InvalidArgument("--max-atoms must be between 1 and 4");
  if (a.options.max_depth > 4) throw InvalidArgument("--max-depth must be at most 4");

  FuzzResult r = run_fuzz(*prop, a.options);
  GraphKind kind = a.options.graph.value_or(default_graph(*prop));
  if (c.json) {
    nlohmann::ordered_json j;
    j["property"] = to_string(*prop);
    j["seed"] = a.options.seed;
    j["count"] = a.options.count;
    j["max_atoms"] = a.options.max_atoms;
    j["max_depth"] = a.options.max_depth;
    j["graph"] = to_string(kind);
    j["cases"] = r.cases;
    j["violations"] = r.violations;
    if (r.first) {
      j["first_counterexample"] = {{"case", r.first->case_index},
                                   {"theory", r.first->theory_text},
                                   {"detail", r.first->detail},
                                   {"reproduce", r.first->reproduce}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "property: " << to_string(*prop) << "\n";
    out << "seed: " << a.options.seed << " count: " << a.options.count
        << " max_atoms: " << a.options.max_atoms << " max_depth: " << a.options.max_depth
        << " graph: " << to_string(kind) << "\n";
    out << "cases: " << r.cases << " violations: " << r.violations << "\n";
    if (r.first) {
      out << "first counterexample (case " << r.first->case_index << "):\n";
      out << "  theory:\n";
      std::string line;
      for (char ch : r.first->theory_text) {
        if (ch == '\n') {
          out << "    " << line << "\n";
          line.clear();
        } else {
          line += ch;
        }
      }
      out << "  detail: " << r.first->detail << "\n";
      out << "  reproduce: " << r.first->reproduce << "\n";
    }
  }
  return r.violations == 0 ? kOk : kViolation;
}

/// Runs `body`, mapping library errors to exit codes with a message on `err`.
template <class Body>
int run_guarded(Body body, std::ostream& err) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "posdep: syntax error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "posdep: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "posdep: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace posdep::cli
