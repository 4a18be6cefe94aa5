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

// Positive dependency graphs of propositional theories.
//
// Vertices are the atoms of the theory. For every rule Body -> Head of
// every member, edges run from each strictly positive atom of Head to
//   SP:  each strictly positive atom of Body,
//   PNN: each atom with a positive nonnegated occurrence in Body.
// Polarity is measured inside Body and Head themselves, not inside the
// enclosing member. SP is always a subgraph of PNN.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posdep/errors.hpp"
#include "posdep/formula.hpp"

namespace posdep {

enum class GraphKind { SP, PNN };

inline const char* to_string(GraphKind k) { return k == GraphKind::SP ? "sp" : "pnn"; }

inline std::optional<GraphKind> parse_graph_kind(std::string_view s) {
  if (s == "sp") return GraphKind::SP;
  if (s == "pnn") return GraphKind::PNN;
  return std::nullopt;
}

/// Edge from a head atom to an atom it positively depends on.
struct Edge {
  Atom from;
  Atom to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DepGraph {
  AtomSet vertices;
  std::set<Edge> edges;

  bool has_edge(const Atom& from, const Atom& to) const {
    return edges.count(Edge{from, to}) > 0;
  }

  /// Successors of every vertex, in lexicographic order.
  std::map<Atom, std::vector<Atom>> adjacency() const {
    std::map<Atom, std::vector<Atom>> adj;
    for (const Atom& v : vertices) adj[v];
    for (const Edge& e : edges) adj[e.from].push_back(e.to);
    return adj;
  }

  friend bool operator==(const DepGraph&, const DepGraph&) = default;
};

inline constexpr std::size_t kDefaultLoopCap = 16;

/// Body atoms selected for `kind`.
inline AtomSet dependency_atoms(const Formula& body, GraphKind kind) {
  return kind == GraphKind::SP ? spos(body) : positive_nonnegated(body);
}

inline DepGraph dependency_graph(const Theory& t, GraphKind kind) {
  DepGraph g;
  g.vertices = atoms(t);
  for (const Formula& member : t) {
    for (const RuleOccurrence& rule : rules_of(member)) {
      AtomSet heads = spos(rule.head);
      if (heads.empty()) continue;
      AtomSet deps = dependency_atoms(rule.body, kind);
      for (const Atom& h : heads)
        for (const Atom& b : deps) g.edges.insert(Edge{h, b});
    }
  }
  return g;
}

inline DepGraph g_sp(const Theory& t) { return dependency_graph(t, GraphKind::SP); }
inline DepGraph g_pnn(const Theory& t) { return dependency_graph(t, GraphKind::PNN); }

inline DepGraph dependency_graph(const Formula& f, GraphKind kind) {
  return dependency_graph(Theory{{f}}, kind);
}

/// Vertex and edge containment.
inline bool subgraph_of(const DepGraph& small, const DepGraph& big) {
  return std::includes(big.vertices.begin(), big.vertices.end(), small.vertices.begin(),
                       small.vertices.end()) &&
         std::includes(big.edges.begin(), big.edges.end(), small.edges.begin(),
                       small.edges.end());
}

/// Whether the graph has a directed cycle; self-loops count. For finite
/// graphs this is the same as having an infinite path.
inline bool has_cycle(const DepGraph& g) {
  enum class Mark { White, Grey, Black };
  auto adj = g.adjacency();
  std::map<Atom, Mark> mark;
  for (const Atom& v : g.vertices) mark[v] = Mark::White;

  // Iterative DFS; a grey successor closes a cycle.
  for (const Atom& root : g.vertices) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<Atom, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const std::vector<Atom>& succ = adj[v];
      if (next == succ.size()) {
        mark[v] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const Atom& w = succ[next++];
      if (mark[w] == Mark::Grey) return true;
      if (mark[w] == Mark::White) {
        mark[w] = Mark::Grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return false;
}

/// Maximal strongly connected components (Tarjan). Each component lists its
/// atoms in order; components are ordered by their least atom.
inline std::vector<AtomSet> sccs(const DepGraph& g) {
  auto adj = g.adjacency();
  std::map<Atom, std::size_t> index, low;
  std::map<Atom, bool> on_stack;
  std::vector<Atom> stack;
  std::vector<AtomSet> out;
  std::size_t counter = 0;

  std::function<void(const Atom&)> connect = [&](const Atom& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const Atom& w : adj[v]) {
      if (!index.count(w)) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      AtomSet component;
      Atom w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.insert(w);
      } while (w != v);
      out.push_back(std::move(component));
    }
  };
  for (const Atom& v : g.vertices)
    if (!index.count(v)) connect(v);

  std::sort(out.begin(), out.end(),
            [](const AtomSet& a, const AtomSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

/// Whether the subgraph induced by `subset` is strongly connected. Every
/// singleton qualifies, with or without a self-loop.
inline bool induces_strongly_connected(const DepGraph& g, const AtomSet& subset) {
  if (subset.empty()) return false;
  auto reach = [&](bool forward) {
    AtomSet seen{*subset.begin()};
    std::vector<Atom> todo{*subset.begin()};
    while (!todo.empty()) {
      Atom v = todo.back();
      todo.pop_back();
      for (const Edge& e : g.edges) {
        const Atom& src = forward ? e.from : e.to;
        const Atom& dst = forward ? e.to : e.from;
        if (src == v && subset.count(dst) && seen.insert(dst).second) todo.push_back(dst);
      }
    }
    return seen.size() == subset.size();
  };
  return reach(true) && reach(false);
}

/// Every nonempty vertex set whose induced subgraph is strongly connected,
/// ordered by size and then lexicographically.
inline std::vector<AtomSet> strongly_connected_subsets(const DepGraph& g,
                                                       std::size_t cap = kDefaultLoopCap) {
  if (g.vertices.size() > cap || g.vertices.size() >= 64)
    throw CapExceeded(cap, g.vertices.size(), "loop enumeration");
  std::vector<Atom> verts(g.vertices.begin(), g.vertices.end());
  std::vector<AtomSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << verts.size()); ++m) {
    AtomSet subset;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (m >> k & 1) subset.insert(verts[k]);
    if (induces_strongly_connected(g, subset)) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Edges in output order: grouped by the atom depended on, then by head.
inline std::vector<Edge> edges_for_output(const DepGraph& g) {
  std::vector<Edge> out(g.edges.begin(), g.edges.end());
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.to, a.from) < std::tie(b.to, b.from);
  });
  return out;
}

/// "head body" per line.
inline std::string to_edge_list(const DepGraph& g) {
  std::string out;
  for (const Edge& e : edges_for_output(g)) out += e.from.name + " " + e.to.name + "\n";
  return out;
}

namespace detail {

inline bool is_dot_id(std::string_view s) {
  if (s.empty() || (s.front() >= '0' && s.front() <= '9')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

inline std::string dot_id(std::string_view s) {
  if (is_dot_id(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// DOT digraph with every vertex and edge on its own line, vertices in
/// lexicographic order followed by edges in edges_for_output order.
inline std::string to_dot(const DepGraph& g, std::string_view label = "G") {
  std::string out = "digraph " + detail::dot_id(label) + " {\n";
  for (const Atom& v : g.vertices) out += "  " + v.name + ";\n";
  for (const Edge& e : edges_for_output(g)) out += "  " + e.from.name + " -> " + e.to.name + ";\n";
  out += "}\n";
  return out;
}

/// Reads back the output of to_dot. Throws InvalidArgument on other input.
inline DepGraph parse_dot(std::string_view text) {
  DepGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false, closed = false;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (!header) {
      if (w.front() != "digraph" || w.back() != "{")
        throw InvalidArgument("expected 'digraph <label> {', got: " + line);
      header = true;
    } else if (w.size() == 1 && w[0] == "}") {
      closed = true;
    } else if (w.size() == 1 && w[0].size() > 1 && w[0].back() == ';') {
      g.vertices.insert(make_atom(w[0].substr(0, w[0].size() - 1)));
    } else if (w.size() == 3 && w[1] == "->" && w[2].size() > 1 && w[2].back() == ';') {
      Atom from = make_atom(w[0]);
      Atom to = make_atom(w[2].substr(0, w[2].size() - 1));
      g.vertices.insert(from);
      g.vertices.insert(to);
      g.edges.insert(Edge{from, to});
    } else {
      throw InvalidArgument("unrecognized DOT statement: " + line);
    }
  }
  if (!header || !closed) throw InvalidArgument("incomplete DOT digraph");
  return g;
}

}  // namespace posdep
