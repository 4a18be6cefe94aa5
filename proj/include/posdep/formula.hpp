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

// Propositional formulas over atoms, bottom, conjunction, disjunction and
// implication, together with the syntactic occurrence analysis the
// dependency graphs are built from.
//
// Negation and the biconditional are not nodes: "not F" is F -> bot and
// "F <-> G" is (F -> G) & (G -> F). Every analysis here runs on that
// desugared tree, so a source-level "not" contributes one antecedent level
// and the negated flag to the atoms beneath it.

#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posdep/errors.hpp"

namespace posdep {

/// A propositional atom. Names follow [a-z][A-Za-z0-9_]* and may not be one
/// of the reserved words "not", "bot", "false".
struct Atom {
  std::string name;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

using AtomSet = std::set<Atom>;

inline bool is_reserved_word(std::string_view word) {
  return word == "not" || word == "bot" || word == "false";
}

inline bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return !is_reserved_word(name);
}

/// Builds an Atom, rejecting names the grammar could not produce.
inline Atom make_atom(std::string name) {
  if (!is_valid_atom_name(name))
    throw InvalidArgument("invalid atom name '" + name + "'");
  return Atom{std::move(name)};
}

enum class Connective { Bottom, Atom, And, Or, Implies };

/// Immutable formula tree. Copies share structure; equality is structural.
class Formula {
 public:
  static Formula bottom();
  static Formula atom(Atom a);
  static Formula atom(std::string name) { return atom(make_atom(std::move(name))); }
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula antecedent, Formula consequent);

  /// F -> bot
  static Formula negation(Formula f) { return implies(std::move(f), bottom()); }
  /// (F -> G) & (G -> F)
  static Formula iff(const Formula& f, const Formula& g) {
    return conj(implies(f, g), implies(g, f));
  }
  /// bot -> bot, the tautology used as the body of facts.
  static Formula top() { return implies(bottom(), bottom()); }

  Connective kind() const;
  bool is_bottom() const { return kind() == Connective::Bottom; }
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_implication() const { return kind() == Connective::Implies; }
  /// True for F -> bot.
  bool is_negation() const;

  /// Precondition: is_atom().
  const Atom& atom_value() const;
  /// Left operand; the antecedent for implications. Precondition: binary.
  const Formula& lhs() const;
  /// Right operand; the consequent for implications. Precondition: binary.
  const Formula& rhs() const;

  /// Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  Atom atom;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t size;
};

inline Formula Formula::bottom() {
  static const Formula kBottom(std::make_shared<const Node>(
      Node{Connective::Bottom, Atom{}, std::nullopt, std::nullopt, 1}));
  return kBottom;
}

inline Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Atom, std::move(a), std::nullopt, std::nullopt, 1}));
}

inline Formula Formula::conj(Formula lhs, Formula rhs) {
  std::size_t n = 1 + lhs.size() + rhs.size();
  return Formula(std::make_shared<const Node>(
      Node{Connective::And, Atom{}, std::move(lhs), std::move(rhs), n}));
}

inline Formula Formula::disj(Formula lhs, Formula rhs) {
  std::size_t n = 1 + lhs.size() + rhs.size();
  return Formula(std::make_shared<const Node>(
      Node{Connective::Or, Atom{}, std::move(lhs), std::move(rhs), n}));
}

inline Formula Formula::implies(Formula antecedent, Formula consequent) {
  std::size_t n = 1 + antecedent.size() + consequent.size();
  return Formula(std::make_shared<const Node>(Node{Connective::Implies, Atom{},
                                                   std::move(antecedent),
                                                   std::move(consequent), n}));
}

inline Connective Formula::kind() const { return node_->kind; }

inline bool Formula::is_negation() const {
  return is_implication() && rhs().is_bottom();
}

inline const Atom& Formula::atom_value() const {
  assert(is_atom());
  return node_->atom;
}

inline const Formula& Formula::lhs() const {
  assert(node_->lhs);
  return *node_->lhs;
}

inline const Formula& Formula::rhs() const {
  assert(node_->rhs);
  return *node_->rhs;
}

inline std::size_t Formula::size() const { return node_->size; }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Connective::Bottom:
      return true;
    case Connective::Atom:
      return a.atom_value() == b.atom_value();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

/// A finite, ordered collection of formulas. Duplicates are kept.
struct Theory {
  std::vector<Formula> formulas;

  bool empty() const { return formulas.empty(); }
  std::size_t size() const { return formulas.size(); }
  auto begin() const { return formulas.begin(); }
  auto end() const { return formulas.end(); }

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Left-nested conjunction of the members; the empty theory folds to top().
inline Formula conjunction(const Theory& t) {
  if (t.empty()) return Formula::top();
  Formula acc = t.formulas.front();
  for (std::size_t i = 1; i < t.size(); ++i)
    acc = Formula::conj(acc, t.formulas[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Atom collection
// ---------------------------------------------------------------------------

namespace detail {

inline void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Connective::Bottom:
      return;
    case Connective::Atom:
      out.insert(f.atom_value());
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

}  // namespace detail

inline AtomSet atoms(const Formula& f) {
  AtomSet out;
  detail::collect_atoms(f, out);
  return out;
}

inline AtomSet atoms(const Theory& t) {
  AtomSet out;
  for (const Formula& f : t) detail::collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Occurrence analysis
// ---------------------------------------------------------------------------

/// Position of a subformula: child indices from the root, 0 for the left
/// operand (antecedent) and 1 for the right operand (consequent).
using Path = std::vector<std::size_t>;

/// Polarity data of one occurrence.
struct OccurrenceContext {
  Path path;
  /// Number of enclosing implications whose antecedent contains the
  /// occurrence.
  std::size_t antecedent_count = 0;
  /// The occurrence lies in the antecedent of some implication whose
  /// consequent is bot.
  bool negated = false;

  bool strictly_positive() const { return antecedent_count == 0; }
  bool positive() const { return antecedent_count % 2 == 0; }
  bool nonnegated() const { return !negated; }

  friend bool operator==(const OccurrenceContext&,
                         const OccurrenceContext&) = default;
};

struct AtomOccurrence {
  Atom atom;
  OccurrenceContext context;
};

namespace detail {

inline void classify(const Formula& f, OccurrenceContext& ctx,
                     std::vector<AtomOccurrence>& out) {
  switch (f.kind()) {
    case Connective::Bottom:
      return;
    case Connective::Atom:
      out.push_back({f.atom_value(), ctx});
      return;
    case Connective::And:
    case Connective::Or:
      ctx.path.push_back(0);
      classify(f.lhs(), ctx, out);
      ctx.path.back() = 1;
      classify(f.rhs(), ctx, out);
      ctx.path.pop_back();
      return;
    case Connective::Implies: {
      OccurrenceContext inner = ctx;
      inner.path.push_back(0);
      ++inner.antecedent_count;
      inner.negated = inner.negated || f.rhs().is_bottom();
      classify(f.lhs(), inner, out);
      ctx.path.push_back(1);
      classify(f.rhs(), ctx, out);
      ctx.path.pop_back();
      return;
    }
  }
}

}  // namespace detail

/// Every atom occurrence of `f` in tree order (left before right).
inline std::vector<AtomOccurrence> classify_occurrences(const Formula& f) {
  std::vector<AtomOccurrence> out;
  OccurrenceContext root;
  detail::classify(f, root, out);
  return out;
}

/// Atoms with at least one strictly positive occurrence.
inline AtomSet spos(const Formula& f) {
  AtomSet out;
  // Only And/Or and implication consequents keep strict positivity.
  auto walk = [&out](const auto& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Connective::Bottom:
        return;
      case Connective::Atom:
        out.insert(g.atom_value());
        return;
      case Connective::And:
      case Connective::Or:
        self(self, g.lhs());
        self(self, g.rhs());
        return;
      case Connective::Implies:
        self(self, g.rhs());
        return;
    }
  };
  walk(walk, f);
  return out;
}

inline AtomSet spos(const Theory& t) {
  AtomSet out;
  for (const Formula& f : t) out.merge(spos(f));
  return out;
}

/// Atoms with at least one positive nonnegated occurrence.
inline AtomSet positive_nonnegated(const Formula& f) {
  AtomSet out;
  for (const AtomOccurrence& occ : classify_occurrences(f))
    if (occ.context.positive() && occ.context.nonnegated()) out.insert(occ.atom);
  return out;
}

/// A strictly positive occurrence of an implication Body -> Head.
struct RuleOccurrence {
  Formula body;
  Formula head;
  Path path;
};

/// All rules of `f` in tree order. The consequent of a rule is itself
/// strictly positive, so rules nested there are reported too.
inline std::vector<RuleOccurrence> rules_of(const Formula& f) {
  std::vector<RuleOccurrence> out;
  Path path;
  auto walk = [&](const auto& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Connective::Bottom:
      case Connective::Atom:
        return;
      case Connective::And:
      case Connective::Or:
        path.push_back(0);
        self(self, g.lhs());
        path.back() = 1;
        self(self, g.rhs());
        path.pop_back();
        return;
      case Connective::Implies:
        out.push_back({g.lhs(), g.rhs(), path});
        path.push_back(1);
        self(self, g.rhs());
        path.pop_back();
        return;
    }
  };
  walk(walk, f);
  return out;
}

/// Subformula at `path`, or nullopt if the path leaves the tree.
inline std::optional<Formula> subformula_at(const Formula& f, const Path& path) {
  Formula cur = f;
  for (std::size_t step : path) {
    if (cur.is_atom() || cur.is_bottom() || step > 1) return std::nullopt;
    cur = step == 0 ? cur.lhs() : cur.rhs();
  }
  return cur;
}

/// Body and head atom of a nondisjunctive rule.
struct NondisjunctiveRule {
  Formula body;
  Atom head;
};

/// Views `f` as Body -> A. A bare atom A is the fact (bot -> bot) -> A.
inline std::optional<NondisjunctiveRule> as_nondisjunctive_rule(const Formula& f) {
  if (f.is_atom()) return NondisjunctiveRule{Formula::top(), f.atom_value()};
  if (f.is_implication() && f.rhs().is_atom())
    return NondisjunctiveRule{f.lhs(), f.rhs().atom_value()};
  return std::nullopt;
}

inline bool is_nondisjunctive_rule(const Formula& f) {
  return as_nondisjunctive_rule(f).has_value();
}

inline bool is_nondisjunctive(const Theory& t) {
  for (const Formula& f : t)
    if (!is_nondisjunctive_rule(f)) return false;
  return true;
}

}  // namespace posdep
