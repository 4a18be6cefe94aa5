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

#include "posdep/formula.hpp"

#include <gtest/gtest.h>

#include "posdep/random.hpp"
#include "posdep/syntax.hpp"

using namespace posdep;

namespace {

Formula F(const char* text) { return parse_formula(text); }
Atom A(const char* name) { return Atom{name}; }

struct Expected {
  const char* atom;
  std::size_t antecedent_count;
  bool negated;
};

void expect_occurrences(const Formula& f, std::vector<Expected> expected) {
  auto occ = classify_occurrences(f);
  ASSERT_EQ(occ.size(), expected.size());
  for (std::size_t k = 0; k < occ.size(); ++k) {
    SCOPED_TRACE(k);
    EXPECT_EQ(occ[k].atom, A(expected[k].atom));
    EXPECT_EQ(occ[k].context.antecedent_count, expected[k].antecedent_count);
    EXPECT_EQ(occ[k].context.negated, expected[k].negated);
  }
}

std::vector<Formula> random_formulas(std::uint64_t seed, std::size_t n) {
  FormulaGenerator gen(atom_pool(4), 4);
  std::vector<Formula> out;
  for (std::size_t k = 0; k < n; ++k) {
    Rng rng(case_seed(seed, k));
    out.push_back(gen.formula(rng));
  }
  return out;
}

}  // namespace

TEST(Atom, NamesFollowTheGrammar) {
  EXPECT_NO_THROW(make_atom("p"));
  EXPECT_NO_THROW(make_atom("b1_X"));
  EXPECT_THROW(make_atom(""), InvalidArgument);
  EXPECT_THROW(make_atom("P"), InvalidArgument);
  EXPECT_THROW(make_atom("1p"), InvalidArgument);
  EXPECT_THROW(make_atom("not"), InvalidArgument);
  EXPECT_THROW(make_atom("bot"), InvalidArgument);
  EXPECT_EQ(A("p"), A("p"));
  EXPECT_LT(A("p"), A("q"));
}

TEST(Formula, StructuralEquality) {
  Formula a = Formula::implies(Formula::atom("p"), Formula::atom("q"));
  Formula b = Formula::implies(Formula::atom("p"), Formula::atom("q"));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == Formula::implies(Formula::atom("q"), Formula::atom("p")));
  EXPECT_FALSE(Formula::conj(Formula::atom("p"), Formula::atom("q")) ==
               Formula::disj(Formula::atom("p"), Formula::atom("q")));
  EXPECT_EQ(Formula::bottom(), Formula::bottom());
  EXPECT_EQ(a.size(), 3u);
}

TEST(Formula, NegationAndBiconditionalAreSugar) {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  EXPECT_EQ(Formula::negation(p), Formula::implies(p, Formula::bottom()));
  EXPECT_TRUE(Formula::negation(p).is_negation());
  EXPECT_EQ(Formula::iff(p, q), Formula::conj(Formula::implies(p, q), Formula::implies(q, p)));
}

TEST(Atoms, OfTheory) {
  Theory mutual = parse_theory("p -> q. q & not r -> p.");
  EXPECT_EQ(atoms(mutual), (AtomSet{A("p"), A("q"), A("r")}));
  EXPECT_TRUE(atoms(Theory{}).empty());
  EXPECT_TRUE(atoms(F("bot -> bot")).empty());
}

TEST(ClassifyOccurrences, ConjunctionOfLiterals) {
  // b2 sits in the antecedent of b2 -> bot: one level, negated.
  expect_occurrences(F("b1 & not b2"), {{"b1", 0, false}, {"b2", 1, true}});
  auto occ = classify_occurrences(F("b1 & not b2"));
  EXPECT_EQ(occ[0].context.path, (Path{0}));
  EXPECT_EQ(occ[1].context.path, (Path{1, 0}));
  EXPECT_TRUE(occ[0].context.strictly_positive());
  EXPECT_FALSE(occ[1].context.positive());
  EXPECT_FALSE(occ[1].context.nonnegated());
}

TEST(ClassifyOccurrences, NestedImplications) {
  // In the whole formula p lies inside three antecedents: those of p -> q,
  // of (p -> q) -> r and of the outer implication.
  expect_occurrences(F("((p -> q) -> r) -> s"),
                     {{"p", 3, false}, {"q", 2, false}, {"r", 1, false}, {"s", 0, false}});
  // Relative to the body (p -> q) -> r, p is positive and nonnegated.
  expect_occurrences(F("(p -> q) -> r"), {{"p", 2, false}, {"q", 1, false}, {"r", 0, false}});
}

TEST(ClassifyOccurrences, SingleAtomAndNegatedPositive) {
  expect_occurrences(F("p"), {{"p", 0, false}});
  EXPECT_EQ(classify_occurrences(F("p")).front().context.path, Path{});
  // Even depth, but below "not": positive and negated.
  expect_occurrences(F("not (p -> q)"), {{"p", 2, true}, {"q", 1, true}});
  expect_occurrences(F("bot"), {});
}

TEST(Spos, Examples) {
  EXPECT_EQ(spos(F("b1 & b2 & not b3")), (AtomSet{A("b1"), A("b2")}));
  EXPECT_EQ(spos(F("((p -> q) -> r) -> s")), AtomSet{A("s")});
  EXPECT_TRUE(spos(F("bot")).empty());
  EXPECT_EQ(spos(F("p | (q -> r)")), (AtomSet{A("p"), A("r")}));
}

TEST(PositiveNonnegated, Examples) {
  EXPECT_EQ(positive_nonnegated(F("(p -> q) -> r")), (AtomSet{A("p"), A("r")}));
  EXPECT_EQ(positive_nonnegated(F("q & not r")), AtomSet{A("q")});
  EXPECT_EQ(positive_nonnegated(F("not not p")), AtomSet{});
}

TEST(RulesOf, TopLevelConjunctionOfRules) {
  Formula loop_gap = F("(p -> q) & (((q -> p) -> p) -> p)");
  auto rules = rules_of(loop_gap);
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].body, F("p"));
  EXPECT_EQ(rules[0].head, F("q"));
  EXPECT_EQ(rules[0].path, Path{0});
  EXPECT_EQ(rules[1].body, F("(q -> p) -> p"));
  EXPECT_EQ(rules[1].head, F("p"));
  EXPECT_EQ(rules[1].path, Path{1});
}

TEST(RulesOf, ConsequentRulesAreIncluded) {
  auto rules = rules_of(F("p -> (q -> r)"));
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].body, F("p"));
  EXPECT_EQ(rules[0].head, F("q -> r"));
  EXPECT_EQ(rules[0].path, Path{});
  EXPECT_EQ(rules[1].body, F("q"));
  EXPECT_EQ(rules[1].head, F("r"));
  EXPECT_EQ(rules[1].path, Path{1});
}

TEST(RulesOf, NoImplicationNoRules) {
  EXPECT_TRUE(rules_of(F("p")).empty());
  EXPECT_TRUE(rules_of(F("p & (q | r)")).empty());
  // A constraint is a rule with head bot.
  EXPECT_EQ(rules_of(F("not p")).size(), 1u);
}

TEST(Nondisjunctive, Examples) {
  EXPECT_TRUE(is_nondisjunctive_rule(F("q & not r -> p")));
  EXPECT_FALSE(is_nondisjunctive_rule(F("p | q")));
  EXPECT_TRUE(is_nondisjunctive_rule(F("p")));
  EXPECT_FALSE(is_nondisjunctive_rule(F("not p")));
  EXPECT_FALSE(is_nondisjunctive_rule(F("p -> q | r")));
  auto fact = as_nondisjunctive_rule(F("p"));
  ASSERT_TRUE(fact);
  EXPECT_EQ(fact->body, Formula::top());
  EXPECT_EQ(fact->head, A("p"));
}

TEST(Conjunction, FoldsLeft) {
  EXPECT_EQ(conjunction(parse_theory("p. q. r")), F("p & q & r"));
  EXPECT_EQ(conjunction(Theory{}), Formula::top());
}

// Properties over random formulas.

TEST(OccurrenceProperties, SposMatchesZeroAntecedentCount) {
  for (const Formula& f : random_formulas(11, 500)) {
    AtomSet from_contexts;
    for (const auto& occ : classify_occurrences(f)) {
      const auto& c = occ.context;
      if (c.strictly_positive()) {
        from_contexts.insert(occ.atom);
        EXPECT_TRUE(c.positive() && c.nonnegated()) << print_formula(f);
      }
    }
    EXPECT_EQ(spos(f), from_contexts) << print_formula(f);
    AtomSet all = atoms(f), sp = spos(f);
    EXPECT_TRUE(std::includes(all.begin(), all.end(), sp.begin(), sp.end()));
  }
}

TEST(OccurrenceProperties, RulesAreStrictlyPositiveImplications) {
  for (const Formula& f : random_formulas(12, 500)) {
    auto rules = rules_of(f);
    for (const RuleOccurrence& r : rules) {
      auto node = subformula_at(f, r.path);
      ASSERT_TRUE(node);
      ASSERT_TRUE(node->is_implication());
      EXPECT_EQ(node->lhs(), r.body);
      EXPECT_EQ(node->rhs(), r.head);
      // No step into an antecedent on the way down.
      Formula cur = f;
      for (std::size_t step : r.path) {
        EXPECT_FALSE(cur.is_implication() && step == 0) << print_formula(f);
        cur = step == 0 ? cur.lhs() : cur.rhs();
      }
    }
    // Count strictly positive implications independently.
    std::size_t expected = 0;
    auto count = [&](const auto& self, const Formula& g, bool sp) -> void {
      if (g.is_atom() || g.is_bottom()) return;
      if (g.is_implication()) {
        if (sp) ++expected;
        self(self, g.lhs(), false);
        self(self, g.rhs(), sp);
      } else {
        self(self, g.lhs(), sp);
        self(self, g.rhs(), sp);
      }
    };
    count(count, f, true);
    EXPECT_EQ(rules.size(), expected) << print_formula(f);
  }
}
