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

#include "posdep/loopformulas.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "posdep/random.hpp"
#include "posdep/syntax.hpp"

using namespace posdep;

namespace {

Formula F(const char* text) { return parse_formula(text); }
AtomSet S(std::initializer_list<const char*> names) {
  AtomSet out;
  for (const char* n : names) out.insert(Atom{n});
  return out;
}

const char* const kMutual = "(p -> q) & (q & not r -> p)";
const char* const kSpTight = "(p -> q) & (((q -> r) -> r) -> p)";
const char* const kLoopGap = "(p -> q) & (((q -> p) -> p) -> p)";

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

TEST(Nes, Clauses) {
  EXPECT_EQ(nes(F("a"), S({"a"})), Formula::bottom());
  EXPECT_EQ(nes(F("a"), S({})), F("a"));
  EXPECT_EQ(nes(Formula::bottom(), S({})), Formula::bottom());
  EXPECT_EQ(nes(F("a & b"), S({"a"})), F("bot & b"));
  EXPECT_EQ(nes(F("a | b"), S({"b"})), F("a | bot"));
  EXPECT_EQ(nes(F("a -> b"), S({"b"})), F("(a -> bot) & (a -> b)"));
  // not a is a -> bot, so the implication clause applies.
  EXPECT_EQ(nes(F("not a"), S({"a"})), F("(bot -> bot) & not a"));
}

TEST(Nes, CounterexampleFormula) {
  Formula loop_gap = F(kLoopGap);
  Formula expected = F("not p & not q");
  for (const AtomSet& y : {S({"p"}), S({"q"})}) {
    ASSERT_TRUE(oracle::equivalent(nes(loop_gap, y), expected)) << print_formula(nes(loop_gap, y));
    EXPECT_TRUE(equivalent(nes(loop_gap, y), expected));
  }
}

TEST(Nes, Errors) {
  EXPECT_THROW(nes(F("p -> q"), S({"r"})), InvalidArgument);
  EXPECT_THROW(loop_formula(F("p -> q"), S({})), InvalidArgument);
  EXPECT_THROW(loop_formula(F("p -> q"), S({"p", "z"})), InvalidArgument);
}

TEST(LoopFormula, Shape) {
  Formula f = F("q -> p");
  Formula n = nes(f, S({"p"}));
  EXPECT_EQ(loop_formula(f, S({"p"})), Formula::implies(F("p"), Formula::negation(n)));
  Formula m = nes(f, S({"p", "q"}));
  EXPECT_EQ(loop_formula(f, S({"q", "p"})),
            Formula::conj(Formula::implies(F("p"), Formula::negation(m)),
                          Formula::implies(F("q"), Formula::negation(m))));
}

TEST(LoopFormula, CounterexampleFormula) {
  Formula loop_gap = F(kLoopGap);
  ASSERT_TRUE(oracle::tautology(loop_formula(loop_gap, S({"p"}))));
  ASSERT_TRUE(oracle::tautology(loop_formula(loop_gap, S({"q"}))));
  EXPECT_TRUE(is_tautology(loop_formula(loop_gap, S({"p"}))));
  EXPECT_TRUE(is_tautology(loop_formula(loop_gap, S({"q"}))));
  EXPECT_FALSE(satisfies(S({"p", "q"}), loop_formula(loop_gap, S({"p", "q"}))));
}

TEST(StableViaLoops, CounterexampleFormula) {
  Formula loop_gap = F(kLoopGap);
  AtomSet pq = S({"p", "q"});
  EXPECT_TRUE(satisfies(pq, loop_gap));
  EXPECT_FALSE(is_stable(pq, Theory{{loop_gap}}));
  EXPECT_TRUE(stable_via_loops(pq, loop_gap, GraphKind::SP));
  EXPECT_FALSE(stable_via_loops(pq, loop_gap, GraphKind::PNN));
  EXPECT_FALSE(stable_via_all_sets(pq, loop_gap));
  bool empty_stable = oracle::stable(S({}), Theory{{loop_gap}}, S({"p", "q"}));
  EXPECT_EQ(stable_via_loops(S({}), loop_gap, GraphKind::PNN), empty_stable);
}

TEST(StableViaAllSets, SingleAtom) {
  // NES_p({p}) is bot, so the only loop formula p -> not bot is a tautology.
  EXPECT_TRUE(stable_via_all_sets(S({"p"}), F("p")));
  EXPECT_FALSE(stable_via_all_sets(S({}), F("p")));
  EXPECT_THROW(stable_via_all_sets(S({"z"}), F("p")), InvalidArgument);
}

TEST(StableViaAllSets, AgreesWithBruteForceOnWorkedFormulas) {
  for (const char* text : {kMutual, kSpTight, kLoopGap}) {
    Formula f = F(text);
    AtomSet u = atoms(f);
    for (const Interpretation& i : oracle::subsets(u)) {
      bool brute = oracle::stable(i, Theory{{f}}, u);
      EXPECT_EQ(stable_via_all_sets(i, f), brute) << text << " " << to_string(i);
      EXPECT_EQ(stable_via_loops(i, f, GraphKind::PNN), brute) << text << " " << to_string(i);
    }
  }
}

TEST(StableViaLoops, Caps) {
  std::string big = "a0";
  for (int k = 1; k < 17; ++k) big += " & a" + std::to_string(k);
  Formula f = parse_formula(big);
  EXPECT_THROW(stable_via_loops(S({}), f, GraphKind::PNN), CapExceeded);
  EXPECT_THROW(stable_via_all_sets(S({}), f, 10), CapExceeded);
}

// Invariants.

TEST(LoopProperties, PnnLoopsAreComplete) {
  for (const Formula& f : random_formulas(51, 400)) {
    AtomSet u = atoms(f);
    for (const Interpretation& i : oracle::subsets(u)) {
      bool brute = oracle::stable(i, Theory{{f}}, u);
      ASSERT_EQ(stable_via_all_sets(i, f), brute) << print_formula(f) << " " << to_string(i);
      ASSERT_EQ(stable_via_loops(i, f, GraphKind::PNN), brute)
          << print_formula(f) << " " << to_string(i);
    }
  }
}

TEST(LoopProperties, EmptySetNesIsTheFormula) {
  for (const Formula& f : random_formulas(52, 400))
    EXPECT_TRUE(oracle::equivalent(nes(f, {}), f)) << print_formula(f);
}

TEST(LoopProperties, UnsatisfiableNesGivesTautology) {
  for (const Formula& f : random_formulas(53, 200)) {
    AtomSet u = atoms(f);
    for (const AtomSet& y : oracle::subsets(u)) {
      if (y.empty()) continue;
      Formula n = nes(f, y);
      if (is_satisfiable(n)) continue;
      EXPECT_TRUE(oracle::tautology(loop_formula(f, y))) << print_formula(f);
    }
  }
}

TEST(LoopProperties, SpLoopsCanBeUnsound) {
  // Over random formulas the SP variant only ever errs by accepting.
  for (const Formula& f : random_formulas(54, 300)) {
    AtomSet u = atoms(f);
    for (const Interpretation& i : oracle::subsets(u)) {
      if (stable_via_loops(i, f, GraphKind::SP)) continue;
      EXPECT_FALSE(oracle::stable(i, Theory{{f}}, u)) << print_formula(f);
    }
  }
}
