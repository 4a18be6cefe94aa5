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

// Seeded random formulas and theories. The generator is part of the tested
// surface: the same seed gives the same formulas on every platform. Only
// std::mt19937_64 (fully specified by the standard) and modular reduction
// are used, never the implementation-defined std distributions.
//
// formula(depth):
//   depth 0: a leaf
//   else:    uniformly one of leaf, F & G, F | G, F -> G, not F, with the
//            operands drawn at depth - 1
// leaf: uniformly one of bot and the atoms of the pool
//
// Leaves below no antecedent (strictly positive positions) can be drawn
// from a separate pool, which the splitting sampler uses to satisfy
// conditions (i) and (ii) by construction.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posdep/errors.hpp"
#include "posdep/formula.hpp"

namespace posdep {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish draw from [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream seed for case `index` of a run seeded with `seed`
/// (splitmix64 finalizer), so any single case can be regenerated.
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::size_t kMaxPoolSize = 8;

/// The first `n` atoms of p, q, r, s, t, u, v, w.
inline std::vector<Atom> atom_pool(std::size_t n) {
  static const char* const kNames[kMaxPoolSize] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  if (n == 0 || n > kMaxPoolSize)
    throw InvalidArgument("atom pool size must be between 1 and " +
                          std::to_string(kMaxPoolSize));
  std::vector<Atom> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(Atom{kNames[k]});
  return out;
}

class FormulaGenerator {
 public:
  FormulaGenerator(std::vector<Atom> pool, std::size_t max_depth)
      : FormulaGenerator(pool, pool, max_depth) {}

  /// `positive_pool` feeds strictly positive leaves, `pool` all others.
  FormulaGenerator(std::vector<Atom> positive_pool, std::vector<Atom> pool,
                   std::size_t max_depth)
      : positive_pool_(std::move(positive_pool)), pool_(std::move(pool)), max_depth_(max_depth) {}

  Formula formula(Rng& rng) const { return formula(rng, max_depth_, true); }

  /// 1 to `max_members` formulas.
  Theory theory(Rng& rng, std::size_t max_members) const {
    Theory t;
    std::size_t n = 1 + rng.below(max_members);
    for (std::size_t k = 0; k < n; ++k) t.formulas.push_back(formula(rng));
    return t;
  }

  /// A fact (one draw in four) or Body -> A with Body at depth max_depth - 1.
  Formula nondisjunctive_rule(Rng& rng) const {
    Formula head = Formula::atom(pool_[rng.below(pool_.size())]);
    if (rng.below(4) == 0) return head;
    std::size_t depth = max_depth_ == 0 ? 0 : max_depth_ - 1;
    return Formula::implies(formula(rng, depth, false), head);
  }

  Theory nondisjunctive_theory(Rng& rng, std::size_t max_members) const {
    Theory t;
    std::size_t n = 1 + rng.below(max_members);
    for (std::size_t k = 0; k < n; ++k) t.formulas.push_back(nondisjunctive_rule(rng));
    return t;
  }

 private:
  Formula leaf(Rng& rng, bool strictly_positive) const {
    const std::vector<Atom>& pool = strictly_positive ? positive_pool_ : pool_;
    std::uint64_t k = rng.below(pool.size() + 1);
    return k == 0 ? Formula::bottom() : Formula::atom(pool[k - 1]);
  }

  Formula formula(Rng& rng, std::size_t depth, bool sp) const {
    if (depth == 0) return leaf(rng, sp);
    switch (rng.below(5)) {
      case 0:
        return leaf(rng, sp);
      case 1: {
        Formula l = formula(rng, depth - 1, sp);
        return Formula::conj(l, formula(rng, depth - 1, sp));
      }
      case 2: {
        Formula l = formula(rng, depth - 1, sp);
        return Formula::disj(l, formula(rng, depth - 1, sp));
      }
      case 3: {
        Formula l = formula(rng, depth - 1, false);
        return Formula::implies(l, formula(rng, depth - 1, sp));
      }
      default:
        return Formula::negation(formula(rng, depth - 1, false));
    }
  }

  std::vector<Atom> positive_pool_;
  std::vector<Atom> pool_;
  std::size_t max_depth_;
};

}  // namespace posdep
