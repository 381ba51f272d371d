/*
 * Copyright 2026 The boundmu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boundmu/dag_solver.hpp"
#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"

namespace boundmu {

enum class Verdict : std::uint8_t { Eloise, Abelard, Undetermined };
const char* to_string(Verdict v);
inline Verdict verdict_of(Player p) { return p == Player::Eloise ? Verdict::Eloise : Verdict::Abelard; }

/// f(M, w, phi) = card(M)^k * |phi| with |phi| the syntax-tree node count.
/// The state argument is accepted for the general signature and unused.
std::uint64_t f_value(const KripkeModel& m, StateId w, const Sentence& s, unsigned k);

// --- simple f-bounded games -------------------------------------------------

/// gamma_e / gamma_a are the global counters of Eloise and Abelard.
struct FPosition {
  StateId state = 0;
  NodeId node = 0;
  std::uint64_t gamma_e = 0;
  std::uint64_t gamma_a = 0;
  friend bool operator==(const FPosition&, const FPosition&) = default;
};

struct FPositionHash {
  std::size_t operator()(const FPosition& p) const noexcept;
};

enum class DecrementMode : std::uint8_t { One, Exhaustive };

/// Connective, modality and literal rules are those of the bounded game;
/// binders pass straight to their body; a label transition to a mu (nu)
/// binder lowers gamma_e (gamma_a), and the obligated player loses at 0.
class FBoundedGame {
 public:
  using position_type = FPosition;
  using hasher = FPositionHash;

  FBoundedGame(const KripkeModel& m, const Sentence& s, std::uint64_t f,
               DecrementMode mode = DecrementMode::One);

  FPosition initial_position(StateId w) const { return {w, s_.root(), f_, f_}; }
  GameStatus status(const FPosition& p) const;
  void moves(const FPosition& p, std::vector<std::pair<Move, FPosition>>& out) const;
  std::uint64_t f() const { return f_; }

 private:
  const KripkeModel& m_;
  const Sentence& s_;
  SyntaxIndex ix_;
  std::uint64_t f_;
  DecrementMode mode_;
};

using FStrategy = Strategy<FPosition, FPositionHash>;

struct FBoundedResult {
  Verdict verdict;
  FStrategy strategy;
  std::size_t visited;
  std::uint64_t f;
};

/// Solves the simple f-bounded game with f = card(M)^k * |phi|. Asserts the
/// visited-position bound card(M) * |phi| * (f+1)^2.
FBoundedResult solve_fbounded(const KripkeModel& m, StateId w, const Sentence& s, unsigned k,
                              DecrementMode mode = DecrementMode::One, std::size_t cap = 10'000'000);

// --- free semantics ---------------------------------------------------------

/// Verdict for every (state, node) position of the clock-free game,
/// indexed state * size + node.
struct FreeRegions {
  std::size_t size;
  std::vector<Verdict> verdict;
  Verdict at(StateId w, NodeId n) const { return verdict[w * size + n]; }
};

/// Eloise (Abelard) region: her (his) attractor to ending positions she
/// (he) wins. Positions in neither attractor are Undetermined.
FreeRegions solve_free_regions(const KripkeModel& m, const Sentence& s);
Verdict solve_free(const KripkeModel& m, StateId w, const Sentence& s);

}  // namespace boundmu
