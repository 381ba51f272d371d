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

#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "boundmu/formula.hpp"
#include "boundmu/game.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/semantics.hpp"

namespace boundmu {

inline constexpr const char* kPB = "p_B";
inline constexpr const char* kQB = "q_B";

/// mu X. ((p_B | (q_B & <> X)) | (!q_B & [] X)): defines the winning set of
/// the alternating reachability game.
const Sentence& chi();

class VocabularyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model over the vocabulary {p_B, q_B} with a start state.
struct ARModel {
  KripkeModel model;
  StateId start = 0;
};

/// Throws VocabularyError if the model mentions a proposition other than
/// p_B and q_B.
void check_ar_vocabulary(const KripkeModel& m);

/// Player B's winning region: least fixed point of
///   p_B  or  (q_B and some successor inside)
///        or  (not q_B and every successor inside, vacuously at dead ends).
StateSet ar_winning_region(const KripkeModel& m);
bool solve_ar(const KripkeModel& m, StateId w);
inline bool solve_ar(const ARModel& a) { return solve_ar(a.model, a.start); }

/// AR model over the positions of a bounded evaluation game.
struct ReducedModel {
  ARModel ar;
  /// Game position of each reduced state (by reduced StateId).
  std::vector<Position> backmap;
};

struct ReduceOptions {
  /// Export the unfolded game tree instead of the position DAG.
  bool tree = false;
  std::size_t cap = 10'000'000;
  /// Name reduced states by their position key; otherwise "s<k>".
  bool key_names = true;
};

/// J_phi: the reachable canonical positions of (M, w, phi, Gamma) with the
/// successor relation; p_B on true-literal positions, q_B on positions
/// where Eloise moves (or, diamond, mu, mu-labels) and on false literals.
/// `phi` must be a closed normal-form sentence.
ReducedModel build_position_model(const KripkeModel& m, StateId w, const Sentence& phi, Bound bound,
                                  const ReduceOptions& opts = {});

/// I_phi: J_phi at the finite sufficiency bound max(1, card(M)).
ReducedModel reduce_mc(const KripkeModel& m, StateId w, const Sentence& phi, const ReduceOptions& opts = {});

/// Kripke JSON plus "root" (reduced state name) and "backmap"
/// (reduced state name -> {state, node, clocks}).
nlohmann::json reduced_to_json(const ReducedModel& r, const KripkeModel& m, const Sentence& phi, Bound bound);

/// True iff no cycle is reachable from `from`.
bool reachable_acyclic(const KripkeModel& m, StateId from);

}  // namespace boundmu
