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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/semantics.hpp"

namespace boundmu::sweep {

/// Compositional engines under test. The sweep compares the game, reduction
/// and variant solvers against these.
struct Engines {
  std::function<StateSet(const KripkeModel&, const Sentence&)> standard;
  std::function<StateSet(const KripkeModel&, const Sentence&, Bound)> bounded;

  static Engines reference();
  /// Bounded semantics stopping one approximant short. Used to check that
  /// the harness reports disagreements.
  static Engines faulty();
};

enum class CheckId : std::uint8_t {
  GtsBounded,        // game winner == bounded compositional membership
  CardCollapse,      // bounded at card(M) == standard
  OmegaStandard,     // omega (compositional and game) == standard
  Termination,       // acyclic position graph, determinacy, strategy playouts
  ReductionJ,        // AR on J_phi == game verdict, acyclic
  ReductionI,        // AR on I_phi == standard verdict, acyclic
  GreedyExhaustive,  // greedy winner == exhaustive winner
  CanonicalFull,     // canonical-clock winner == full-clock-map winner
  FBounded,          // determined, visited bound, decrement-1 == any decrement
  Normalization,     // verdicts invariant under normalize
  Duality,           // dual complements the standard extension
  FreePartition,     // free-game regions disjoint, covering, closed
  ArChi,             // AR solver == chi membership
  ArFBounded,        // f-bounded chi (k=1) == AR solver
};
inline constexpr std::size_t kCheckCount = 14;
const char* check_name(CheckId c);

struct Config {
  std::size_t max_states = 2;
  std::size_t max_binders = 1;
  std::size_t max_nodes = 5;
  std::vector<std::string> props{"p", "q"};
  std::vector<Bound> gammas{Bound::finite(1), Bound::finite(2), Bound::finite(3), Bound::finite(4), Bound::omega()};

  std::size_t random_formulas = 0;
  std::size_t random_max_binders = 2;
  std::size_t random_max_nodes = 9;
  std::uint64_t seed = 1;

  /// 0: enumerate every model with <= max_states states. Otherwise sample
  /// this many models with 1..max_states states.
  std::size_t sample_models = 0;
  /// Extra sampled models (with oracle_max_states states) on which only the
  /// greedy/exhaustive and canonical/full oracles run.
  std::size_t oracle_models = 0;

  std::size_t playout_limit = 500;
  std::size_t oracle_max_states = 3;
  std::size_t oracle_max_binders = 2;
  unsigned oracle_max_gamma = 3;
  unsigned fbounded_k = 1;
  /// Exhaustive AR sweep over models with <= ar_max_states states; 0 disables.
  std::size_t ar_max_states = 3;

  std::size_t cap = 1'000'000;
  unsigned threads = 1;
  bool minimize = true;
};

struct Counterexample {
  std::string check;
  nlohmann::json model;
  std::string formula;
  std::string gamma;
  std::string state;
  std::string detail;
};

struct CheckResult {
  CheckId id;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
};

struct Report {
  std::vector<CheckResult> checks;
  std::uint64_t models = 0;
  std::uint64_t sentences = 0;
  std::uint64_t resource_errors = 0;
  std::uint64_t seed = 0;
  double seconds = 0;

  bool all_agree() const;
  const CheckResult& check(CheckId id) const;
};

Report run(const Config& cfg, const Engines& engines = Engines::reference());

void print(std::ostream& os, const Report& r);
nlohmann::json to_json(const Report& r);

/// Formula corpus used by the sweep: enumerated sentences followed by the
/// seeded random ones.
std::vector<Sentence> sentences(const Config& cfg);

}  // namespace boundmu::sweep
