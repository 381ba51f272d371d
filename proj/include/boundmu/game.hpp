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
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <nlohmann/json.hpp>

#include "boundmu/dag_solver.hpp"
#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/semantics.hpp"

namespace boundmu {

/// Clock value of a binder: a finite ordinal, or Top (equal to the bound,
/// never chosen since the last reset).
class ClockValue {
 public:
  static constexpr ClockValue top() { return ClockValue(kTop); }
  static constexpr ClockValue finite(std::uint32_t n) { return ClockValue(n); }

  constexpr bool is_top() const { return raw_ == kTop; }
  constexpr std::uint32_t value() const { return raw_; }
  std::string to_string() const { return is_top() ? "T" : std::to_string(raw_); }

  friend constexpr bool operator==(ClockValue, ClockValue) = default;

 private:
  static constexpr std::uint32_t kTop = 0xffffffffu;
  constexpr explicit ClockValue(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_;
};

/// Clock values of a position. In canonical representation the entries are
/// aligned with active_ancestors(node); in full representation with
/// mu_nu_nodes. Binders without an entry are implicitly Top.
struct ClockMap {
  boost::container::small_vector<ClockValue, 6> values;
  friend bool operator==(const ClockMap&, const ClockMap&) = default;
};

struct Position {
  StateId state = 0;
  NodeId node = 0;
  ClockMap clocks;
  friend bool operator==(const Position&, const Position&) = default;
};

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept;
};

enum class SolveMode : std::uint8_t { Greedy, Exhaustive };
enum class ClockRepresentation : std::uint8_t { Canonical, Full };

struct GameOptions {
  /// Greedy: clock choices restricted to the largest value at binders and
  /// current-1 at labels. Exhaustive: every value below the limit.
  SolveMode mode = SolveMode::Greedy;
  ClockRepresentation clocks = ClockRepresentation::Canonical;
};

using GameStrategy = Strategy<Position, PositionHash>;
using MoveList = std::vector<std::pair<Move, Position>>;

/// The bounded evaluation game (M, w, phi, Gamma) for every start state w.
/// The model and sentence are referenced, not copied, and must outlive the
/// game. The sentence must be a closed formula in normal form.
class Game {
 public:
  using position_type = Position;
  using hasher = PositionHash;

  Game(const KripkeModel& m, const Sentence& s, Bound bound, GameOptions opts = {});

  const KripkeModel& model() const { return m_; }
  const Sentence& sentence() const { return s_; }
  const SyntaxIndex& index() const { return ix_; }
  Bound bound() const { return bound_; }
  const GameOptions& options() const { return opts_; }

  /// Exclusive upper limit for clock values chosen at binders: Gamma, or
  /// card(M)+1 for omega.
  std::uint32_t clock_limit() const { return limit_; }

  Position initial_position(StateId w) const;
  GameStatus status(const Position& p) const;
  MoveList legal_moves(const Position& p) const;
  void moves(const Position& p, MoveList& out) const;

  /// Clock value of a binder at p (Top if it has no entry).
  ClockValue clock_of(const Position& p, NodeId binder) const;

  /// "(state, node-path, [X=1,Y=T])"
  std::string describe(const Position& p) const;
  std::string describe(const Move& mv) const;
  /// "state|node-path|X=1,Y=0"
  std::string key(const Position& p) const;
  nlohmann::json to_json(const Position& p) const;

 private:
  const std::vector<NodeId>& clock_domain(NodeId node) const;
  /// Smallest clock value offered when choosing below `limit`.
  std::uint32_t lowest_choice(std::uint32_t limit) const;

  const KripkeModel& m_;
  const Sentence& s_;
  SyntaxIndex ix_;
  Bound bound_;
  GameOptions opts_;
  std::uint32_t limit_;
};

struct SolveResult {
  Player winner;
  GameStrategy strategy;
  std::size_t positions;
};

/// Backward induction over the reachable position DAG. Throws
/// ResourceLimitError past `cap` positions and CycleError on a cycle.
SolveResult solve(const Game& g, StateId w, std::size_t cap = 10'000'000);

/// Plays the strategy against every opponent move sequence. True iff every
/// play ends in a win for the strategy's player; false if a play loses or
/// reaches an owned position outside the strategy's domain.
bool strategy_wins_all_playouts(const Game& g, StateId w, const GameStrategy& strat);

// --- play -------------------------------------------------------------------

struct TraceStep {
  Position position;
  GameStatus status;
  std::optional<Move> move;  // empty on the final (ending) position
};
using Trace = std::vector<TraceStep>;

class StrategyUndefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PlayAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks the index of a legal move at a position owned by the agent.
using Agent = std::function<std::size_t(const Game&, const Position&, const MoveList&)>;

Trace play_trace(const Game& g, StateId w, const Agent& eloise, const Agent& abelard);

/// Follows a fixed strategy; StrategyUndefinedError outside its domain.
Agent strategy_agent(const GameStrategy& strat);
/// Plays the solver's move (winning if possible, otherwise the first move).
Agent solver_agent(DagSolver<Game>& solver);
/// REPL: prints the status and enumerated moves, reads a 1-based index.
/// Invalid input re-prompts; end of input throws PlayAborted.
Agent interactive_agent(std::istream& in, std::ostream& out);

/// "k: (state, node-path, clocks) | player: move", one line per round.
std::string format_trace(const Game& g, const Trace& t);
nlohmann::json trace_to_json(const Game& g, const Trace& t);

}  // namespace boundmu
