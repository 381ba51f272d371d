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
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace boundmu {

enum class Player : std::uint8_t { Eloise, Abelard };

constexpr Player opponent(Player p) { return p == Player::Eloise ? Player::Abelard : Player::Eloise; }
inline const char* to_string(Player p) { return p == Player::Eloise ? "Eloise" : "Abelard"; }

struct GameStatus {
  enum class Kind : std::uint8_t { Turn, Won };
  Kind kind;
  Player player;

  static GameStatus turn(Player p) { return {Kind::Turn, p}; }
  static GameStatus won(Player p) { return {Kind::Won, p}; }
  bool is_won() const { return kind == Kind::Won; }

  friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

struct Move {
  enum class Kind : std::uint8_t { PickLeft, PickRight, GoTo, SetClock, Proceed };
  Kind kind;
  std::uint64_t value = 0;  // target state for GoTo, clock value for SetClock

  static Move left() { return {Kind::PickLeft, 0}; }
  static Move right() { return {Kind::PickRight, 0}; }
  static Move go_to(std::uint64_t state) { return {Kind::GoTo, state}; }
  static Move set_clock(std::uint64_t gamma) { return {Kind::SetClock, gamma}; }
  /// Single forced step (binder pass-through in clock-free variants).
  static Move proceed() { return {Kind::Proceed, 0}; }

  friend bool operator==(const Move&, const Move&) = default;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a supposedly well-founded position graph contains a cycle.
class CycleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Partial map from positions owned by `player` to the prescribed move.
template <class Pos, class Hash>
struct Strategy {
  Player player = Player::Eloise;
  std::unordered_map<Pos, Move, Hash> moves;

  const Move* find(const Pos& p) const {
    auto it = moves.find(p);
    return it == moves.end() ? nullptr : &it->second;
  }
};

/// Insertion-ordered set of positions with dense ids, open addressing.
template <class Pos, class Hash>
class Interner {
 public:
  using Id = std::uint32_t;
  static constexpr Id kAbsent = 0xffffffffu;

  std::size_t size() const { return items_.size(); }
  const Pos& operator[](Id id) const { return items_[id]; }

  Id find(const Pos& p) const {
    if (items_.empty()) return kAbsent;
    for (std::size_t i = Hash{}(p) & mask_;; i = (i + 1) & mask_) {
      const Id id = slots_[i];
      if (id == kAbsent) return kAbsent;
      if (items_[id] == p) return id;
    }
  }

  /// Id of p, inserting it if new. `fresh` reports an insertion.
  Id insert(const Pos& p, bool& fresh) {
    if ((items_.size() + 1) * 2 > slots_.size()) grow();
    std::size_t i = Hash{}(p) & mask_;
    for (;; i = (i + 1) & mask_) {
      const Id id = slots_[i];
      if (id == kAbsent) break;
      if (items_[id] == p) {
        fresh = false;
        return id;
      }
    }
    fresh = true;
    const auto id = static_cast<Id>(items_.size());
    slots_[i] = id;
    items_.push_back(p);
    return id;
  }

 private:
  void grow() {
    const std::size_t n = slots_.empty() ? 64 : slots_.size() * 2;
    slots_.assign(n, kAbsent);
    mask_ = n - 1;
    for (Id id = 0; id < items_.size(); ++id) {
      std::size_t i = Hash{}(items_[id]) & mask_;
      while (slots_[i] != kAbsent) i = (i + 1) & mask_;
      slots_[i] = id;
    }
  }

  std::vector<Pos> items_;
  std::vector<Id> slots_;
  std::size_t mask_ = 0;
};

/// Memoized backward induction over a finite acyclic position graph.
///
/// Arena requirements:
///   using position_type; using hasher;
///   GameStatus status(const position_type&) const;
///   void moves(const position_type&, std::vector<std::pair<Move, position_type>>&) const;
/// Moves must be produced in tie-break order; the first winning move is the
/// one prescribed. A repeated position on the current search path raises
/// CycleError, so every solved instance is checked for acyclicity.
template <class Arena>
class DagSolver {
 public:
  using Pos = typename Arena::position_type;
  using Hash = typename Arena::hasher;
  using Id = std::uint32_t;

  explicit DagSolver(const Arena& arena, std::size_t cap = 10'000'000) : arena_(arena), cap_(cap) {}

  Player winner(const Pos& root) { return entries_[solve_from(intern(root))].winner; }

  /// Number of distinct positions explored so far.
  std::size_t size() const { return positions_.size(); }

  /// Index of the move the position's owner should play: the first winning
  /// move if the owner wins there, otherwise the first legal move.
  std::size_t best_move_index(const Pos& p) {
    const Id id = solve_from(intern(p));
    const Entry& e = entries_[id];
    if (e.status.is_won()) throw std::logic_error("no move at an ending position");
    return e.best == kNone ? 0 : e.best;
  }

  /// Winning strategy of the root's winner over every position reachable
  /// when the winner follows it and the opponent plays anything.
  Strategy<Pos, Hash> extract_strategy(const Pos& root) {
    const Id r = solve_from(intern(root));
    Strategy<Pos, Hash> strat;
    strat.player = entries_[r].winner;
    std::vector<bool> seen(positions_.size(), false);
    std::vector<Id> work{r};
    while (!work.empty()) {
      const Id id = work.back();
      work.pop_back();
      if (id < seen.size() && seen[id]) continue;
      if (id >= seen.size()) seen.resize(positions_.size(), false);
      seen[id] = true;
      const Entry& e = entries_[id];
      if (e.status.is_won()) continue;
      if (e.status.player == strat.player) {
        strat.moves.emplace(positions_[id], moves_[e.first + e.best].first);
        work.push_back(succ_[e.first + e.best]);
      } else {
        for (std::uint32_t i = 0; i < e.count; ++i) work.push_back(succ_[e.first + i]);
      }
    }
    return strat;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  enum class Color : std::uint8_t { White, Gray, Black };

  struct Entry {
    GameStatus status;
    Color color = Color::White;
    Player winner = Player::Eloise;
    std::uint32_t first = 0;  // offset into succ_/moves_
    std::uint32_t count = 0;
    std::uint32_t best = kNone;
  };

  Id intern(const Pos& p) {
    if (positions_.size() >= cap_ && positions_.find(p) == Interner<Pos, Hash>::kAbsent) {
      throw ResourceLimitError("position cap of " + std::to_string(cap_) + " exceeded");
    }
    bool fresh = false;
    const Id id = positions_.insert(p, fresh);
    if (fresh) entries_.push_back(Entry{arena_.status(p)});
    return id;
  }

  void expand(Id id) {
    buf_.clear();
    arena_.moves(positions_[id], buf_);
    const auto first = static_cast<std::uint32_t>(succ_.size());
    for (auto& mv : buf_) {
      const Id s = intern(mv.second);
      succ_.push_back(s);
      moves_.emplace_back(mv.first, s);
    }
    entries_[id].first = first;
    entries_[id].count = static_cast<std::uint32_t>(buf_.size());
  }

  Id solve_from(Id root) {
    if (entries_[root].color == Color::Black) return root;
    std::vector<std::pair<Id, std::uint32_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      Entry* e = &entries_[id];
      if (next == 0 && e->color == Color::White) {
        e->color = Color::Gray;
        if (e->status.is_won()) {
          e->winner = e->status.player;
          e->color = Color::Black;
          stack.pop_back();
          continue;
        }
        const Id keep = id;
        expand(keep);
        e = &entries_[keep];
      }
      if (next < e->count) {
        const Id s = succ_[e->first + next];
        ++next;
        const Color c = entries_[s].color;
        if (c == Color::Gray) throw CycleError("position graph contains a cycle");
        if (c == Color::White) stack.emplace_back(s, 0);
        continue;
      }
      // All successors solved.
      const Player owner = e->status.player;
      e->winner = opponent(owner);
      for (std::uint32_t i = 0; i < e->count; ++i) {
        if (entries_[succ_[e->first + i]].winner == owner) {
          e->winner = owner;
          e->best = i;
          break;
        }
      }
      if (e->count == 0) throw std::logic_error("turn position without legal moves");
      e->color = Color::Black;
      stack.pop_back();
    }
    return root;
  }

  const Arena& arena_;
  std::size_t cap_;
  Interner<Pos, Hash> positions_;
  std::vector<Entry> entries_;
  std::vector<Id> succ_;
  std::vector<std::pair<Move, Id>> moves_;
  std::vector<std::pair<Move, Pos>> buf_;
};

}  // namespace boundmu
