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

#include "boundmu/variants.hpp"

#include <limits>
#include <stdexcept>

namespace boundmu {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Eloise: return "Eloise";
    case Verdict::Abelard: return "Abelard";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::uint64_t f_value(const KripkeModel& m, StateId, const Sentence& s, unsigned k) {
  if (k == 0) throw std::invalid_argument("f exponent k must be at least 1");
  const std::uint64_t card = m.card();
  std::uint64_t f = s.size();
  for (unsigned i = 0; i < k; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / card) throw std::overflow_error("f value overflows");
    f *= card;
  }
  return f;
}

// --- f-bounded --------------------------------------------------------------

std::size_t FPositionHash::operator()(const FPosition& p) const noexcept {
  std::size_t h = (std::size_t{p.state} << 32) ^ p.node;
  h = h * 0x9E3779B97F4A7C15ull + p.gamma_e;
  h = h * 0x9E3779B97F4A7C15ull + p.gamma_a;
  return h ^ (h >> 31);
}

FBoundedGame::FBoundedGame(const KripkeModel& m, const Sentence& s, std::uint64_t f, DecrementMode mode)
    : m_(m), s_(s), ix_(build_index(s)), f_(f), mode_(mode) {}

GameStatus FBoundedGame::status(const FPosition& p) const {
  const Node& nd = s_.node(p.node);
  switch (nd.kind) {
    case Kind::Prop:
      return GameStatus::won(m_.holds(nd.name, p.state) ? Player::Eloise : Player::Abelard);
    case Kind::NegProp:
      return GameStatus::won(m_.holds(nd.name, p.state) ? Player::Abelard : Player::Eloise);
    case Kind::Or:
    case Kind::Mu:
      return GameStatus::turn(Player::Eloise);
    case Kind::And:
    case Kind::Nu:
      return GameStatus::turn(Player::Abelard);
    case Kind::Diamond:
      return m_.successors(p.state).empty() ? GameStatus::won(Player::Abelard) : GameStatus::turn(Player::Eloise);
    case Kind::Box:
      return m_.successors(p.state).empty() ? GameStatus::won(Player::Eloise) : GameStatus::turn(Player::Abelard);
    case Kind::Label: {
      const bool least = s_.node(ix_.reference(p.node)).kind == Kind::Mu;
      const std::uint64_t counter = least ? p.gamma_e : p.gamma_a;
      const Player mover = least ? Player::Eloise : Player::Abelard;
      return counter == 0 ? GameStatus::won(opponent(mover)) : GameStatus::turn(mover);
    }
  }
  throw std::logic_error("unreachable");
}

void FBoundedGame::moves(const FPosition& p, std::vector<std::pair<Move, FPosition>>& out) const {
  out.clear();
  if (status(p).is_won()) return;
  const Node& nd = s_.node(p.node);
  switch (nd.kind) {
    case Kind::Or:
    case Kind::And:
      out.emplace_back(Move::left(), FPosition{p.state, nd.children[0], p.gamma_e, p.gamma_a});
      out.emplace_back(Move::right(), FPosition{p.state, nd.children[1], p.gamma_e, p.gamma_a});
      break;
    case Kind::Diamond:
    case Kind::Box:
      for (StateId v : m_.successors(p.state)) {
        out.emplace_back(Move::go_to(v), FPosition{v, nd.children[0], p.gamma_e, p.gamma_a});
      }
      break;
    case Kind::Mu:
    case Kind::Nu:
      out.emplace_back(Move::proceed(), FPosition{p.state, nd.children[0], p.gamma_e, p.gamma_a});
      break;
    case Kind::Label: {
      const NodeId ref = ix_.reference(p.node);
      const bool least = s_.node(ref).kind == Kind::Mu;
      const std::uint64_t current = least ? p.gamma_e : p.gamma_a;
      const std::uint64_t lowest = mode_ == DecrementMode::One ? current - 1 : 0;
      for (std::uint64_t g = current; g-- > lowest;) {
        FPosition q{p.state, s_.node(ref).children[0], p.gamma_e, p.gamma_a};
        (least ? q.gamma_e : q.gamma_a) = g;
        out.emplace_back(Move::set_clock(g), q);
      }
      break;
    }
    case Kind::Prop:
    case Kind::NegProp:
      break;
  }
}

FBoundedResult solve_fbounded(const KripkeModel& m, StateId w, const Sentence& s, unsigned k,
                              DecrementMode mode, std::size_t cap) {
  if (w >= m.card()) throw std::out_of_range("start state not in model");
  const std::uint64_t f = f_value(m, w, s, k);
  FBoundedGame game(m, s, f, mode);
  DagSolver<FBoundedGame> solver(game, cap);
  const FPosition root = game.initial_position(w);
  const Player winner = solver.winner(root);
  auto strat = solver.extract_strategy(root);
  const std::size_t visited = solver.size();
  const long double bound =
      static_cast<long double>(m.card()) * s.size() * (static_cast<long double>(f) + 1) * (static_cast<long double>(f) + 1);
  if (static_cast<long double>(visited) > bound) {
    throw std::logic_error("f-bounded game visited more positions than card*|phi|*(f+1)^2");
  }
  return {verdict_of(winner), std::move(strat), visited, f};
}

// --- free semantics ---------------------------------------------------------

FreeRegions solve_free_regions(const KripkeModel& m, const Sentence& s) {
  const SyntaxIndex ix = build_index(s);
  const std::size_t size = s.size();
  const std::size_t total = m.card() * size;
  auto id = [size](StateId w, NodeId n) { return w * size + n; };

  // Position graph: owner, ending status, successor lists.
  std::vector<GameStatus> status(total);
  std::vector<std::vector<std::size_t>> succ(total), pred(total);
  for (StateId w = 0; w < m.card(); ++w) {
    for (NodeId n = 0; n < size; ++n) {
      const Node& nd = s.node(n);
      const std::size_t me = id(w, n);
      auto add = [&](std::size_t to) {
        succ[me].push_back(to);
        pred[to].push_back(me);
      };
      switch (nd.kind) {
        case Kind::Prop:
          status[me] = GameStatus::won(m.holds(nd.name, w) ? Player::Eloise : Player::Abelard);
          break;
        case Kind::NegProp:
          status[me] = GameStatus::won(m.holds(nd.name, w) ? Player::Abelard : Player::Eloise);
          break;
        case Kind::Or:
        case Kind::And:
          status[me] = GameStatus::turn(nd.kind == Kind::Or ? Player::Eloise : Player::Abelard);
          add(id(w, nd.children[0]));
          add(id(w, nd.children[1]));
          break;
        case Kind::Diamond:
        case Kind::Box: {
          const Player mover = nd.kind == Kind::Diamond ? Player::Eloise : Player::Abelard;
          if (m.successors(w).empty()) {
            status[me] = GameStatus::won(opponent(mover));
          } else {
            status[me] = GameStatus::turn(mover);
            for (StateId v : m.successors(w)) add(id(v, nd.children[0]));
          }
          break;
        }
        case Kind::Mu:
        case Kind::Nu:
          status[me] = GameStatus::turn(nd.kind == Kind::Mu ? Player::Eloise : Player::Abelard);
          add(id(w, nd.children[0]));
          break;
        case Kind::Label: {
          const NodeId ref = ix.reference(n);
          status[me] = GameStatus::turn(s.node(ref).kind == Kind::Mu ? Player::Eloise : Player::Abelard);
          add(id(w, s.node(ref).children[0]));
          break;
        }
      }
    }
  }

  // Attractor of `player` to the ending positions it wins.
  auto attractor = [&](Player player) {
    std::vector<bool> in(total, false);
    std::vector<std::size_t> remaining(total), queue;
    for (std::size_t x = 0; x < total; ++x) {
      remaining[x] = succ[x].size();
      if (status[x].is_won() && status[x].player == player) {
        in[x] = true;
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (std::size_t y : pred[x]) {
        if (in[y] || status[y].is_won()) continue;
        if (status[y].player == player || --remaining[y] == 0) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    return in;
  };
  const auto eloise = attractor(Player::Eloise);
  const auto abelard = attractor(Player::Abelard);

  FreeRegions r{size, std::vector<Verdict>(total, Verdict::Undetermined)};
  for (std::size_t x = 0; x < total; ++x) {
    if (eloise[x] && abelard[x]) throw std::logic_error("free-game attractors overlap");
    if (eloise[x]) r.verdict[x] = Verdict::Eloise;
    if (abelard[x]) r.verdict[x] = Verdict::Abelard;
  }
  return r;
}

Verdict solve_free(const KripkeModel& m, StateId w, const Sentence& s) {
  if (w >= m.card()) throw std::out_of_range("start state not in model");
  return solve_free_regions(m, s).at(w, s.root());
}

}  // namespace boundmu
