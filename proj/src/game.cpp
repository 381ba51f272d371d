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

#include "boundmu/game.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace boundmu {

std::size_t PositionHash::operator()(const Position& p) const noexcept {
  std::size_t h = (std::size_t{p.state} << 32) ^ p.node;
  for (ClockValue c : p.clocks.values) h = h * 0x9E3779B97F4A7C15ull + c.value() + 0x632BE5AB;
  return h ^ (h >> 29);
}

Game::Game(const KripkeModel& m, const Sentence& s, Bound bound, GameOptions opts)
    : m_(m), s_(s), ix_(build_index(s)), bound_(bound), opts_(opts) {
  if (!is_normal(s)) throw std::invalid_argument("evaluation games require a sentence in normal form");
  limit_ = bound.is_omega() ? static_cast<std::uint32_t>(m.card()) + 1 : bound.value();
}

const std::vector<NodeId>& Game::clock_domain(NodeId node) const {
  return opts_.clocks == ClockRepresentation::Canonical ? ix_.active_ancestors[node] : ix_.mu_nu_nodes;
}

Position Game::initial_position(StateId w) const {
  if (w >= m_.card()) throw std::out_of_range("start state not in model");
  Position p{w, s_.root(), {}};
  if (opts_.clocks == ClockRepresentation::Full) p.clocks.values.assign(ix_.mu_nu_nodes.size(), ClockValue::top());
  return p;
}

ClockValue Game::clock_of(const Position& p, NodeId binder) const {
  if (opts_.clocks == ClockRepresentation::Full) {
    const auto slot = ix_.binder_slot.at(binder);
    if (!slot) throw std::invalid_argument("not a binder");
    return p.clocks.values.at(*slot);
  }
  const auto& dom = ix_.active_ancestors[p.node];
  auto it = std::find(dom.begin(), dom.end(), binder);
  if (it == dom.end() || static_cast<std::size_t>(it - dom.begin()) >= p.clocks.values.size()) {
    return ClockValue::top();
  }
  return p.clocks.values[static_cast<std::size_t>(it - dom.begin())];
}

GameStatus Game::status(const Position& p) const {
  const Node& nd = s_.node(p.node);
  switch (nd.kind) {
    case Kind::Prop:
      return GameStatus::won(m_.holds(nd.name, p.state) ? Player::Eloise : Player::Abelard);
    case Kind::NegProp:
      return GameStatus::won(m_.holds(nd.name, p.state) ? Player::Abelard : Player::Eloise);
    case Kind::Or:
      return GameStatus::turn(Player::Eloise);
    case Kind::And:
      return GameStatus::turn(Player::Abelard);
    case Kind::Diamond:
      return m_.successors(p.state).empty() ? GameStatus::won(Player::Abelard) : GameStatus::turn(Player::Eloise);
    case Kind::Box:
      return m_.successors(p.state).empty() ? GameStatus::won(Player::Eloise) : GameStatus::turn(Player::Abelard);
    case Kind::Mu:
      return GameStatus::turn(Player::Eloise);
    case Kind::Nu:
      return GameStatus::turn(Player::Abelard);
    case Kind::Label: {
      const NodeId ref = ix_.reference(p.node);
      const ClockValue c = clock_of(p, ref);
      const bool least = s_.node(ref).kind == Kind::Mu;
      if (!c.is_top() && c.value() == 0) return GameStatus::won(least ? Player::Abelard : Player::Eloise);
      return GameStatus::turn(least ? Player::Eloise : Player::Abelard);
    }
  }
  throw std::logic_error("unreachable");
}

std::uint32_t Game::lowest_choice(std::uint32_t limit) const {
  return opts_.mode == SolveMode::Greedy && limit > 0 ? limit - 1 : 0;
}

void Game::moves(const Position& p, MoveList& out) const {
  out.clear();
  if (status(p).is_won()) return;
  const Node& nd = s_.node(p.node);
  switch (nd.kind) {
    case Kind::Or:
    case Kind::And:
      out.emplace_back(Move::left(), Position{p.state, nd.children[0], p.clocks});
      out.emplace_back(Move::right(), Position{p.state, nd.children[1], p.clocks});
      break;
    case Kind::Diamond:
    case Kind::Box:
      for (StateId v : m_.successors(p.state)) {
        out.emplace_back(Move::go_to(v), Position{v, nd.children[0], p.clocks});
      }
      break;
    case Kind::Mu:
    case Kind::Nu:
      for (std::uint32_t g = limit_, lo = lowest_choice(limit_); g-- > lo;) {
        Position q{p.state, nd.children[0], p.clocks};
        if (opts_.clocks == ClockRepresentation::Canonical) {
          q.clocks.values.push_back(ClockValue::finite(g));
        } else {
          q.clocks.values[*ix_.binder_slot[p.node]] = ClockValue::finite(g);
        }
        out.emplace_back(Move::set_clock(g), std::move(q));
      }
      break;
    case Kind::Label: {
      const NodeId ref = ix_.reference(p.node);
      const ClockValue c = clock_of(p, ref);
      const std::uint32_t current = c.is_top() ? limit_ : c.value();
      const NodeId body = s_.node(ref).children[0];
      for (std::uint32_t g = current, lo = lowest_choice(current); g-- > lo;) {
        Position q{p.state, body, {}};
        if (opts_.clocks == ClockRepresentation::Canonical) {
          // Ancestors of ref keep their clocks; binders below ref are reset
          // by dropping their entries.
          const std::size_t keep = ix_.active_ancestors[ref].size();
          q.clocks.values.assign(p.clocks.values.begin(), p.clocks.values.begin() + static_cast<std::ptrdiff_t>(keep));
          q.clocks.values.push_back(ClockValue::finite(g));
        } else {
          q.clocks = p.clocks;
          q.clocks.values[*ix_.binder_slot[ref]] = ClockValue::finite(g);
          for (NodeId inner : ix_.inner_binders[ref]) q.clocks.values[*ix_.binder_slot[inner]] = ClockValue::top();
        }
        out.emplace_back(Move::set_clock(g), std::move(q));
      }
      break;
    }
    case Kind::Prop:
    case Kind::NegProp:
      break;
  }
}

MoveList Game::legal_moves(const Position& p) const {
  MoveList out;
  moves(p, out);
  return out;
}

namespace {

std::string clock_list(const Game& g, const Position& p, const char* open, const char* close) {
  const auto& dom = g.options().clocks == ClockRepresentation::Canonical ? g.index().active_ancestors[p.node]
                                                                         : g.index().mu_nu_nodes;
  std::string out = open;
  for (std::size_t i = 0; i < dom.size() && i < p.clocks.values.size(); ++i) {
    if (i) out += ',';
    out += g.sentence().node(dom[i]).name + "=" + p.clocks.values[i].to_string();
  }
  return out + close;
}

}  // namespace

std::string Game::describe(const Position& p) const {
  return "(" + m_.name(p.state) + ", " + s_.path(p.node) + ", " + clock_list(*this, p, "[", "]") + ")";
}

std::string Game::key(const Position& p) const {
  return m_.name(p.state) + "|" + s_.path(p.node) + "|" + clock_list(*this, p, "", "");
}

std::string Game::describe(const Move& mv) const {
  switch (mv.kind) {
    case Move::Kind::PickLeft: return "pick-left";
    case Move::Kind::PickRight: return "pick-right";
    case Move::Kind::GoTo: return "go-to " + m_.name(static_cast<StateId>(mv.value));
    case Move::Kind::SetClock: return "set-clock " + std::to_string(mv.value);
    case Move::Kind::Proceed: return "proceed";
  }
  return "?";
}

nlohmann::json Game::to_json(const Position& p) const {
  nlohmann::json j{{"state", m_.name(p.state)}, {"node", s_.path(p.node)}, {"clocks", nlohmann::json::object()}};
  const auto& dom = clock_domain(p.node);
  for (std::size_t i = 0; i < dom.size() && i < p.clocks.values.size(); ++i) {
    const ClockValue c = p.clocks.values[i];
    j["clocks"][s_.node(dom[i]).name] = c.is_top() ? nlohmann::json("T") : nlohmann::json(c.value());
  }
  return j;
}

// --- solving ----------------------------------------------------------------

SolveResult solve(const Game& g, StateId w, std::size_t cap) {
  DagSolver<Game> solver(g, cap);
  const Position root = g.initial_position(w);
  const Player winner = solver.winner(root);
  auto strat = solver.extract_strategy(root);
  return {winner, std::move(strat), solver.size()};
}

bool strategy_wins_all_playouts(const Game& g, StateId w, const GameStrategy& strat) {
  std::unordered_set<Position, PositionHash> seen;
  std::vector<Position> work{g.initial_position(w)};
  MoveList moves;
  while (!work.empty()) {
    Position p = std::move(work.back());
    work.pop_back();
    if (!seen.insert(p).second) continue;
    const GameStatus st = g.status(p);
    if (st.is_won()) {
      if (st.player != strat.player) return false;
      continue;
    }
    g.moves(p, moves);
    if (st.player == strat.player) {
      const Move* mv = strat.find(p);
      if (!mv) return false;
      auto it = std::find_if(moves.begin(), moves.end(), [&](const auto& m) { return m.first == *mv; });
      if (it == moves.end()) return false;
      work.push_back(it->second);
    } else {
      for (auto& m : moves) work.push_back(m.second);
    }
  }
  return true;
}

// --- play -------------------------------------------------------------------

Trace play_trace(const Game& g, StateId w, const Agent& eloise, const Agent& abelard) {
  Trace trace;
  Position p = g.initial_position(w);
  MoveList moves;
  for (;;) {
    const GameStatus st = g.status(p);
    if (st.is_won()) {
      trace.push_back({p, st, std::nullopt});
      return trace;
    }
    g.moves(p, moves);
    const Agent& agent = st.player == Player::Eloise ? eloise : abelard;
    const std::size_t i = agent(g, p, moves);
    if (i >= moves.size()) throw std::out_of_range("agent chose an illegal move index");
    trace.push_back({p, st, moves[i].first});
    p = moves[i].second;
  }
}

Agent strategy_agent(const GameStrategy& strat) {
  return [&strat](const Game& g, const Position& p, const MoveList& moves) -> std::size_t {
    const Move* mv = strat.find(p);
    if (!mv) throw StrategyUndefinedError("strategy undefined at " + g.describe(p));
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (moves[i].first == *mv) return i;
    }
    throw StrategyUndefinedError("strategy prescribes an illegal move at " + g.describe(p));
  };
}

Agent solver_agent(DagSolver<Game>& solver) {
  return [&solver](const Game&, const Position& p, const MoveList&) { return solver.best_move_index(p); };
}

Agent interactive_agent(std::istream& in, std::ostream& out) {
  return [&in, &out](const Game& g, const Position& p, const MoveList& moves) -> std::size_t {
    const GameStatus st = g.status(p);
    for (;;) {
      out << "position " << g.describe(p) << "  formula: " << render(g.sentence(), p.node) << "\n";
      out << to_string(st.player) << " to move:\n";
      for (std::size_t i = 0; i < moves.size(); ++i) {
        out << "  " << (i + 1) << ") " << g.describe(moves[i].first) << " -> " << g.describe(moves[i].second) << "\n";
      }
      out << "> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) throw PlayAborted("end of input");
      std::istringstream ls(line);
      std::size_t k = 0;
      std::string rest;
      if (ls >> k && !(ls >> rest) && k >= 1 && k <= moves.size()) return k - 1;
      out << "invalid choice '" << line << "', enter a number between 1 and " << moves.size() << "\n";
    }
  };
}

std::string format_trace(const Game& g, const Trace& t) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const TraceStep& s = t[k];
    os << k << ": " << g.describe(s.position) << " | ";
    if (s.move) {
      os << to_string(s.status.player) << ": " << g.describe(*s.move);
    } else {
      os << "won: " << to_string(s.status.player);
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json trace_to_json(const Game& g, const Trace& t) {
  auto arr = nlohmann::json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const TraceStep& s = t[k];
    nlohmann::json j{{"round", k}, {"position", g.to_json(s.position)}};
    if (s.move) {
      j["player"] = to_string(s.status.player);
      j["move"] = g.describe(*s.move);
    } else {
      j["won"] = to_string(s.status.player);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace boundmu
