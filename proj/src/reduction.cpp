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

#include "boundmu/reduction.hpp"

#include <unordered_map>

#include "boundmu/dag_solver.hpp"

namespace boundmu {

const Sentence& chi() {
  static const Sentence s = parse("mu X. p_B | (q_B & <>X) | (!q_B & []X)");
  return s;
}

void check_ar_vocabulary(const KripkeModel& m) {
  for (const auto& [p, set] : m.propositions()) {
    if (p != kPB && p != kQB) throw VocabularyError("proposition '" + p + "' outside the {p_B, q_B} vocabulary");
  }
}

StateSet ar_winning_region(const KripkeModel& m) {
  check_ar_vocabulary(m);
  const std::size_t n = m.card();
  const StateSet& pb = m.valuation(kPB);
  const StateSet& qb = m.valuation(kQB);
  StateSet win(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId w = 0; w < n; ++w) {
      if (win.contains(w)) continue;
      bool in = pb.contains(w);
      if (!in && qb.contains(w)) {
        for (StateId v : m.successors(w)) in = in || win.contains(v);
      } else if (!in) {
        in = true;
        for (StateId v : m.successors(w)) in = in && win.contains(v);
      }
      if (in) {
        win.insert(w);
        changed = true;
      }
    }
  }
  return win;
}

bool solve_ar(const KripkeModel& m, StateId w) {
  if (w >= m.card()) throw std::out_of_range("start state not in model");
  return ar_winning_region(m).contains(w);
}

// --- J_phi / I_phi ----------------------------------------------------------

namespace {

struct Builder {
  const Game& game;
  const ReduceOptions& opts;
  std::vector<std::string> names;
  std::vector<Position> backmap;
  std::vector<KripkeModel::Edge> edges;
  std::vector<StateId> pb, qb;
  Interner<Position, PositionHash> seen;
  std::unordered_map<std::string, unsigned> copies;

  StateId add(const Position& p) {
    if (names.size() >= opts.cap) {
      throw ResourceLimitError("position cap of " + std::to_string(opts.cap) + " exceeded");
    }
    const auto id = static_cast<StateId>(names.size());
    if (!opts.key_names) {
      names.push_back("s" + std::to_string(id));
      backmap.push_back(p);
      label(p, id);
      return id;
    }
    std::string name = game.key(p);
    if (opts.tree) {
      const unsigned k = copies[name]++;
      if (k) name += "#" + std::to_string(k);
    }
    names.push_back(std::move(name));
    backmap.push_back(p);
    label(p, id);
    return id;
  }

  void label(const Position& p, StateId id) {
    const Sentence& s = game.sentence();
    const Node& nd = s.node(p.node);
    const KripkeModel& m = game.model();
    switch (nd.kind) {
      case Kind::Prop:
      case Kind::NegProp:
        if (m.holds(nd.name, p.state) == (nd.kind == Kind::Prop)) {
          pb.push_back(id);
        } else {
          qb.push_back(id);
        }
        break;
      case Kind::Or:
      case Kind::Diamond:
      case Kind::Mu:
        qb.push_back(id);
        break;
      case Kind::Label:
        if (s.node(game.index().reference(p.node)).kind == Kind::Mu) qb.push_back(id);
        break;
      case Kind::And:
      case Kind::Box:
      case Kind::Nu:
        break;
    }
  }

  StateId dag(const Position& root) {
    bool fresh = false;
    seen.insert(root, fresh);
    const StateId r = add(root);
    std::vector<StateId> work{r};
    MoveList moves;
    while (!work.empty()) {
      const StateId cur = work.back();
      work.pop_back();
      game.moves(backmap[cur], moves);
      for (auto& [mv, q] : moves) {
        const StateId t = seen.insert(q, fresh);
        if (fresh) {
          add(q);
          work.push_back(t);
        }
        edges.emplace_back(cur, t);
      }
    }
    return r;
  }

  StateId tree(const Position& root) {
    const StateId r = add(root);
    std::vector<StateId> work{r};
    MoveList moves;
    while (!work.empty()) {
      const StateId cur = work.back();
      work.pop_back();
      game.moves(backmap[cur], moves);
      for (auto& [mv, q] : moves) {
        const StateId t = add(q);
        edges.emplace_back(cur, t);
        work.push_back(t);
      }
    }
    return r;
  }
};

}  // namespace

ReducedModel build_position_model(const KripkeModel& m, StateId w, const Sentence& phi, Bound bound,
                                  const ReduceOptions& opts) {
  const Game game(m, phi, bound, GameOptions{SolveMode::Exhaustive, ClockRepresentation::Canonical});
  Builder b{game, opts, {}, {}, {}, {}, {}, {}, {}};
  const StateId root = opts.tree ? b.tree(game.initial_position(w)) : b.dag(game.initial_position(w));
  std::map<std::string, std::vector<StateId>> val{{kPB, std::move(b.pb)}, {kQB, std::move(b.qb)}};
  return ReducedModel{ARModel{KripkeModel(std::move(b.names), std::move(b.edges), std::move(val)), root},
                      std::move(b.backmap)};
}

ReducedModel reduce_mc(const KripkeModel& m, StateId w, const Sentence& phi, const ReduceOptions& opts) {
  return build_position_model(m, w, phi, Bound::finite(std::max<unsigned>(1, static_cast<unsigned>(m.card()))), opts);
}

nlohmann::json reduced_to_json(const ReducedModel& r, const KripkeModel& m, const Sentence& phi, Bound bound) {
  const Game game(m, phi, bound, GameOptions{SolveMode::Exhaustive, ClockRepresentation::Canonical});
  nlohmann::json j = model_to_json(r.ar.model);
  j["root"] = r.ar.model.name(r.ar.start);
  auto& back = j["backmap"] = nlohmann::json::object();
  for (StateId i = 0; i < r.backmap.size(); ++i) back[r.ar.model.name(i)] = game.to_json(r.backmap[i]);
  return j;
}

bool reachable_acyclic(const KripkeModel& m, StateId from) {
  enum : std::uint8_t { White, Gray, Black };
  std::vector<std::uint8_t> color(m.card(), White);
  std::vector<std::pair<StateId, std::size_t>> stack{{from, 0}};
  color[from] = Gray;
  while (!stack.empty()) {
    auto& [w, i] = stack.back();
    const auto succ = m.successors(w);
    if (i == succ.size()) {
      color[w] = Black;
      stack.pop_back();
      continue;
    }
    const StateId v = succ[i++];
    if (color[v] == Gray) return false;
    if (color[v] == White) {
      color[v] = Gray;
      stack.emplace_back(v, 0);
    }
  }
  return true;
}

}  // namespace boundmu
