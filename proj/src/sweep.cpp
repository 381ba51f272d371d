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

#include "boundmu/sweep.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include "boundmu/corpus.hpp"
#include "boundmu/game.hpp"
#include "boundmu/reduction.hpp"
#include "boundmu/variants.hpp"

namespace boundmu::sweep {

const char* check_name(CheckId c) {
  switch (c) {
    case CheckId::GtsBounded: return "gts-vs-bounded";
    case CheckId::CardCollapse: return "bounded-card-vs-standard";
    case CheckId::OmegaStandard: return "omega-vs-standard";
    case CheckId::Termination: return "termination-determinacy";
    case CheckId::ReductionJ: return "reduction-J";
    case CheckId::ReductionI: return "reduction-I";
    case CheckId::GreedyExhaustive: return "greedy-vs-exhaustive";
    case CheckId::CanonicalFull: return "canonical-vs-full-clocks";
    case CheckId::FBounded: return "fbounded-determined";
    case CheckId::Normalization: return "normalization";
    case CheckId::Duality: return "duality";
    case CheckId::FreePartition: return "free-partition";
    case CheckId::ArChi: return "ar-vs-chi";
    case CheckId::ArFBounded: return "ar-vs-fbounded-chi";
  }
  return "?";
}

Engines Engines::reference() {
  return Engines{
      [](const KripkeModel& m, const Sentence& s) { return eval_standard(m, s); },
      [](const KripkeModel& m, const Sentence& s, Bound b) { return eval_bounded(m, s, s.root(), b); },
  };
}

Engines Engines::faulty() {
  Engines e = reference();
  e.bounded = [](const KripkeModel& m, const Sentence& s, Bound b) {
    const unsigned n = b.effective(m);
    return n > 1 ? eval_bounded(m, s, s.root(), Bound::finite(n - 1)) : eval_bounded(m, s, s.root(), b);
  };
  return e;
}

bool Report::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

const CheckResult& Report::check(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("check not present in report");
}

namespace {

using Mask = std::bitset<kCheckCount>;
std::size_t ix(CheckId c) { return static_cast<std::size_t>(c); }

struct FirstFailure {
  std::size_t order;  // model index, for deterministic merging
  KripkeModel model;
  Sentence sentence;
  std::optional<Bound> gamma;
  StateId state;
  std::string detail;
};

struct Tally {
  std::array<std::uint64_t, kCheckCount> instances{};
  std::array<std::uint64_t, kCheckCount> failures{};
  std::array<std::optional<FirstFailure>, kCheckCount> first;
  std::uint64_t resource_errors = 0;
  std::size_t order = 0;
  const KripkeModel* model = nullptr;
  const Sentence* sentence = nullptr;

  void record(CheckId c, bool ok, std::optional<Bound> gamma, StateId w, const char* detail = "") {
    ++instances[ix(c)];
    if (ok) return;
    ++failures[ix(c)];
    auto& f = first[ix(c)];
    if (!f || order < f->order) f = FirstFailure{order, *model, *sentence, gamma, w, detail};
  }

  void merge(const Tally& o) {
    for (std::size_t i = 0; i < kCheckCount; ++i) {
      instances[i] += o.instances[i];
      failures[i] += o.failures[i];
      if (o.first[i] && (!first[i] || o.first[i]->order < first[i]->order)) first[i] = o.first[i];
    }
    resource_errors += o.resource_errors;
  }
};

StateId initial_state_count(const KripkeModel& m) { return static_cast<StateId>(m.card()); }

// Successor relation of the clock-free game, rebuilt here independently of
// the free solver so its regions can be checked for closure.
struct FreeGraph {
  std::vector<GameStatus> status;
  std::vector<std::vector<std::size_t>> succ;
};

FreeGraph free_graph(const KripkeModel& m, const Sentence& s) {
  const SyntaxIndex index = build_index(s);
  const std::size_t size = s.size();
  FreeGraph g{std::vector<GameStatus>(m.card() * size), std::vector<std::vector<std::size_t>>(m.card() * size)};
  for (StateId w = 0; w < m.card(); ++w) {
    for (NodeId n = 0; n < size; ++n) {
      const std::size_t x = w * size + n;
      const Node& nd = s.node(n);
      auto& out = g.succ[x];
      switch (nd.kind) {
        case Kind::Prop:
        case Kind::NegProp:
          g.status[x] = GameStatus::won(m.holds(nd.name, w) == (nd.kind == Kind::Prop) ? Player::Eloise : Player::Abelard);
          break;
        case Kind::Or:
        case Kind::And:
          g.status[x] = GameStatus::turn(nd.kind == Kind::Or ? Player::Eloise : Player::Abelard);
          out = {w * size + nd.children[0], w * size + nd.children[1]};
          break;
        case Kind::Diamond:
        case Kind::Box: {
          const Player mover = nd.kind == Kind::Diamond ? Player::Eloise : Player::Abelard;
          g.status[x] = m.successors(w).empty() ? GameStatus::won(opponent(mover)) : GameStatus::turn(mover);
          for (StateId v : m.successors(w)) out.push_back(v * size + nd.children[0]);
          break;
        }
        case Kind::Mu:
        case Kind::Nu:
          g.status[x] = GameStatus::turn(Player::Eloise);
          out = {w * size + nd.children[0]};
          break;
        case Kind::Label:
          g.status[x] = GameStatus::turn(Player::Eloise);
          out = {w * size + s.node(index.reference(n)).children[0]};
          break;
      }
    }
  }
  return g;
}

bool free_regions_consistent(const FreeGraph& g, const FreeRegions& r, StateId w, std::size_t size) {
  for (std::size_t x = w * size; x < (w + 1) * size; ++x) {
    const Verdict v = r.verdict[x];
    if (v == Verdict::Undetermined) {
      if (g.status[x].is_won()) return false;  // ending positions always have a winner
      continue;
    }
    const Player p = v == Verdict::Eloise ? Player::Eloise : Player::Abelard;
    if (g.status[x].is_won()) {
      if (g.status[x].player != p) return false;
      continue;
    }
    // A region position must keep the play in the region: every successor
    // stays (the forced one when there is a single move, or all of the
    // opponent's), or some successor stays (the owner's choice).
    const auto& succ = g.succ[x];
    const bool any = std::any_of(succ.begin(), succ.end(), [&](std::size_t y) { return r.verdict[y] == v; });
    const bool all = std::all_of(succ.begin(), succ.end(), [&](std::size_t y) { return r.verdict[y] == v; });
    const bool owner_is_p = succ.size() == 1 || g.status[x].player == p;
    if (owner_is_p ? !any : !all) return false;
  }
  return true;
}

class Evaluator {
 public:
  Evaluator(const Config& cfg, const Engines& eng) : cfg_(cfg), eng_(eng) {}

  void run(const KripkeModel& m, const Sentence& phi, const std::vector<Bound>& gammas, Mask want, Tally& t) const {
    const std::size_t binders = build_index(phi).mu_nu_nodes.size();
    const bool oracle_model = m.card() <= cfg_.oracle_max_states && binders <= cfg_.oracle_max_binders;
    const StateId n = initial_state_count(m);
    const StateSet standard = eng_.standard(m, phi);

    if (want[ix(CheckId::Duality)]) {
      const StateSet d = eng_.standard(m, dual(phi));
      for (StateId w = 0; w < n; ++w) {
        t.record(CheckId::Duality, standard.contains(w) != d.contains(w), std::nullopt, w, "dual does not complement");
      }
    }

    std::vector<StateSet> bounded;
    if (want[ix(CheckId::GtsBounded)] || want[ix(CheckId::Normalization)]) {
      for (Bound gamma : gammas) bounded.push_back(eng_.bounded(m, phi, gamma));
    }

    if (want[ix(CheckId::Normalization)]) normalization(m, phi, standard, gammas, bounded, t);

    if (want[ix(CheckId::CardCollapse)]) {
      const StateSet b = eng_.bounded(m, phi, Bound::finite(std::max<unsigned>(1, static_cast<unsigned>(m.card()))));
      for (StateId w = 0; w < n; ++w) {
        t.record(CheckId::CardCollapse, b.contains(w) == standard.contains(w), std::nullopt, w,
                 "bounded(card) differs from standard");
      }
    }

    if (want[ix(CheckId::OmegaStandard)]) {
      const StateSet b = eng_.bounded(m, phi, Bound::omega());
      const Game g(m, phi, Bound::omega(), {SolveMode::Greedy, ClockRepresentation::Canonical});
      DagSolver<Game> solver(g, cfg_.cap);
      for (StateId w = 0; w < n; ++w) {
        try {
          const bool game = solver.winner(g.initial_position(w)) == Player::Eloise;
          t.record(CheckId::OmegaStandard, b.contains(w) == standard.contains(w) && game == standard.contains(w),
                   std::nullopt, w, "omega differs from standard");
        } catch (const ResourceLimitError&) {
          ++t.resource_errors;
        }
      }
    }

    const Mask per_gamma = Mask().set(ix(CheckId::GtsBounded)).set(ix(CheckId::Termination)).set(ix(CheckId::ReductionJ))
                               .set(ix(CheckId::GreedyExhaustive)).set(ix(CheckId::CanonicalFull));
    if ((want & per_gamma).any()) {
      for (std::size_t i = 0; i < gammas.size(); ++i) {
        games(m, phi, gammas[i], bounded.empty() ? nullptr : &bounded[i], oracle_model, want, t);
      }
    }

    if (want[ix(CheckId::ReductionI)]) {
      for (StateId w = 0; w < n; ++w) {
        try {
          const ReducedModel r = reduce_mc(m, w, phi, ReduceOptions{false, cfg_.cap, false});
          const bool ok = reachable_acyclic(r.ar.model, r.ar.start) && solve_ar(r.ar) == standard.contains(w);
          t.record(CheckId::ReductionI, ok, std::nullopt, w, "AR on I_phi differs from standard");
        } catch (const ResourceLimitError&) {
          ++t.resource_errors;
        }
      }
    }

    if (want[ix(CheckId::FBounded)]) fbounded(m, phi, t);

    if (want[ix(CheckId::FreePartition)]) {
      const FreeRegions r = solve_free_regions(m, phi);
      const FreeGraph g = free_graph(m, phi);
      for (StateId w = 0; w < n; ++w) {
        t.record(CheckId::FreePartition, free_regions_consistent(g, r, w, phi.size()), std::nullopt, w,
                 "free-game regions not closed");
      }
    }
  }

  void run_ar(const KripkeModel& m, Mask want, Tally& t) const {
    const StateSet win = ar_winning_region(m);
    if (want[ix(CheckId::ArChi)]) {
      const StateSet c = eng_.standard(m, chi());
      for (StateId w = 0; w < m.card(); ++w) {
        t.record(CheckId::ArChi, win.contains(w) == c.contains(w), std::nullopt, w, "AR solver differs from chi");
      }
    }
    if (want[ix(CheckId::ArFBounded)]) {
      const std::uint64_t f = f_value(m, 0, chi(), cfg_.fbounded_k);
      const FBoundedGame g(m, chi(), f);
      DagSolver<FBoundedGame> solver(g, cfg_.cap);
      for (StateId w = 0; w < m.card(); ++w) {
        const bool eloise = solver.winner(g.initial_position(w)) == Player::Eloise;
        t.record(CheckId::ArFBounded, eloise == win.contains(w), std::nullopt, w, "f-bounded chi differs from AR");
      }
    }
  }

 private:
  void normalization(const KripkeModel& m, const Sentence& phi, const StateSet& standard,
                     const std::vector<Bound>& gammas, const std::vector<StateSet>& bounded, Tally& t) const {
    // phi & phi repeats every binder name, so it is not in normal form
    // whenever phi has a binder.
    const Sentence twice(build::land(phi.term(), phi.term()));
    const Sentence normal = normalize(twice);
    bool ok = eng_.standard(m, twice) == standard && eng_.standard(m, normal) == standard;
    for (std::size_t i = 0; i < gammas.size(); ++i) ok = ok && eng_.bounded(m, normal, gammas[i]) == bounded[i];
    std::vector<bool> game_ok(m.card(), true);
    if (!gammas.empty()) {
      const Bound gamma = gammas.front();
      const StateSet& b = bounded.front();
      const Game g(m, normal, gamma, {SolveMode::Greedy, ClockRepresentation::Canonical});
      DagSolver<Game> solver(g, cfg_.cap);
      try {
        for (StateId w = 0; w < m.card(); ++w) {
          game_ok[w] = (solver.winner(g.initial_position(w)) == Player::Eloise) == b.contains(w);
        }
      } catch (const ResourceLimitError&) {
        ++t.resource_errors;
      }
    }
    for (StateId w = 0; w < m.card(); ++w) {
      t.record(CheckId::Normalization, ok && game_ok[w], std::nullopt, w, "normalize changed a verdict");
    }
  }

  void games(const KripkeModel& m, const Sentence& phi, Bound gamma, const StateSet* bounded, bool oracle_model,
             Mask want, Tally& t) const {
    const bool oracle = oracle_model && !gamma.is_omega() && gamma.value() <= cfg_.oracle_max_gamma;
    const Game gx(m, phi, gamma, {SolveMode::Exhaustive, ClockRepresentation::Canonical});
    if (!want[ix(CheckId::GtsBounded)]) bounded = nullptr;

    std::optional<Game> greedy, full;
    std::optional<DagSolver<Game>> greedy_solver, full_solver;
    if (oracle && want[ix(CheckId::GreedyExhaustive)]) {
      greedy.emplace(m, phi, gamma, GameOptions{SolveMode::Greedy, ClockRepresentation::Canonical});
      greedy_solver.emplace(*greedy, cfg_.cap);
    }
    if (oracle && want[ix(CheckId::CanonicalFull)]) {
      full.emplace(m, phi, gamma, GameOptions{SolveMode::Exhaustive, ClockRepresentation::Full});
      full_solver.emplace(*full, cfg_.cap);
    }

    for (StateId w = 0; w < m.card(); ++w) {
      Player winner;
      try {
        DagSolver<Game> solver(gx, cfg_.cap);
        const Position root = gx.initial_position(w);
        winner = solver.winner(root);
        if (want[ix(CheckId::Termination)]) {
          bool ok = true;
          if (solver.size() <= cfg_.playout_limit) {
            const auto strat = solver.extract_strategy(root);
            ok = strat.player == winner && strategy_wins_all_playouts(gx, w, strat);
          }
          t.record(CheckId::Termination, ok, gamma, w, "winning strategy lost a playout");
        }
      } catch (const CycleError&) {
        t.record(CheckId::Termination, false, gamma, w, "position graph has a cycle");
        continue;
      } catch (const ResourceLimitError&) {
        ++t.resource_errors;
        continue;
      }
      const bool eloise = winner == Player::Eloise;
      if (bounded) {
        t.record(CheckId::GtsBounded, eloise == bounded->contains(w), gamma, w, "game winner differs from bounded semantics");
      }
      try {
        if (want[ix(CheckId::ReductionJ)]) {
          const ReducedModel r = build_position_model(m, w, phi, gamma, ReduceOptions{false, cfg_.cap, false});
          const bool ok = reachable_acyclic(r.ar.model, r.ar.start) && solve_ar(r.ar) == eloise;
          t.record(CheckId::ReductionJ, ok, gamma, w, "AR on J_phi differs from game verdict");
        }
        if (greedy_solver) {
          const bool g = greedy_solver->winner(greedy->initial_position(w)) == Player::Eloise;
          t.record(CheckId::GreedyExhaustive, g == eloise, gamma, w, "greedy winner differs from exhaustive");
        }
        if (full_solver) {
          const bool f = full_solver->winner(full->initial_position(w)) == Player::Eloise;
          t.record(CheckId::CanonicalFull, f == eloise, gamma, w, "full-clock winner differs from canonical");
        }
      } catch (const ResourceLimitError&) {
        ++t.resource_errors;
      }
    }
  }

  void fbounded(const KripkeModel& m, const Sentence& phi, Tally& t) const {
    const std::uint64_t f = f_value(m, 0, phi, cfg_.fbounded_k);
    const FBoundedGame one(m, phi, f, DecrementMode::One), any(m, phi, f, DecrementMode::Exhaustive);
    DagSolver<FBoundedGame> s1(one, cfg_.cap), s2(any, cfg_.cap);
    const long double bound = static_cast<long double>(m.card()) * phi.size() * (f + 1.0L) * (f + 1.0L);
    try {
      for (StateId w = 0; w < m.card(); ++w) {
        const Player a = s1.winner(one.initial_position(w));
        const Player b = s2.winner(any.initial_position(w));
        const bool ok = a == b && s1.size() <= bound && s2.size() <= bound;
        t.record(CheckId::FBounded, ok, std::nullopt, w, "decrement-1 verdict differs or position bound exceeded");
      }
    } catch (const ResourceLimitError&) {
      ++t.resource_errors;
    }
  }

  const Config& cfg_;
  const Engines& eng_;
};

// --- minimization -----------------------------------------------------------

KripkeModel rebuild(const KripkeModel& m, std::optional<StateId> drop_state, std::optional<KripkeModel::Edge> drop_edge,
                    std::optional<std::pair<std::string, StateId>> drop_val) {
  std::vector<std::string> names;
  std::vector<StateId> remap(m.card(), 0);
  for (StateId s = 0; s < m.card(); ++s) {
    if (drop_state && *drop_state == s) continue;
    remap[s] = static_cast<StateId>(names.size());
    names.push_back(m.name(s));
  }
  std::vector<KripkeModel::Edge> edges;
  for (auto e : m.edges()) {
    if (drop_edge && *drop_edge == e) continue;
    if (drop_state && (e.first == *drop_state || e.second == *drop_state)) continue;
    edges.emplace_back(remap[e.first], remap[e.second]);
  }
  std::map<std::string, std::vector<StateId>> val;
  for (const auto& [p, set] : m.propositions()) {
    auto& dst = val[p];
    for (StateId s : set.members()) {
      if (drop_state && *drop_state == s) continue;
      if (drop_val && drop_val->first == p && drop_val->second == s) continue;
      dst.push_back(remap[s]);
    }
  }
  return KripkeModel(std::move(names), std::move(edges), std::move(val));
}

std::vector<KripkeModel> model_shrinks(const KripkeModel& m) {
  std::vector<KripkeModel> out;
  if (m.card() > 1) {
    for (StateId s = m.card(); s-- > 0;) out.push_back(rebuild(m, s, std::nullopt, std::nullopt));
  }
  for (auto e : m.edges()) out.push_back(rebuild(m, std::nullopt, e, std::nullopt));
  for (const auto& [p, set] : m.propositions()) {
    for (StateId s : set.members()) out.push_back(rebuild(m, std::nullopt, std::nullopt, std::make_pair(p, s)));
  }
  return out;
}

Term replaced(const Sentence& s, NodeId at, NodeId target, const Term& with) {
  if (at == target) return with;
  const Node& nd = s.node(at);
  Term t{nd.kind, nd.name, {}};
  for (NodeId c : nd.children) t.children.push_back(replaced(s, c, target, with));
  return t;
}

std::vector<Sentence> sentence_shrinks(const Sentence& s, const std::vector<std::string>& props) {
  std::vector<Sentence> out;
  for (NodeId n = 0; n < s.size(); ++n) {
    const Node& nd = s.node(n);
    if (is_leaf(nd.kind)) continue;
    std::vector<Term> candidates;
    for (NodeId c : nd.children) candidates.push_back(s.term(c));
    for (const auto& p : props) {
      candidates.push_back(build::prop(p));
      candidates.push_back(build::neg(p));
    }
    for (const Term& with : candidates) {
      Sentence cand(replaced(s, s.root(), n, with));
      if (cand.is_closed()) out.push_back(std::move(cand));
    }
  }
  return out;
}

Counterexample minimize(const Config& cfg, const Engines& eng, CheckId id, FirstFailure f) {
  const Evaluator ev(cfg, eng);
  const Mask want = Mask().set(ix(id));
  const bool ar = id == CheckId::ArChi || id == CheckId::ArFBounded;
  auto failing = [&](const KripkeModel& m, const Sentence& s, std::optional<Bound> gamma) -> std::optional<FirstFailure> {
    Tally t;
    t.model = &m;
    t.sentence = &s;
    try {
      if (ar) {
        ev.run_ar(m, want, t);
      } else {
        ev.run(m, s, gamma ? std::vector<Bound>{*gamma} : cfg.gammas, want, t);
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return t.first[ix(id)];
  };

  if (cfg.minimize) {
    for (bool progress = true; progress;) {
      progress = false;
      for (auto& m : model_shrinks(f.model)) {
        if (auto g = failing(m, f.sentence, f.gamma)) {
          f = std::move(*g);
          progress = true;
          break;
        }
      }
      if (progress || ar) continue;
      for (auto& s : sentence_shrinks(f.sentence, cfg.props)) {
        if (auto g = failing(f.model, s, f.gamma)) {
          f = std::move(*g);
          progress = true;
          break;
        }
      }
      if (progress || !f.gamma || f.gamma->is_omega()) continue;
      for (unsigned k = 1; k < f.gamma->value(); ++k) {
        if (auto g = failing(f.model, f.sentence, Bound::finite(k))) {
          f = std::move(*g);
          progress = true;
          break;
        }
      }
    }
  }
  return Counterexample{check_name(id),
                        model_to_json(f.model),
                        ar ? render(chi()) : render(f.sentence),
                        f.gamma ? f.gamma->to_string() : "-",
                        f.model.name(f.state),
                        f.detail};
}

}  // namespace

std::vector<Sentence> sentences(const Config& cfg) {
  auto out = corpus::enumerate_sentences(cfg.max_nodes, cfg.max_binders, cfg.props);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_formulas; ++i) {
    out.push_back(corpus::random_sentence(rng, cfg.random_max_nodes, cfg.random_max_binders, cfg.props));
  }
  return out;
}

Report run(const Config& cfg, const Engines& eng) {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus_sentences = sentences(cfg);

  std::vector<KripkeModel> models;
  if (cfg.sample_models == 0) {
    models = corpus::enumerate_models(cfg.max_states, cfg.props);
  } else {
    std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
    for (std::size_t i = 0; i < cfg.sample_models; ++i) {
      const std::size_t states = 1 + std::uniform_int_distribution<std::size_t>(0, cfg.max_states - 1)(rng);
      models.push_back(corpus::random_model(rng, states, cfg.props));
    }
  }
  const std::size_t main_models = models.size();
  {
    std::mt19937_64 rng(cfg.seed ^ 0x0a11ceULL);
    for (std::size_t i = 0; i < cfg.oracle_models; ++i) {
      models.push_back(corpus::random_model(rng, cfg.oracle_max_states, cfg.props));
    }
  }
  std::vector<KripkeModel> ar_models;
  if (cfg.ar_max_states > 0) ar_models = corpus::enumerate_models(cfg.ar_max_states, {kPB, kQB});

  Mask main_mask;
  for (std::size_t i = 0; i < kCheckCount; ++i) main_mask.set(i);
  main_mask.reset(ix(CheckId::ArChi)).reset(ix(CheckId::ArFBounded));
  const Mask oracle_mask = Mask().set(ix(CheckId::GreedyExhaustive)).set(ix(CheckId::CanonicalFull));
  const Mask ar_mask = Mask().set(ix(CheckId::ArChi)).set(ix(CheckId::ArFBounded));
  std::vector<Bound> oracle_gammas;
  for (Bound b : cfg.gammas) {
    if (!b.is_omega() && b.value() <= cfg.oracle_max_gamma) oracle_gammas.push_back(b);
  }

  const Evaluator ev(cfg, eng);
  const std::size_t jobs = models.size() + ar_models.size();
  const unsigned threads = std::max(1u, cfg.threads);
  std::vector<Tally> tallies(threads);
  auto worker = [&](unsigned tid) {
    Tally& t = tallies[tid];
    for (std::size_t j = tid; j < jobs; j += threads) {
      t.order = j;
      if (j < models.size()) {
        const KripkeModel& m = models[j];
        t.model = &m;
        for (const Sentence& s : corpus_sentences) {
          t.sentence = &s;
          if (j < main_models) {
            ev.run(m, s, cfg.gammas, main_mask, t);
          } else {
            ev.run(m, s, oracle_gammas, oracle_mask, t);
          }
        }
      } else {
        const KripkeModel& m = ar_models[j - models.size()];
        t.model = &m;
        t.sentence = &chi();
        ev.run_ar(m, ar_mask, t);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (const auto& t : tallies) total.merge(t);

  Report r;
  r.models = main_models + cfg.oracle_models + ar_models.size();
  r.sentences = corpus_sentences.size();
  r.resource_errors = total.resource_errors;
  r.seed = cfg.seed;
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    CheckResult c{static_cast<CheckId>(i), total.instances[i], total.failures[i], std::nullopt};
    if (total.first[i]) c.counterexample = minimize(cfg, eng, c.id, *total.first[i]);
    r.checks.push_back(std::move(c));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void print(std::ostream& os, const Report& r) {
  os << "models: " << r.models << "  sentences: " << r.sentences << "  seed: " << r.seed
     << "  time: " << std::fixed << std::setprecision(1) << r.seconds << "s\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(28) << check_name(c.id) << std::right << std::setw(12) << c.instances
       << std::setw(10) << c.failures << "  " << (c.instances == 0 ? "SKIP" : c.failures == 0 ? "PASS" : "FAIL") << "\n";
  }
  if (r.resource_errors) os << "resource-limit errors: " << r.resource_errors << " (partial report)\n";
  for (const auto& c : r.checks) {
    if (!c.counterexample) continue;
    const auto& ce = *c.counterexample;
    os << "counterexample [" << ce.check << "]: " << ce.detail << "\n"
       << "  model:   " << ce.model.dump() << "\n"
       << "  formula: " << ce.formula << "\n"
       << "  gamma:   " << ce.gamma << "\n"
       << "  state:   " << ce.state << "\n";
  }
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j{{"models", r.models},
                   {"sentences", r.sentences},
                   {"seed", r.seed},
                   {"seconds", r.seconds},
                   {"resource_errors", r.resource_errors},
                   {"all_agree", r.all_agree()},
                   {"checks", nlohmann::json::array()}};
  for (const auto& c : r.checks) {
    nlohmann::json cj{{"name", check_name(c.id)}, {"instances", c.instances}, {"failures", c.failures}};
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      cj["counterexample"] = {{"model", ce.model}, {"formula", ce.formula}, {"gamma", ce.gamma},
                              {"state", ce.state}, {"detail", ce.detail}};
    }
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace boundmu::sweep
