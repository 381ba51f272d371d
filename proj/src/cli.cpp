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

#include "boundmu/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boundmu/formula.hpp"
#include "boundmu/game.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/reduction.hpp"
#include "boundmu/semantics.hpp"
#include "boundmu/sweep.hpp"
#include "boundmu/variants.hpp"

namespace boundmu::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Semantics {
  enum class Kind { Standard, Bounded, Omega, FBounded, Free } kind = Kind::Standard;
  unsigned n = 0;

  static Semantics parse(const std::string& text) {
    auto number = [&](std::string_view rest) {
      unsigned v = 0;
      auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
      if (ec != std::errc() || p != rest.data() + rest.size() || v == 0) {
        throw UsageError("bad semantics '" + text + "': the parameter must be a positive integer");
      }
      return v;
    };
    if (text == "standard") return {Kind::Standard, 0};
    if (text == "omega") return {Kind::Omega, 0};
    if (text == "free") return {Kind::Free, 0};
    if (text.starts_with("bounded:")) return {Kind::Bounded, number(std::string_view(text).substr(8))};
    if (text.starts_with("fbounded:")) return {Kind::FBounded, number(std::string_view(text).substr(9))};
    throw UsageError("unknown semantics '" + text + "' (standard | bounded:N | omega | fbounded:K | free)");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Standard: return "standard";
      case Kind::Bounded: return "bounded:" + std::to_string(n);
      case Kind::Omega: return "omega";
      case Kind::FBounded: return "fbounded:" + std::to_string(n);
      case Kind::Free: return "free";
    }
    return "";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + path + "'");
}

struct Instance {
  std::string model_path;
  std::string formula;
  std::string formula_file;
  std::string state;
};

void add_instance_options(CLI::App& app, Instance& inst) {
  app.add_option("-m,--model", inst.model_path, "Kripke model JSON file")->required();
  auto* f = app.add_option("-f,--formula", inst.formula, "formula text");
  auto* ff = app.add_option("--formula-file", inst.formula_file, "file holding the formula");
  f->excludes(ff);
  app.add_option("-s,--state", inst.state, "start state (default: the first state)");
}

struct Loaded {
  KripkeModel model;
  Sentence sentence;
  StateId state;
};

Loaded load(const Instance& inst) {
  KripkeModel m = load_model_file(inst.model_path);
  if (inst.formula.empty() && inst.formula_file.empty()) throw UsageError("one of --formula, --formula-file is required");
  const std::string text = inst.formula_file.empty() ? inst.formula : read_file(inst.formula_file);
  Sentence s = normalize(parse(text));
  StateId w = 0;
  if (!inst.state.empty()) {
    auto found = m.find(inst.state);
    if (!found) throw UsageError("state '" + inst.state + "' is not in the model");
    w = *found;
  }
  return {std::move(m), std::move(s), w};
}

SolveMode parse_mode(const std::string& s) {
  if (s == "greedy") return SolveMode::Greedy;
  if (s == "exhaustive") return SolveMode::Exhaustive;
  throw UsageError("unknown mode '" + s + "' (greedy | exhaustive)");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Strategy restricted to positions reachable when its owner follows it.
template <class Pos, class Hash, class Arena>
std::vector<std::pair<Pos, Move>> reachable_strategy(const Arena& g, const Pos& root, const Strategy<Pos, Hash>& strat) {
  std::vector<std::pair<Pos, Move>> out;
  std::unordered_map<Pos, bool, Hash> seen;
  std::vector<Pos> work{root};
  std::vector<std::pair<Move, Pos>> moves;
  while (!work.empty()) {
    Pos p = std::move(work.back());
    work.pop_back();
    if (!seen.emplace(p, true).second) continue;
    const GameStatus st = g.status(p);
    if (st.is_won()) continue;
    g.moves(p, moves);
    if (st.player == strat.player) {
      const Move* mv = strat.find(p);
      if (!mv) continue;
      out.emplace_back(p, *mv);
      for (auto& [m, q] : moves) {
        if (m == *mv) work.push_back(q);
      }
    } else {
      for (auto& [m, q] : moves) work.push_back(q);
    }
  }
  return out;
}

struct EvalArgs {
  Instance inst;
  std::string semantics = "standard";
  std::string mode = "greedy";
  bool trace = false;
  bool strategy = false;
  bool json = false;
  bool check = false;
  std::size_t cap = 10'000'000;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Semantics sem = Semantics::parse(a.semantics);
  const SolveMode mode = parse_mode(a.mode);
  const Loaded in = load(a.inst);
  const double load_ms = ms_since(t0);
  const KripkeModel& m = in.model;
  const Sentence& s = in.sentence;
  const StateId w = in.state;

  nlohmann::json report{{"semantics", sem.to_string()},
                        {"state", m.name(w)},
                        {"formula", render(s)},
                        {"positions", nullptr}};
  std::ostringstream text;
  Verdict verdict = Verdict::Abelard;
  const auto t1 = std::chrono::steady_clock::now();

  auto bound_of = [&]() {
    switch (sem.kind) {
      case Semantics::Kind::Bounded: return Bound::finite(sem.n);
      case Semantics::Kind::Omega: return Bound::omega();
      default: return Bound::finite(std::max<unsigned>(1, static_cast<unsigned>(m.card())));
    }
  };

  const bool game_semantics = sem.kind != Semantics::Kind::FBounded && sem.kind != Semantics::Kind::Free;
  if (game_semantics) {
    if (sem.kind == Semantics::Kind::Standard) {
      verdict = eval_standard(m, s).contains(w) ? Verdict::Eloise : Verdict::Abelard;
    } else {
      verdict = eval_bounded(m, s, s.root(), bound_of()).contains(w) ? Verdict::Eloise : Verdict::Abelard;
    }
    if (a.trace || a.strategy || sem.kind != Semantics::Kind::Standard) {
      // Standard semantics coincides with the game bounded at card(M).
      const Game g(m, s, bound_of(), GameOptions{mode, ClockRepresentation::Canonical});
      DagSolver<Game> solver(g, a.cap);
      const Position root = g.initial_position(w);
      const Player winner = solver.winner(root);
      report["positions"] = solver.size();
      if (verdict_of(winner) != verdict) {
        throw std::logic_error("game winner disagrees with the compositional verdict");
      }
      if (a.strategy) {
        const auto strat = solver.extract_strategy(root);
        auto lines = reachable_strategy(g, root, strat);
        std::sort(lines.begin(), lines.end(),
                  [&](const auto& x, const auto& y) { return g.key(x.first) < g.key(y.first); });
        auto& js = report["strategy"] = {{"player", to_string(strat.player)}, {"moves", nlohmann::json::array()}};
        text << "strategy (" << to_string(strat.player) << "):\n";
        for (const auto& [p, mv] : lines) {
          text << "  " << g.describe(p) << " -> " << g.describe(mv) << "\n";
          js["moves"].push_back({{"position", g.to_json(p)}, {"move", g.describe(mv)}});
        }
      }
      if (a.trace) {
        const Agent agent = solver_agent(solver);
        const Trace t = play_trace(g, w, agent, agent);
        text << "trace:\n" << format_trace(g, t);
        report["trace"] = trace_to_json(g, t);
      }
    }
  } else {
    if (a.trace || a.strategy) throw UsageError("--trace and --strategy need a clocked game semantics");
    if (sem.kind == Semantics::Kind::FBounded) {
      const FBoundedResult r = solve_fbounded(m, w, s, sem.n, DecrementMode::One, a.cap);
      verdict = r.verdict;
      report["positions"] = r.visited;
      report["f"] = r.f;
    } else {
      const FreeRegions r = solve_free_regions(m, s);
      verdict = r.at(w, s.root());
      report["positions"] = r.verdict.size();
    }
  }
  const double solve_ms = ms_since(t1);

  if (a.check) {
    const bool std_holds = eval_standard(m, s).contains(w);
    const Bound card = Bound::finite(std::max<unsigned>(1, static_cast<unsigned>(m.card())));
    const bool card_holds = eval_bounded(m, s, s.root(), card).contains(w);
    report["check"] = std_holds == card_holds;
    if (std_holds != card_holds) {
      out << "check failed: standard and bounded:" << card.value() << " disagree\n";
      return kCheckFailed;
    }
  }

  const char* word = verdict == Verdict::Eloise ? "true" : verdict == Verdict::Abelard ? "false" : "undetermined";
  if (a.json) {
    report["verdict"] = word;
    report["winner"] = verdict == Verdict::Undetermined ? nlohmann::json(nullptr) : nlohmann::json(to_string(verdict));
    report["timings"] = {{"load_ms", load_ms}, {"solve_ms", solve_ms}};
    out << report.dump(2) << "\n";
  } else {
    out << word << "\n" << text.str();
  }
  return verdict == Verdict::Eloise ? kTrue : verdict == Verdict::Abelard ? kFalse : kUndetermined;
}

struct PlayArgs {
  Instance inst;
  std::string gamma = "omega";
  std::string as = "abelard";
  std::string mode = "exhaustive";
  std::size_t cap = 10'000'000;
};

int cmd_play(const PlayArgs& a, std::istream& in, std::ostream& out) {
  const Loaded l = load(a.inst);
  const Bound bound = Bound::parse(a.gamma);
  const Game g(l.model, l.sentence, bound, GameOptions{parse_mode(a.mode), ClockRepresentation::Canonical});
  const bool human_e = a.as == "eloise" || a.as == "both";
  const bool human_a = a.as == "abelard" || a.as == "both";
  if (!human_e && !human_a) throw UsageError("--as must be eloise, abelard or both");

  DagSolver<Game> solver(g, a.cap);
  const Agent human = interactive_agent(in, out);
  const Agent machine_move = solver_agent(solver);
  const Agent machine = [&](const Game& game, const Position& p, const MoveList& moves) {
    const std::size_t k = machine_move(game, p, moves);
    out << to_string(game.status(p).player) << " (machine) at " << game.describe(p) << ": "
        << game.describe(moves[k].first) << "\n";
    return k;
  };
  out << "game on " << render(l.sentence) << " at " << l.model.name(l.state) << ", bound " << bound.to_string() << "\n";
  try {
    const Trace t = play_trace(g, l.state, human_e ? human : machine, human_a ? human : machine);
    const Player winner = t.back().status.player;
    out << "final position " << g.describe(t.back().position) << "\n" << "won: " << to_string(winner) << "\n";
    return winner == Player::Eloise ? kTrue : kFalse;
  } catch (const PlayAborted&) {
    out << "\naborted\n";
    return kAborted;
  }
}

struct ReduceArgs {
  Instance inst;
  std::string gamma = "auto";
  bool tree = false;
  std::string out;
  std::size_t cap = 1'000'000;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.inst);
  const Bound bound = a.gamma == "auto" ? Bound::finite(std::max<unsigned>(1, static_cast<unsigned>(l.model.card())))
                                        : Bound::parse(a.gamma);
  const ReducedModel r = build_position_model(l.model, l.state, l.sentence, bound, ReduceOptions{a.tree, a.cap});
  const std::string json = reduced_to_json(r, l.model, l.sentence, bound).dump(2) + "\n";
  std::ostream& summary = a.out.empty() ? err : out;
  if (a.out.empty()) {
    out << json;
  } else {
    write_file(a.out, json);
  }
  summary << "root: " << r.ar.model.name(r.ar.start) << "\n" << "positions: " << r.ar.model.card() << "\n";
  return kTrue;
}

struct CompareArgs {
  sweep::Config cfg;
  std::string gammas = "1,2,3,4,omega";
  bool inject_fault = false;
  bool json = false;
};

int cmd_compare(CompareArgs& a, std::ostream& out) {
  a.cfg.gammas.clear();
  std::stringstream ss(a.gammas);
  for (std::string item; std::getline(ss, item, ',');) a.cfg.gammas.push_back(Bound::parse(item));
  const sweep::Report r = sweep::run(a.cfg, a.inject_fault ? sweep::Engines::faulty() : sweep::Engines::reference());
  if (a.json) {
    out << sweep::to_json(r).dump(2) << "\n";
  } else {
    sweep::print(out, r);
  }
  if (!r.all_agree()) return kFalse;
  return r.resource_errors ? kResourceCaps : kTrue;
}

int cmd_gen(const std::string& family, unsigned n, const std::string& path, std::ostream& out) {
  const std::string json = model_to_json(generate_family(family, n)).dump(2) + "\n";
  if (path.empty()) {
    out << json;
  } else {
    write_file(path, json);
  }
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-clock evaluation games for the modal mu-calculus", "boundmu"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate a sentence at a state");
  add_instance_options(*e, eval.inst);
  e->add_option("--semantics", eval.semantics, "standard | bounded:N | omega | fbounded:K | free");
  e->add_option("--mode", eval.mode, "clock choices: greedy | exhaustive");
  e->add_flag("--trace", eval.trace, "print a play in which both players follow the solver");
  e->add_flag("--strategy", eval.strategy, "print the winner's strategy on reachable positions");
  e->add_flag("--json", eval.json, "machine-readable report");
  e->add_flag("--check", eval.check, "assert standard and bounded:card(M) agree");
  e->add_option("--cap", eval.cap, "position cap");

  PlayArgs play;
  auto* p = app.add_subcommand("play", "Play the bounded evaluation game interactively");
  add_instance_options(*p, play.inst);
  p->add_option("--gamma", play.gamma, "clock bound: N or omega");
  p->add_option("--as", play.as, "interactive side: eloise | abelard | both");
  p->add_option("--mode", play.mode, "machine clock choices: greedy | exhaustive");
  p->add_option("--cap", play.cap, "position cap");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Export the game position graph as an alternating reachability model");
  add_instance_options(*r, reduce.inst);
  r->add_option("--gamma", reduce.gamma, "N | omega | auto (card of the model)");
  r->add_flag("--tree", reduce.tree, "unfold shared positions into a tree");
  r->add_option("-o,--out", reduce.out, "output file (default: stdout)");
  r->add_option("--cap", reduce.cap, "position cap");

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Cross-check all engines on a model and formula corpus");
  c->add_option("--max-states", cmp.cfg.max_states);
  c->add_option("--max-binders", cmp.cfg.max_binders);
  c->add_option("--max-nodes", cmp.cfg.max_nodes);
  c->add_option("--gammas", cmp.gammas, "comma-separated bounds");
  c->add_option("--seed", cmp.cfg.seed);
  c->add_option("--random-formulas", cmp.cfg.random_formulas);
  c->add_option("--sample-models", cmp.cfg.sample_models, "sample this many models instead of enumerating");
  c->add_option("--oracle-models", cmp.cfg.oracle_models);
  c->add_option("--ar-max-states", cmp.cfg.ar_max_states);
  c->add_option("--threads", cmp.cfg.threads);
  c->add_option("--cap", cmp.cfg.cap);
  c->add_flag("--inject-fault", cmp.inject_fault, "use a deliberately broken bounded engine");
  c->add_flag("--json", cmp.json);

  std::string family, gen_out;
  unsigned gen_n = 0;
  auto* g = app.add_subcommand("gen", "Generate a benchmark model");
  g->add_option("family", family, "starN | daggerN | chain | clique | ar-grid")->required();
  g->add_option("n", gen_n)->required();
  g->add_option("-o,--out", gen_out, "output file (default: stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*p) return cmd_play(play, in, out);
    if (*r) return cmd_reduce(reduce, out, err);
    if (*c) return cmd_compare(cmp, out);
    if (*g) return cmd_gen(family, gen_n, gen_out, out);
  } catch (const ResourceLimitError& ex) {
    err << "error: " << ex.what() << "\n";
    return kPositionCap;
  } catch (const FormulaError& ex) {
    err << "formula error at offset " << ex.position() << ": " << ex.what() << "\n";
    return kError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace boundmu::cli
