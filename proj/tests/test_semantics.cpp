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

#include <doctest.h>

#include <random>

#include "boundmu/corpus.hpp"
#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/semantics.hpp"
#include "oracles.hpp"

using namespace boundmu;

namespace {

KripkeModel m1() { return load_model(R"({"states":["a","b"],"edges":[["a","b"],["b","b"]],"val":{"p":["b"]}})"); }

std::vector<StateId> members(const StateSet& s) { return s.members(); }
using V = std::vector<StateId>;

}  // namespace

TEST_CASE("bounds") {
  CHECK(Bound::parse("3") == Bound::finite(3));
  CHECK(Bound::parse("omega").is_omega());
  CHECK_THROWS(Bound::parse("0"));
  CHECK_THROWS(Bound::parse("x"));
  CHECK_THROWS(Bound::finite(0));
  CHECK(Bound::omega().effective(m1()) == 2);
  CHECK(Bound::finite(7).effective(m1()) == 7);
  CHECK(Bound::omega().to_string() == "omega");
}

TEST_CASE("standard semantics examples") {
  const KripkeModel m = m1();
  CHECK(members(eval_standard(m, parse("mu X. (p | []X)"))) == V{0, 1});
  CHECK(members(eval_standard(m, parse("p"))) == V{1});
  CHECK(members(eval_standard(m, parse("mu X. X"))).empty());
  CHECK(members(eval_standard(m, parse("nu X. <>X"))) == V{0, 1});
  CHECK(members(eval_standard(m, parse("[]p"))) == V{0, 1});
}

TEST_CASE("open formulas need an assignment") {
  const KripkeModel m = m1();
  const Sentence open = parse("<>Z", ParseOptions{true});
  CHECK_THROWS_AS(eval_standard(m, open), UnboundLabelError);
  Assignment a;
  a["Z"] = StateSet(2);
  a["Z"].insert(1);
  CHECK(members(eval_standard(m, open, 0, a)) == V{0, 1});
}

TEST_CASE("approximants") {
  const KripkeModel m = m1();
  const Sentence afp = parse("mu X. (p | []X)");
  CHECK(members(approximant(m, afp, 0, Bound::finite(2), 1)) == V{1});
  CHECK(members(approximant(m, afp, 0, Bound::finite(2), 0)).empty());
  CHECK(members(approximant(m, afp, 0, Bound::finite(2), 2)) == V{0, 1});
  const Sentence g = parse("nu X. p & <>X");
  CHECK(members(approximant(m, g, 0, Bound::finite(2), 0)) == V{0, 1});
  CHECK(members(approximant(m, g, 0, Bound::finite(2), 1)) == V{1});
}

TEST_CASE("bounded semantics examples") {
  const KripkeModel m = m1();
  const Sentence afp = parse("mu X. (p | []X)");
  CHECK(members(eval_bounded(m, afp, 0, Bound::finite(1))) == V{1});
  CHECK(members(eval_bounded(m, afp, 0, Bound::finite(2))) == V{0, 1});
  CHECK(members(eval_bounded(m, afp, 0, Bound::omega())) == V{0, 1});
}

TEST_CASE("standard and bounded semantics match brute-force iteration") {
  auto sentences = corpus::enumerate_sentences(5, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) sentences.push_back(corpus::random_sentence(rng, 10, 3));
  std::vector<KripkeModel> models = corpus::enumerate_models(1);
  for (int i = 0; i < 12; ++i) models.push_back(corpus::random_model(rng, 3));
  const Bound bounds[] = {Bound::finite(1), Bound::finite(2), Bound::finite(3), Bound::omega()};
  for (const auto& m : models) {
    for (const auto& s : sentences) {
      REQUIRE(oracle::set_of(eval_standard(m, s), m.card()) == oracle::standard(m, s.term()));
      for (Bound b : bounds) {
        REQUIRE(oracle::set_of(eval_bounded(m, s, 0, b), m.card()) == oracle::bounded(m, s.term(), b));
      }
    }
  }
}

TEST_CASE("approximant chains stabilize within card(M) steps and are monotone") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = corpus::random_model(rng, 1 + i % 4);
    const Sentence s = corpus::random_sentence(rng, 9, 2);
    const SyntaxIndex ix = build_index(s);
    if (ix.mu_nu_nodes.empty() || ix.mu_nu_nodes.front() != 0) continue;
    const unsigned card = static_cast<unsigned>(m.card());
    const Bound b = Bound::finite(card);
    const bool mu = s.node(0).kind == Kind::Mu;
    StateSet prev = approximant(m, s, 0, b, 0);
    for (unsigned g = 1; g <= card + 1; ++g) {
      const StateSet cur = approximant(m, s, 0, b, g);
      CHECK((mu ? prev.subset_of(cur) : cur.subset_of(prev)));
      prev = cur;
    }
    CHECK(approximant(m, s, 0, b, card) == approximant(m, s, 0, b, card + 1));
  }
}

TEST_CASE("bounded semantics at card(M) and omega equal the standard semantics") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const KripkeModel m = corpus::random_model(rng, 1 + i % 4);
    const Sentence s = corpus::random_sentence(rng, 10, 2);
    const StateSet std_ext = eval_standard(m, s);
    for (NodeId n = 0; n < s.size(); ++n) {
      // Every closed subformula, not just the root.
      const Sentence sub(s.term(n));
      if (!sub.is_closed()) continue;
      CHECK(eval_bounded(m, sub, 0, Bound::finite(static_cast<unsigned>(m.card()))) == eval_standard(m, sub));
    }
    CHECK(eval_bounded(m, s, 0, Bound::omega()) == std_ext);
  }
}

TEST_CASE("duality complements the standard extension") {
  for (const auto& m : corpus::enumerate_models(2)) {
    for (const auto& s : corpus::enumerate_sentences(4, 1)) {
      const StateSet a = eval_standard(m, s);
      const StateSet b = eval_standard(m, dual(s));
      CHECK(a == b.complement());
    }
  }
}
