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
#include "boundmu/reduction.hpp"
#include "boundmu/variants.hpp"

using namespace boundmu;

namespace {

KripkeModel m1() { return load_model(R"({"states":["a","b"],"edges":[["a","b"],["b","b"]],"val":{"p":["b"]}})"); }

const char* kAFp = "mu X. (p | []X)";

}  // namespace

TEST_CASE("f values") {
  const KripkeModel m = m1();
  const Sentence afp = parse(kAFp);
  CHECK(f_value(m, 0, afp, 1) == 10);
  CHECK(f_value(m, 0, afp, 2) == 20);
  const KripkeModel one = load_model(R"({"states":["x"],"edges":[],"val":{}})");
  CHECK(f_value(one, 0, parse("p"), 1) == 1);
  CHECK_THROWS(f_value(m, 0, afp, 0));
}

TEST_CASE("f-bounded game examples") {
  const KripkeModel m = m1();
  const Sentence afp = parse(kAFp);
  const FBoundedResult r = solve_fbounded(m, 0, afp, 1);
  CHECK(r.verdict == Verdict::Eloise);
  CHECK(r.f == 10);
  CHECK(r.visited <= 2 * 5 * 11 * 11);
  CHECK(r.strategy.player == Player::Eloise);

  const Sentence loop = parse("mu X. X");
  CHECK(solve_fbounded(m, 0, loop, 1).verdict == Verdict::Abelard);
  CHECK(solve_fbounded(m, 1, loop, 2, DecrementMode::Exhaustive).verdict == Verdict::Abelard);
  CHECK(solve_fbounded(m, 0, parse("nu X. X"), 1).verdict == Verdict::Eloise);
}

TEST_CASE("f-bounded moves") {
  const KripkeModel m = m1();
  const Sentence afp = parse(kAFp);
  const FBoundedGame g(m, afp, 3);
  std::vector<std::pair<Move, FPosition>> moves;
  g.moves(FPosition{0, 0, 3, 3}, moves);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].first == Move::proceed());
  CHECK(moves[0].second == FPosition{0, 1, 3, 3});

  g.moves(FPosition{1, 4, 3, 3}, moves);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].second == FPosition{1, 1, 2, 3});
  CHECK(g.status(FPosition{1, 4, 0, 3}) == GameStatus::won(Player::Abelard));

  const FBoundedGame any(m, afp, 3, DecrementMode::Exhaustive);
  any.moves(FPosition{1, 4, 3, 3}, moves);
  CHECK(moves.size() == 3);

  const Sentence nu = parse("nu Y. <>Y");
  const FBoundedGame gn(m, nu, 2);
  CHECK(gn.status(FPosition{0, 2, 2, 0}) == GameStatus::won(Player::Eloise));
  gn.moves(FPosition{0, 2, 2, 2}, moves);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].second == FPosition{0, 1, 2, 1});
}

TEST_CASE("f-bounded games are determined and decrement-1 is enough") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = corpus::random_model(rng, 1 + i % 3);
    const Sentence s = corpus::random_sentence(rng, 8, 2);
    for (StateId w = 0; w < m.card(); ++w) {
      const auto a = solve_fbounded(m, w, s, 1);
      const auto b = solve_fbounded(m, w, s, 1, DecrementMode::Exhaustive);
      CHECK(a.verdict != Verdict::Undetermined);
      CHECK(a.verdict == b.verdict);
    }
  }
}

TEST_CASE("free semantics examples") {
  const KripkeModel m = m1();
  CHECK(solve_free(m, 0, parse("mu X. X")) == Verdict::Undetermined);
  CHECK(solve_free(m, 0, parse("nu X. X")) == Verdict::Undetermined);
  CHECK(solve_free(m, 1, parse("p")) == Verdict::Eloise);
  CHECK(solve_free(m, 0, parse("p")) == Verdict::Abelard);
  CHECK(solve_free(m, 0, parse(kAFp)) == Verdict::Eloise);
  // b loops forever through []X without meeting a literal.
  CHECK(solve_free(m, 0, parse("nu X. []X")) == Verdict::Undetermined);
  const KripkeModel dead = load_model(R"({"states":["d"],"edges":[],"val":{}})");
  CHECK(solve_free(dead, 0, parse("mu X. []X")) == Verdict::Eloise);
  CHECK(solve_free(dead, 0, parse("nu X. <>X")) == Verdict::Abelard);
}

TEST_CASE("free regions are consistent with the clocked games") {
  // A player winning without clocks wins every clocked game as well.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = corpus::random_model(rng, 1 + i % 3);
    const Sentence s = corpus::random_sentence(rng, 8, 2);
    const FreeRegions r = solve_free_regions(m, s);
    CHECK(r.verdict.size() == m.card() * s.size());
    for (StateId w = 0; w < m.card(); ++w) {
      const Verdict v = r.at(w, 0);
      if (v == Verdict::Undetermined) continue;
      CHECK(solve_fbounded(m, w, s, 1).verdict == v);
    }
  }
}
