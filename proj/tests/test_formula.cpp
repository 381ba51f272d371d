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
#include "boundmu/reduction.hpp"
#include "oracles.hpp"

using namespace boundmu;

namespace {

const char* kAFp = "mu X. (p | []X)";
const char* kStar = "nu X. [] mu Y. (<>Y | (p & X))";

FormulaError::Code error_code(const char* text) {
  try {
    parse(text);
  } catch (const FormulaError& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return FormulaError::Code::Lex;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse(kAFp).term() ==
        build::mu("X", build::lor(build::prop("p"), build::box(build::label("X")))));
  CHECK(parse(kStar).term() ==
        build::nu("X", build::box(build::mu("Y", build::lor(build::diamond(build::label("Y")),
                                                             build::land(build::prop("p"), build::label("X")))))));
  const Sentence p = parse("p");
  CHECK(p.size() == 1);
  CHECK(p.node(0).kind == Kind::Prop);
  CHECK(parse("!p").node(0).kind == Kind::NegProp);
}

TEST_CASE("binary operators associate left and & binds tighter than |") {
  CHECK(parse("p | q | r").term() == build::lor(build::lor(build::prop("p"), build::prop("q")), build::prop("r")));
  CHECK(parse("p | q & r").term() == build::lor(build::prop("p"), build::land(build::prop("q"), build::prop("r"))));
  CHECK(parse("<>p & q").term() == build::land(build::diamond(build::prop("p")), build::prop("q")));
}

TEST_CASE("binder scope extends maximally right") {
  CHECK(parse("mu X. p | X").term() == build::mu("X", build::lor(build::prop("p"), build::label("X"))));
  CHECK(parse("p & mu X. q | X").term() ==
        build::land(build::prop("p"), build::mu("X", build::lor(build::prop("q"), build::label("X")))));
}

TEST_CASE("parse errors carry their kind and offset") {
  CHECK(error_code("mu X. Y") == FormulaError::Code::FreeLabel);
  CHECK(error_code("p $ q") == FormulaError::Code::Lex);
  CHECK(error_code("p |") == FormulaError::Code::Syntax);
  CHECK(error_code("(p") == FormulaError::Code::Syntax);
  CHECK(error_code("mu x. p") == FormulaError::Code::Syntax);
  CHECK(error_code("") == FormulaError::Code::Syntax);
  try {
    parse("p & $");
    FAIL("expected an error");
  } catch (const FormulaError& e) {
    CHECK(e.position() == 4);
  }
  const Sentence open = parse("mu X. Y", ParseOptions{true});
  CHECK(open.free_labels() == std::vector<std::string>{"Y"});
}

TEST_CASE("render") {
  CHECK(render(Sentence(build::mu("X", build::label("X")))) == "mu X. X");
  CHECK(render(parse(kStar)) == "nu X. ([] (mu Y. ((<> Y) | (p & X))))");
  CHECK(render(parse("p")) == "p");
  CHECK(render(parse("!p & q")) == "!p & q");
}

TEST_CASE("render then parse is the identity on the corpus") {
  auto all = corpus::enumerate_sentences(5, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) all.push_back(corpus::random_sentence(rng, 12, 3));
  for (const auto& s : all) {
    INFO(render(s));
    CHECK(parse(render(s)) == s);
  }
}

TEST_CASE("node paths") {
  const Sentence s = parse(kStar);
  CHECK(s.path(0) == "r");
  CHECK(s.path(1) == "r.0");
  CHECK(s.path(s.size() - 1) == "r.0.0.0.1.1");
}

TEST_CASE("normalize") {
  const Sentence afp = parse(kAFp);
  CHECK(is_normal(afp));
  CHECK(normalize(afp) == afp);

  const Sentence twice = parse("(mu X. p | X) & (mu X. q | X)");
  CHECK_FALSE(is_normal(twice));
  const Sentence n = normalize(twice);
  CHECK(is_normal(n));
  CHECK(render(n) == "(mu X. (p | X)) & (mu X1. (q | X1))");
  CHECK(oracle::alpha_equivalent(n.term(), twice.term()));
  CHECK(normalize(n) == n);

  const Sentence shadow = parse("nu X. mu X. X");
  const Sentence ns = normalize(shadow);
  CHECK(is_normal(ns));
  const NodeId label = 2;
  CHECK(oracle::rf_by_parent_walk(shadow, label) == std::optional<NodeId>(1));
  CHECK(oracle::rf_by_parent_walk(ns, label) == std::optional<NodeId>(1));
  CHECK(build_index(ns).reference(label) == 1);

  // Fresh names avoid every existing name.
  const Sentence clash = normalize(parse("(mu X. X) & (mu X1. X1) & (mu X. X)"));
  CHECK(is_normal(clash));
  CHECK(render(clash) == "((mu X. X) & (mu X1. X1)) & (mu X2. X2)");
}

TEST_CASE("normalize is idempotent and alpha-preserving on the corpus") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Sentence s = corpus::random_sentence(rng, 10, 3);
    const Sentence doubled(build::land(s.term(), s.term()));
    const Sentence n = normalize(doubled);
    CHECK(is_normal(n));
    CHECK(normalize(n) == n);
    CHECK(oracle::alpha_equivalent(n.term(), doubled.term()));
  }
}

TEST_CASE("dual") {
  CHECK(render(dual(parse("p"))) == "!p");
  CHECK(render(dual(parse(kAFp))) == "nu X. (!p & (<> X))");
  CHECK(render(dual(chi())) == "nu X. ((!p_B & (!q_B | ([] X))) & (q_B | (<> X)))");

  auto all = corpus::enumerate_sentences(5, 2);
  for (const auto& s : all) CHECK(dual(dual(s)) == s);

  for (const auto& m : corpus::enumerate_models(2, {"p_B", "q_B"})) {
    const auto in = oracle::standard(m, chi().term());
    const auto out = oracle::standard(m, dual(chi()).term());
    for (StateId w = 0; w < m.card(); ++w) CHECK(in[w] != out[w]);
  }
}

TEST_CASE("syntax index") {
  const Sentence star = parse(kStar);
  const SyntaxIndex ix = build_index(star);
  // nu X (0), [] (1), mu Y (2), | (3), <> (4), Y (5), & (6), p (7), X (8)
  CHECK(ix.reference(8) == 0);
  CHECK(ix.reference(5) == 2);
  CHECK(render(star, ix.reference(5)) == "mu Y. ((<> Y) | (p & X))");
  CHECK(ix.mu_nu_nodes == std::vector<NodeId>{0, 2});
  CHECK(ix.active_ancestors[5] == std::vector<NodeId>{0, 2});
  CHECK(ix.active_ancestors[0].empty());
  CHECK(ix.inner_binders[0] == std::vector<NodeId>{2});
  CHECK(ix.size == 9);

  const SyntaxIndex loop = build_index(parse("mu X. X"));
  CHECK(loop.reference(1) == 0);
  CHECK(loop.active_ancestors[1] == std::vector<NodeId>{0});

  const SyntaxIndex afp = build_index(parse(kAFp));
  CHECK(afp.mu_nu_nodes == std::vector<NodeId>{0});
  CHECK(afp.size == 5);

  CHECK_THROWS_AS(build_index(parse("mu X. Y", ParseOptions{true})), FormulaError);
}

TEST_CASE("reference formulas agree with a parent walk") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Sentence s = normalize(corpus::random_sentence(rng, 14, 4));
    const SyntaxIndex ix = build_index(s);
    std::size_t binders = 0;
    for (NodeId n = 0; n < s.size(); ++n) {
      if (s.node(n).kind == Kind::Label) {
        CHECK(oracle::rf_by_parent_walk(s, n) == std::optional<NodeId>(ix.reference(n)));
      }
      if (is_binder(s.node(n).kind)) ++binders;
    }
    CHECK(ix.mu_nu_nodes.size() == binders);
    CHECK(ix.size == s.size());
  }
}
