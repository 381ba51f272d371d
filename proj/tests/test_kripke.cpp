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

#include "boundmu/corpus.hpp"
#include "boundmu/kripke.hpp"
#include "boundmu/reduction.hpp"

using namespace boundmu;

namespace {

const char* kM1 = R"({"states":["a","b"],"edges":[["a","b"],["b","b"]],"val":{"p":["b"]}})";

ModelError::Code load_error(const char* text) {
  try {
    load_model(text);
  } catch (const ModelError& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ModelError::Code::Parse;
}

std::vector<std::pair<std::string, std::string>> named_edges(const KripkeModel& m) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : m.edges()) out.emplace_back(m.name(a), m.name(b));
  return out;
}

}  // namespace

TEST_CASE("state sets") {
  StateSet s(70);
  CHECK(s.empty());
  s.insert(3);
  s.insert(69);
  CHECK(s.count() == 2);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(4));
  CHECK(s.members() == std::vector<StateId>{3, 69});
  const StateSet c = s.complement();
  CHECK(c.count() == 68);
  CHECK_FALSE(c.contains(3));
  CHECK(StateSet::full(70).count() == 70);
  CHECK(s.subset_of(StateSet::full(70)));
  s.erase(3);
  CHECK(s.members() == std::vector<StateId>{69});
}

TEST_CASE("load the two-state model") {
  const KripkeModel m = load_model(kM1);
  CHECK(m.card() == 2);
  CHECK(m.name(0) == "a");
  CHECK(m.find("b") == std::optional<StateId>(1));
  CHECK_FALSE(m.find("c"));
  CHECK(named_edges(m) == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "b"}});
  CHECK(m.holds("p", 1));
  CHECK_FALSE(m.holds("p", 0));
  CHECK(m.valuation("q").empty());
  CHECK(load_model(model_to_json(m).dump()) == m);
}

TEST_CASE("model errors") {
  CHECK(load_error(R"({"states":["a","b"],"edges":[["a","c"]],"val":{}})") == ModelError::Code::DanglingState);
  CHECK(load_error(R"({"states":["a"],"edges":[],"val":{"p":["z"]}})") == ModelError::Code::DanglingState);
  CHECK(load_error(R"({"states":[],"edges":[],"val":{}})") == ModelError::Code::EmptyStates);
  CHECK(load_error(R"({"states":["a","a"],"edges":[],"val":{}})") == ModelError::Code::Parse);
  CHECK(load_error(R"({"states":["a"],"val":{}})") == ModelError::Code::Parse);
  CHECK(load_error("not json") == ModelError::Code::Parse);
  CHECK(load_error(R"({"states":["a"],"edges":[["a"]],"val":{}})") == ModelError::Code::Parse);
}

TEST_CASE("extra keys are ignored") {
  const KripkeModel m = load_model(R"({"states":["x"],"edges":[],"val":{},"root":"x","backmap":{}})");
  CHECK(m.card() == 1);
}

TEST_CASE("state order follows the file and edges are deduplicated") {
  const KripkeModel m = load_model(R"({"states":["z","y"],"edges":[["z","y"],["z","y"],["y","z"]],"val":{}})");
  CHECK(m.name(0) == "z");
  CHECK(m.successors(0).size() == 1);
}

TEST_CASE("model families") {
  const KripkeModel star = generate_family("starN", 2);
  CHECK(star.card() == 3);
  using E = std::vector<std::pair<std::string, std::string>>;
  CHECK(named_edges(star) == E{{"w_0", "w_1"}, {"w_0", "w_2"}, {"w_1", "w_0"}, {"w_2", "w_1"}});
  CHECK(star.valuation("p").members() == std::vector<StateId>{0});

  const KripkeModel dagger = generate_family("daggerN", 2);
  CHECK(named_edges(dagger) == named_edges(star));
  CHECK(dagger.valuation("p").members() == std::vector<StateId>{1});

  const KripkeModel chain = generate_family("chain", 1);
  CHECK(named_edges(chain) == E{{"w_0", "w_1"}});
  CHECK(chain.valuation("p").members() == std::vector<StateId>{1});

  const KripkeModel clique = generate_family("clique", 2);
  CHECK(clique.edges().size() == 6);
  CHECK(clique.valuation("p").members() == std::vector<StateId>{0});

  const KripkeModel grid = generate_family("ar-grid", 2);
  CHECK(grid.card() == 9);
  CHECK_NOTHROW(check_ar_vocabulary(grid));
  CHECK(grid.valuation(kPB).members() == std::vector<StateId>{8});

  CHECK(generate_family("starN", 4) == generate_family("starN", 4));
  CHECK_THROWS_AS(generate_family("starN", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("wheel", 3), std::invalid_argument);
}

TEST_CASE("model enumeration") {
  const auto one = corpus::enumerate_models_exact(1, {"p", "q"});
  CHECK(one.size() == 8);
  const auto two = corpus::enumerate_models_exact(2, {"p", "q"});
  CHECK(two.size() == 256);
  for (std::size_t i = 0; i < two.size(); ++i) {
    for (std::size_t j = i + 1; j < std::min<std::size_t>(two.size(), i + 20); ++j) CHECK_FALSE(two[i] == two[j]);
  }
  CHECK(corpus::enumerate_models(2).size() == 264);
}
