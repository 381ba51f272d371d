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

#include <sstream>

#include "boundmu/sweep.hpp"

using namespace boundmu;

namespace {

sweep::Config small() {
  sweep::Config c;
  c.max_states = 1;
  c.max_nodes = 4;
  c.gammas = {Bound::finite(1), Bound::finite(2), Bound::omega()};
  c.random_formulas = 10;
  c.ar_max_states = 2;
  return c;
}

}  // namespace

TEST_CASE("small sweep agrees everywhere") {
  const sweep::Report r = sweep::run(small());
  CHECK(r.all_agree());
  CHECK(r.models == 8 + 264);
  CHECK(r.resource_errors == 0);
  for (const auto& c : r.checks) {
    CHECK(c.failures == 0);
    CHECK(c.instances > 0);
  }
  std::ostringstream os;
  sweep::print(os, r);
  CHECK(os.str().find("gts-vs-bounded") != std::string::npos);
  CHECK(os.str().find("FAIL") == std::string::npos);
  const auto j = sweep::to_json(r);
  CHECK(j["all_agree"] == true);
  CHECK(j["checks"].size() == sweep::kCheckCount);
}

TEST_CASE("an injected fault is reported with a minimal counterexample") {
  sweep::Config c = small();
  c.max_states = 2;
  c.max_nodes = 3;
  c.random_formulas = 0;
  c.ar_max_states = 0;
  const sweep::Report r = sweep::run(c, sweep::Engines::faulty());
  CHECK_FALSE(r.all_agree());
  const auto& g = r.check(sweep::CheckId::GtsBounded);
  CHECK(g.failures > 0);
  REQUIRE(g.counterexample);
  CHECK(g.counterexample->check == "gts-vs-bounded");
  CHECK(g.counterexample->model["states"].size() <= 2);
  CHECK_FALSE(g.counterexample->formula.empty());
  std::ostringstream os;
  sweep::print(os, r);
  CHECK(os.str().find("counterexample [gts-vs-bounded]") != std::string::npos);
}

TEST_CASE("a fixed seed gives the same report") {
  sweep::Config c = small();
  c.random_formulas = 30;
  c.sample_models = 6;
  c.max_states = 3;
  const auto a = sweep::to_json(sweep::run(c));
  const auto b = sweep::to_json(sweep::run(c));
  auto strip = [](nlohmann::json j) {
    j.erase("seconds");
    return j;
  };
  CHECK(strip(a) == strip(b));
  c.threads = 3;
  CHECK(strip(sweep::to_json(sweep::run(c))) == strip(a));
  CHECK(sweep::sentences(c).size() == sweep::sentences(small()).size() + 20);
}

TEST_CASE("sampled three- and four-state models agree") {
  sweep::Config c;
  c.max_states = 4;
  c.sample_models = 24;
  c.max_binders = 2;
  c.max_nodes = 4;
  c.random_formulas = 20;
  c.ar_max_states = 0;
  c.seed = 5;
  const sweep::Report r = sweep::run(c);
  CHECK(r.all_agree());
  CHECK(r.resource_errors == 0);
  CHECK(r.check(sweep::CheckId::GtsBounded).instances > 0);
}
