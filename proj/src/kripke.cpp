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

#include "boundmu/kripke.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace boundmu {

// --- StateSet ---------------------------------------------------------------

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t StateSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool StateSet::subset_of(const StateSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~(i < o.words_.size() ? o.words_[i] : 0)) return false;
  }
  return true;
}

StateSet& StateSet::operator|=(const StateSet& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

StateSet StateSet::complement() const {
  StateSet out = full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < n_; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

// --- KripkeModel ------------------------------------------------------------

KripkeModel::KripkeModel(std::vector<std::string> states, std::vector<Edge> edges,
                         std::map<std::string, std::vector<StateId>> valuation)
    : names_(std::move(states)), succ_(names_.size()), empty_(names_.size()) {
  if (names_.empty()) throw ModelError(ModelError::Code::EmptyStates, "model has no states");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ModelError(ModelError::Code::Parse, "duplicate state '" + *dup + "'");
  }
  const auto n = static_cast<StateId>(names_.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ModelError(ModelError::Code::DanglingState, "edge references unknown state");
    succ_[a].push_back(b);
  }
  for (auto& s : succ_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (auto& [p, members] : valuation) {
    StateSet set(names_.size());
    for (StateId s : members) {
      if (s >= n) throw ModelError(ModelError::Code::DanglingState, "valuation of '" + p + "' references unknown state");
      set.insert(s);
    }
    val_.emplace(p, std::move(set));
  }
}

std::optional<StateId> KripkeModel::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

std::vector<KripkeModel::Edge> KripkeModel::edges() const {
  std::vector<Edge> out;
  for (StateId a = 0; a < succ_.size(); ++a) {
    for (StateId b : succ_[a]) out.emplace_back(a, b);
  }
  return out;
}

const StateSet& KripkeModel::valuation(std::string_view p) const {
  auto it = val_.find(p);
  return it == val_.end() ? empty_ : it->second;
}

// --- JSON -------------------------------------------------------------------

KripkeModel load_model(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(ModelError::Code::Parse, std::string("invalid JSON: ") + e.what());
  }
  auto need = [&](const char* key, bool (nlohmann::json::*pred)() const noexcept) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key) || !(j.at(key).*pred)()) {
      throw ModelError(ModelError::Code::Parse, std::string("missing or malformed key '") + key + "'");
    }
    return j.at(key);
  };
  const auto& js = need("states", &nlohmann::json::is_array);
  const auto& je = need("edges", &nlohmann::json::is_array);
  const auto& jv = need("val", &nlohmann::json::is_object);

  std::vector<std::string> states;
  for (const auto& s : js) {
    if (!s.is_string()) throw ModelError(ModelError::Code::Parse, "state names must be strings");
    states.push_back(s.get<std::string>());
  }
  if (states.empty()) throw ModelError(ModelError::Code::EmptyStates, "model has no states");
  std::unordered_map<std::string, StateId> ids;
  for (StateId i = 0; i < states.size(); ++i) ids.emplace(states[i], i);
  auto lookup = [&](const nlohmann::json& s) {
    if (!s.is_string()) throw ModelError(ModelError::Code::Parse, "state references must be strings");
    auto it = ids.find(s.get<std::string>());
    if (it == ids.end()) {
      throw ModelError(ModelError::Code::DanglingState, "unknown state '" + s.get<std::string>() + "'");
    }
    return it->second;
  };

  std::vector<KripkeModel::Edge> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2) throw ModelError(ModelError::Code::Parse, "edges must be 2-element arrays");
    edges.emplace_back(lookup(e[0]), lookup(e[1]));
  }
  std::map<std::string, std::vector<StateId>> val;
  for (const auto& [p, members] : jv.items()) {
    if (!members.is_array()) throw ModelError(ModelError::Code::Parse, "valuation of '" + p + "' must be an array");
    auto& dst = val[p];
    for (const auto& s : members) dst.push_back(lookup(s));
  }
  return KripkeModel(std::move(states), std::move(edges), std::move(val));
}

KripkeModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(ModelError::Code::Parse, "cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

nlohmann::json model_to_json(const KripkeModel& m) {
  nlohmann::json j;
  j["states"] = m.names();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : m.edges()) j["edges"].push_back({m.name(a), m.name(b)});
  j["val"] = nlohmann::json::object();
  for (const auto& [p, set] : m.propositions()) {
    auto& arr = j["val"][p] = nlohmann::json::array();
    for (StateId s : set.members()) arr.push_back(m.name(s));
  }
  return j;
}

// --- families ---------------------------------------------------------------

namespace {

std::vector<std::string> w_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("w_" + std::to_string(i));
  return out;
}

// w_0 -> w_i for 1 <= i <= n, w_{i+1} -> w_i for 0 <= i < n.
std::vector<KripkeModel::Edge> star_edges(unsigned n) {
  std::vector<KripkeModel::Edge> e;
  for (StateId i = 1; i <= n; ++i) e.emplace_back(0, i);
  for (StateId i = 0; i < n; ++i) e.emplace_back(i + 1, i);
  return e;
}

KripkeModel ar_grid(unsigned n) {
  const unsigned side = n + 1;
  auto id = [side](unsigned i, unsigned j) { return static_cast<StateId>(i * side + j); };
  std::vector<std::string> names;
  std::vector<KripkeModel::Edge> edges;
  std::map<std::string, std::vector<StateId>> val{{"p_B", {}}, {"q_B", {}}};
  for (unsigned i = 0; i < side; ++i) {
    for (unsigned j = 0; j < side; ++j) {
      names.push_back("w_" + std::to_string(i) + "_" + std::to_string(j));
      if ((i + j) % 2 == 0) val["q_B"].push_back(id(i, j));
      if (i == n && j == 0) {
        edges.emplace_back(id(i, j), id(i, j));  // trap: A wins by looping forever
        continue;
      }
      if (j + 1 < side) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < side) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  }
  val["p_B"].push_back(id(n, n));
  return KripkeModel(std::move(names), std::move(edges), std::move(val));
}

}  // namespace

KripkeModel generate_family(std::string_view family, unsigned n) {
  if (n == 0) throw std::invalid_argument("family size must be at least 1");
  if (family == "starN") return KripkeModel(w_names(n + 1), star_edges(n), {{"p", {0}}});
  if (family == "daggerN") return KripkeModel(w_names(n + 1), star_edges(n), {{"p", {1}}});
  if (family == "chain") {
    std::vector<KripkeModel::Edge> e;
    for (StateId i = 0; i < n; ++i) e.emplace_back(i, i + 1);
    return KripkeModel(w_names(n + 1), std::move(e), {{"p", {static_cast<StateId>(n)}}});
  }
  if (family == "clique") {
    std::vector<KripkeModel::Edge> e;
    for (StateId i = 0; i <= n; ++i) {
      for (StateId j = 0; j <= n; ++j) {
        if (i != j) e.emplace_back(i, j);
      }
    }
    return KripkeModel(w_names(n + 1), std::move(e), {{"p", {0}}});
  }
  if (family == "ar-grid") return ar_grid(n);
  throw std::invalid_argument("unknown model family '" + std::string(family) + "'");
}

}  // namespace boundmu
