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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace boundmu {

using StateId = std::uint32_t;

/// Subset of a model's states, stored as a fixed-width bit set.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static StateSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool contains(StateId s) const { return s < n_ && (words_[s / 64] >> (s % 64)) & 1u; }
  void insert(StateId s) { words_.at(s / 64) |= std::uint64_t{1} << (s % 64); }
  void erase(StateId s) { words_.at(s / 64) &= ~(std::uint64_t{1} << (s % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const StateSet& o) const;

  StateSet& operator|=(const StateSet& o);
  StateSet& operator&=(const StateSet& o);
  StateSet complement() const;
  std::vector<StateId> members() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class ModelError : public std::runtime_error {
 public:
  enum class Code { Parse, DanglingState, EmptyStates };
  ModelError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Finite Kripke model (W, R, V). States are indexed densely in declaration
/// order; successor lists are sorted and duplicate-free.
class KripkeModel {
 public:
  using Edge = std::pair<StateId, StateId>;

  /// Validates: nonempty, unique names, edges and valuation sets in range.
  KripkeModel(std::vector<std::string> states, std::vector<Edge> edges,
              std::map<std::string, std::vector<StateId>> valuation);

  std::size_t card() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<StateId> find(std::string_view name) const;

  std::span<const StateId> successors(StateId s) const { return succ_.at(s); }
  std::vector<Edge> edges() const;

  /// Valuation of p; the empty set for propositions the model does not mention.
  const StateSet& valuation(std::string_view p) const;
  bool holds(std::string_view p, StateId s) const { return valuation(p).contains(s); }
  const std::map<std::string, StateSet, std::less<>>& propositions() const { return val_; }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<StateId>> succ_;
  std::map<std::string, StateSet, std::less<>> val_;
  StateSet empty_;
};

/// Assignment s: label name -> set of states.
using Assignment = std::map<std::string, StateSet, std::less<>>;

/// Parses the JSON model format {"states": [...], "edges": [[a,b],...], "val": {p: [...]}}.
KripkeModel load_model(std::string_view bytes);
KripkeModel load_model_file(const std::string& path);

nlohmann::json model_to_json(const KripkeModel& m);

/// Example model families: starN, daggerN, chain, clique, ar-grid.
KripkeModel generate_family(std::string_view family, unsigned n);

}  // namespace boundmu
