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
#include <random>
#include <string>
#include <vector>

#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"

namespace boundmu::corpus {

/// Every closed normal-form sentence with at most `max_nodes` nodes and at
/// most `max_binders` binders over the given propositions (each usable as
/// p and !p). The k-th binder in pre-order binds labels[k], so alpha-variants
/// are produced once. Ordered by size, then generation order.
std::vector<Sentence> enumerate_sentences(std::size_t max_nodes, std::size_t max_binders,
                                          const std::vector<std::string>& props = {"p", "q"});

/// Random closed normal-form sentence with at most max_binders binders and
/// roughly max_nodes nodes (never more than max_nodes + max_binders).
Sentence random_sentence(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_binders,
                         const std::vector<std::string>& props = {"p", "q"});

/// Every model with 1..max_states states (named s0, s1, ...), every edge set
/// and every valuation of `props`. Props with an empty extension are still
/// listed in the valuation.
std::vector<KripkeModel> enumerate_models(std::size_t max_states, const std::vector<std::string>& props = {"p", "q"});

/// Models with exactly `states` states.
std::vector<KripkeModel> enumerate_models_exact(std::size_t states, const std::vector<std::string>& props);

KripkeModel random_model(std::mt19937_64& rng, std::size_t states, const std::vector<std::string>& props = {"p", "q"},
                         double edge_probability = 0.4);

}  // namespace boundmu::corpus
