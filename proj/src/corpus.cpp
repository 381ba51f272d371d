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

#include "boundmu/corpus.hpp"

#include <map>
#include <utility>

namespace boundmu::corpus {

namespace {

std::string label_name(std::size_t k) {
  static const char* names[] = {"X", "Y", "Z", "U", "V", "W"};
  return k < std::size(names) ? names[k] : "L" + std::to_string(k);
}

struct Gen {
  const std::vector<std::string>& props;
  std::size_t max_binders;

  // Terms of exactly n nodes whose binders are numbered from `used` on,
  // paired with the number of binders they introduce.
  std::vector<std::pair<Term, std::size_t>> terms(std::size_t n, std::vector<std::string>& scope, std::size_t used) {
    std::vector<std::pair<Term, std::size_t>> out;
    if (n == 1) {
      for (const auto& p : props) {
        out.emplace_back(build::prop(p), 0);
        out.emplace_back(build::neg(p), 0);
      }
      for (const auto& x : scope) out.emplace_back(build::label(x), 0);
      return out;
    }
    for (auto& [t, u] : terms(n - 1, scope, used)) {
      out.emplace_back(build::diamond(t), u);
      out.emplace_back(build::box(t), u);
    }
    if (used < max_binders) {
      const std::string x = label_name(used);
      scope.push_back(x);
      for (auto& [t, u] : terms(n - 1, scope, used + 1)) {
        out.emplace_back(build::mu(x, t), u + 1);
        out.emplace_back(build::nu(x, t), u + 1);
      }
      scope.pop_back();
    }
    for (std::size_t l = 1; l + 1 < n; ++l) {
      const auto lefts = terms(l, scope, used);
      std::map<std::size_t, std::vector<std::pair<Term, std::size_t>>> rights;
      for (const auto& [lt, lu] : lefts) {
        auto it = rights.find(lu);
        if (it == rights.end()) it = rights.emplace(lu, terms(n - 1 - l, scope, used + lu)).first;
        for (const auto& [rt, ru] : it->second) {
          out.emplace_back(build::lor(lt, rt), lu + ru);
          out.emplace_back(build::land(lt, rt), lu + ru);
        }
      }
    }
    return out;
  }
};

}  // namespace

std::vector<Sentence> enumerate_sentences(std::size_t max_nodes, std::size_t max_binders,
                                          const std::vector<std::string>& props) {
  Gen gen{props, max_binders};
  std::vector<Sentence> out;
  std::vector<std::string> scope;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (auto& [t, u] : gen.terms(n, scope, 0)) out.emplace_back(t);
  }
  return out;
}

namespace {

struct RandomGen {
  std::mt19937_64& rng;
  const std::vector<std::string>& props;
  std::size_t max_binders;
  std::size_t used = 0;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  Term leaf(const std::vector<std::string>& scope) {
    if (!scope.empty() && pick(5) < 2) return build::label(scope[pick(scope.size())]);
    const std::string& p = props[pick(props.size())];
    return pick(2) ? build::prop(p) : build::neg(p);
  }

  Term term(std::size_t budget, std::vector<std::string>& scope) {
    if (budget <= 1) return leaf(scope);
    const bool can_bind = used < max_binders;
    const std::size_t choice = pick(can_bind ? 5 : 4);
    switch (choice) {
      case 0: return build::diamond(term(budget - 1, scope));
      case 1: return build::box(term(budget - 1, scope));
      case 2:
      case 3: {
        if (budget < 3) return pick(2) ? build::diamond(term(budget - 1, scope)) : build::box(term(budget - 1, scope));
        const std::size_t l = 1 + pick(budget - 2);
        Term left = term(l, scope);
        Term right = term(budget - 1 - l, scope);
        return choice == 2 ? build::lor(std::move(left), std::move(right)) : build::land(std::move(left), std::move(right));
      }
      default: {
        const std::string x = label_name(used++);
        scope.push_back(x);
        Term body = term(budget - 1, scope);
        scope.pop_back();
        return pick(2) ? build::mu(x, std::move(body)) : build::nu(x, std::move(body));
      }
    }
  }
};

}  // namespace

Sentence random_sentence(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_binders,
                         const std::vector<std::string>& props) {
  RandomGen gen{rng, props, max_binders};
  std::vector<std::string> scope;
  const std::size_t budget = 1 + gen.pick(std::max<std::size_t>(1, max_nodes));
  // Start with a binder most of the time so fixed points are well represented.
  if (max_binders > 0 && budget >= 2 && gen.pick(4) != 0) {
    const std::string x = label_name(gen.used++);
    scope.push_back(x);
    Term body = gen.term(budget - 1, scope);
    return Sentence(gen.pick(2) ? build::mu(x, std::move(body)) : build::nu(x, std::move(body)));
  }
  return Sentence(gen.term(budget, scope));
}

std::vector<KripkeModel> enumerate_models_exact(std::size_t states, const std::vector<std::string>& props) {
  std::vector<KripkeModel> out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  const std::size_t edge_bits = states * states;
  const std::size_t val_bits = states * props.size();
  for (std::uint64_t em = 0; em < (std::uint64_t{1} << edge_bits); ++em) {
    std::vector<KripkeModel::Edge> edges;
    for (std::size_t b = 0; b < edge_bits; ++b) {
      if ((em >> b) & 1) edges.emplace_back(static_cast<StateId>(b / states), static_cast<StateId>(b % states));
    }
    for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << val_bits); ++vm) {
      std::map<std::string, std::vector<StateId>> val;
      for (std::size_t pi = 0; pi < props.size(); ++pi) {
        auto& set = val[props[pi]];
        for (std::size_t s = 0; s < states; ++s) {
          if ((vm >> (pi * states + s)) & 1) set.push_back(static_cast<StateId>(s));
        }
      }
      out.emplace_back(names, edges, std::move(val));
    }
  }
  return out;
}

std::vector<KripkeModel> enumerate_models(std::size_t max_states, const std::vector<std::string>& props) {
  std::vector<KripkeModel> out;
  for (std::size_t n = 1; n <= max_states; ++n) {
    auto batch = enumerate_models_exact(n, props);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

KripkeModel random_model(std::mt19937_64& rng, std::size_t states, const std::vector<std::string>& props,
                         double edge_probability) {
  std::bernoulli_distribution edge(edge_probability), coin(0.5);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  std::vector<KripkeModel::Edge> edges;
  for (StateId a = 0; a < states; ++a) {
    for (StateId b = 0; b < states; ++b) {
      if (edge(rng)) edges.emplace_back(a, b);
    }
  }
  std::map<std::string, std::vector<StateId>> val;
  for (const auto& p : props) {
    auto& set = val[p];
    for (StateId s = 0; s < states; ++s) {
      if (coin(rng)) set.push_back(s);
    }
  }
  return KripkeModel(std::move(names), std::move(edges), std::move(val));
}

}  // namespace boundmu::corpus
