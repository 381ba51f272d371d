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

#include "boundmu/semantics.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace boundmu {

Bound Bound::finite(unsigned n) {
  if (n == 0) throw std::invalid_argument("clock value bound must be at least 1");
  return Bound(n, false);
}

unsigned Bound::value() const {
  if (omega_) throw std::logic_error("omega has no finite value");
  return n_;
}

unsigned Bound::effective(const KripkeModel& m) const {
  if (!omega_) return n_;
  return std::max<unsigned>(1, static_cast<unsigned>(m.card()));
}

std::string Bound::to_string() const { return omega_ ? "omega" : std::to_string(n_); }

Bound Bound::parse(std::string_view text) {
  if (text == "omega" || text == "w") return omega();
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw std::invalid_argument("invalid bound '" + std::string(text) + "' (expected N >= 1 or omega)");
  }
  return finite(n);
}

namespace {

class Evaluator {
 public:
  // steps == nullopt: standard semantics; otherwise binders iterate exactly
  // that many times (stopping early once the chain is stable).
  Evaluator(const KripkeModel& m, const Sentence& s, std::optional<unsigned> steps,
            const Assignment& a)
      : m_(m), s_(s), steps_(steps) {
    for (const auto& [x, set] : a) env_.emplace_back(x, set);
  }

  StateSet eval(NodeId id) {
    const Node& nd = s_.node(id);
    const std::size_t n = m_.card();
    switch (nd.kind) {
      case Kind::Prop:
        return m_.valuation(nd.name);
      case Kind::NegProp:
        return m_.valuation(nd.name).complement();
      case Kind::Label:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == nd.name) return it->second;
        }
        throw UnboundLabelError("unbound label '" + nd.name + "'");
      case Kind::Or: {
        StateSet r = eval(nd.children[0]);
        r |= eval(nd.children[1]);
        return r;
      }
      case Kind::And: {
        StateSet r = eval(nd.children[0]);
        r &= eval(nd.children[1]);
        return r;
      }
      case Kind::Diamond:
      case Kind::Box: {
        const StateSet inner = eval(nd.children[0]);
        const bool dia = nd.kind == Kind::Diamond;
        StateSet r(n);
        for (StateId w = 0; w < n; ++w) {
          bool ok = !dia;
          for (StateId v : m_.successors(w)) {
            if (inner.contains(v) == dia) {
              ok = dia;
              break;
            }
          }
          if (ok) r.insert(w);
        }
        return r;
      }
      case Kind::Mu:
      case Kind::Nu:
        return steps_ ? iterate(id, *steps_) : fixpoint(id);
    }
    throw std::logic_error("unreachable");
  }

  // F(A) for the operator of binder `id`.
  StateSet apply(NodeId id, const StateSet& a) {
    const Node& nd = s_.node(id);
    env_.emplace_back(nd.name, a);
    StateSet r = eval(nd.children[0]);
    env_.pop_back();
    return r;
  }

  StateSet start(NodeId id) const {
    return s_.node(id).kind == Kind::Mu ? StateSet(m_.card()) : StateSet::full(m_.card());
  }

  StateSet iterate(NodeId id, unsigned k) {
    StateSet cur = start(id);
    for (unsigned i = 0; i < k; ++i) {
      StateSet next = apply(id, cur);
      if (next == cur) break;
      cur = std::move(next);
    }
    return cur;
  }

 private:
  StateSet fixpoint(NodeId id) {
    StateSet cur = start(id);
    for (;;) {
      StateSet next = apply(id, cur);
      if (next == cur) return cur;
      cur = std::move(next);
    }
  }

  const KripkeModel& m_;
  const Sentence& s_;
  std::optional<unsigned> steps_;
  std::vector<std::pair<std::string, StateSet>> env_;
};

}  // namespace

StateSet eval_standard(const KripkeModel& m, const Sentence& s, NodeId node, const Assignment& a) {
  return Evaluator(m, s, std::nullopt, a).eval(node);
}

StateSet approximant(const KripkeModel& m, const Sentence& s, NodeId binder, Bound bound,
                     unsigned gamma, const Assignment& a) {
  if (!is_binder(s.node(binder).kind)) throw std::invalid_argument("approximant requires a mu/nu node");
  return Evaluator(m, s, bound.effective(m), a).iterate(binder, gamma);
}

StateSet eval_bounded(const KripkeModel& m, const Sentence& s, NodeId node, Bound bound,
                      const Assignment& a) {
  return Evaluator(m, s, bound.effective(m), a).eval(node);
}

}  // namespace boundmu
