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

#include <stdexcept>
#include <string>

#include "boundmu/formula.hpp"
#include "boundmu/kripke.hpp"

namespace boundmu {

/// Clock value bound Gamma: a positive natural number or omega.
class Bound {
 public:
  static Bound finite(unsigned n);
  static Bound omega() { return Bound(0, true); }

  bool is_omega() const { return omega_; }
  unsigned value() const;

  /// The finite bound used on model m: omega collapses to max(1, card(m)).
  unsigned effective(const KripkeModel& m) const;

  std::string to_string() const;
  /// Parses "N" (N >= 1) or "omega".
  static Bound parse(std::string_view text);

  friend bool operator==(const Bound&, const Bound&) = default;

 private:
  Bound(unsigned n, bool omega) : n_(n), omega_(omega) {}
  unsigned n_;
  bool omega_;
};

class UnboundLabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard semantics: {w | M,w |=_s subformula at node}. Fixed points by
/// Kleene iteration from the empty set (mu) or all states (nu) until stable.
StateSet eval_standard(const KripkeModel& m, const Sentence& s, NodeId node = 0,
                       const Assignment& assignment = {});

/// The gamma-th approximant of the operator of a binder under the
/// Gamma-bounded semantics: F^0 is empty (mu) or W (nu), F^(k+1) = F(F^k).
StateSet approximant(const KripkeModel& m, const Sentence& s, NodeId binder, Bound bound,
                     unsigned gamma, const Assignment& assignment = {});

/// Gamma-bounded compositional semantics: binders evaluate to F^Gamma.
StateSet eval_bounded(const KripkeModel& m, const Sentence& s, NodeId node, Bound bound,
                      const Assignment& assignment = {});

}  // namespace boundmu
