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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boundmu {

/// Dense identifier of a syntax-tree occurrence. Assigned in pre-order, so the
/// root is always 0 and every node precedes its descendants.
using NodeId = std::uint32_t;

enum class Kind : std::uint8_t { Prop, NegProp, Label, Or, And, Diamond, Box, Mu, Nu };

constexpr bool is_literal(Kind k) { return k == Kind::Prop || k == Kind::NegProp; }
constexpr bool is_binder(Kind k) { return k == Kind::Mu || k == Kind::Nu; }
constexpr bool is_leaf(Kind k) { return is_literal(k) || k == Kind::Label; }
constexpr std::size_t arity(Kind k) {
  return is_leaf(k) ? 0 : (k == Kind::Or || k == Kind::And) ? 2 : 1;
}

/// Value-semantics syntax tree. Used to build formulas programmatically; a
/// Sentence is the indexed, occurrence-identified form of a Term.
struct Term {
  Kind kind = Kind::Prop;
  std::string name;  // proposition or label name; empty for connectives
  std::vector<Term> children;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace build {
Term prop(std::string p);
Term neg(std::string p);
Term label(std::string x);
Term lor(Term l, Term r);
Term land(Term l, Term r);
Term diamond(Term t);
Term box(Term t);
Term mu(std::string x, Term body);
Term nu(std::string x, Term body);
}  // namespace build

struct Node {
  Kind kind;
  std::string name;
  std::vector<NodeId> children;
  std::optional<NodeId> parent;

  friend bool operator==(const Node&, const Node&) = default;
};

/// An occurrence-identified formula. Usually closed (a sentence); open
/// formulas only come out of parse() with ParseOptions::allow_open.
class Sentence {
 public:
  explicit Sentence(const Term& t);

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId n) const { return nodes_.at(n); }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Rebuilds the subtree rooted at n as a Term.
  Term term(NodeId n = 0) const;

  /// Names of labels that occur without an enclosing binder of the same name.
  std::vector<std::string> free_labels() const;
  bool is_closed() const { return free_labels().empty(); }

  /// Child-index path from the root, e.g. "r", "r.0", "r.0.1".
  std::string path(NodeId n) const;

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  std::vector<Node> nodes_;
};

class FormulaError : public std::runtime_error {
 public:
  enum class Code { Lex, Syntax, FreeLabel };
  FormulaError(Code code, std::size_t position, const std::string& what);
  Code code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  Code code_;
  std::size_t position_;
};

struct ParseOptions {
  bool allow_open = false;
};

Sentence parse(std::string_view text, ParseOptions opts = {});

/// Canonical fully-parenthesized rendering: atoms bare, every non-atomic
/// operand wrapped in parentheses, the outermost formula unwrapped.
std::string render(const Sentence& s, NodeId n = 0);
std::string render(const Term& t);

/// True iff binder label names are pairwise distinct.
bool is_normal(const Sentence& s);

/// Renames binders so their labels are pairwise distinct. The first binder
/// (pre-order) with a given name keeps it; later ones get NAME1, NAME2, ...
/// fresh with respect to every name in the formula.
Sentence normalize(const Sentence& s);

/// De Morgan / fixed-point dual: p <-> !p, | <-> &, <> <-> [], mu <-> nu.
/// Tree shape (and therefore every NodeId) is preserved.
Sentence dual(const Sentence& s);

struct SyntaxIndex {
  /// Reference formula of each Label node; nullopt for other nodes.
  std::vector<std::optional<NodeId>> rf;
  /// All Mu/Nu nodes in pre-order.
  std::vector<NodeId> mu_nu_nodes;
  /// Strict Mu/Nu ancestors of each node, root to node.
  std::vector<std::vector<NodeId>> active_ancestors;
  /// Position of each binder in mu_nu_nodes; nullopt for other nodes.
  std::vector<std::optional<std::uint32_t>> binder_slot;
  /// Binders strictly below each binder (its body's mu/nu subformulae).
  std::vector<std::vector<NodeId>> inner_binders;
  std::size_t size = 0;

  NodeId reference(NodeId label) const;
};

/// Resolves every label occurrence to its binder. Throws FormulaError
/// (FreeLabel) on open formulas.
SyntaxIndex build_index(const Sentence& s);

}  // namespace boundmu
