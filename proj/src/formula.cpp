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

#include "boundmu/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace boundmu {

namespace build {
Term prop(std::string p) { return Term{Kind::Prop, std::move(p), {}}; }
Term neg(std::string p) { return Term{Kind::NegProp, std::move(p), {}}; }
Term label(std::string x) { return Term{Kind::Label, std::move(x), {}}; }
Term lor(Term l, Term r) { return Term{Kind::Or, {}, {std::move(l), std::move(r)}}; }
Term land(Term l, Term r) { return Term{Kind::And, {}, {std::move(l), std::move(r)}}; }
Term diamond(Term t) { return Term{Kind::Diamond, {}, {std::move(t)}}; }
Term box(Term t) { return Term{Kind::Box, {}, {std::move(t)}}; }
Term mu(std::string x, Term body) { return Term{Kind::Mu, std::move(x), {std::move(body)}}; }
Term nu(std::string x, Term body) { return Term{Kind::Nu, std::move(x), {std::move(body)}}; }
}  // namespace build

// --- Sentence ---------------------------------------------------------------

namespace {

void flatten(const Term& t, std::optional<NodeId> parent, std::vector<Node>& out) {
  if (t.children.size() != arity(t.kind)) {
    throw std::invalid_argument("malformed term: wrong number of children");
  }
  if ((is_leaf(t.kind) || is_binder(t.kind)) && t.name.empty()) {
    throw std::invalid_argument("malformed term: missing name");
  }
  const auto id = static_cast<NodeId>(out.size());
  out.push_back(Node{t.kind, t.name, {}, parent});
  for (const Term& c : t.children) {
    const auto child = static_cast<NodeId>(out.size());
    out[id].children.push_back(child);
    flatten(c, id, out);
  }
}

}  // namespace

Sentence::Sentence(const Term& t) { flatten(t, std::nullopt, nodes_); }

Term Sentence::term(NodeId n) const {
  const Node& nd = node(n);
  Term t{nd.kind, nd.name, {}};
  t.children.reserve(nd.children.size());
  for (NodeId c : nd.children) t.children.push_back(term(c));
  return t;
}

std::vector<std::string> Sentence::free_labels() const {
  std::set<std::string> out;
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].kind != Kind::Label) continue;
    bool bound = false;
    for (auto p = nodes_[n].parent; p && !bound; p = nodes_[*p].parent) {
      bound = is_binder(nodes_[*p].kind) && nodes_[*p].name == nodes_[n].name;
    }
    if (!bound) out.insert(nodes_[n].name);
  }
  return {out.begin(), out.end()};
}

std::string Sentence::path(NodeId n) const {
  std::vector<std::size_t> steps;
  for (NodeId cur = n; nodes_.at(cur).parent;) {
    const NodeId p = *nodes_[cur].parent;
    const auto& siblings = nodes_[p].children;
    steps.push_back(static_cast<std::size_t>(
        std::find(siblings.begin(), siblings.end(), cur) - siblings.begin()));
    cur = p;
  }
  std::string out = "r";
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out += "." + std::to_string(*it);
  return out;
}

FormulaError::FormulaError(Code code, std::size_t position, const std::string& what)
    : std::runtime_error(what), code_(code), position_(position) {}

// --- parser -----------------------------------------------------------------

namespace {

enum class Tok { Mu, Nu, Diamond, Box, Or, And, Not, Dot, LParen, RParen, Prop, Label, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = [&](char a, char b) { return c == a && i + 1 < s.size() && s[i + 1] == b; };
    if (two('<', '>')) {
      out.push_back({Tok::Diamond, "<>", start});
      i += 2;
    } else if (two('[', ']')) {
      out.push_back({Tok::Box, "[]", start});
      i += 2;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", i++});
    } else if (c == '&') {
      out.push_back({Tok::And, "&", i++});
    } else if (c == '!') {
      out.push_back({Tok::Not, "!", i++});
    } else if (c == '.') {
      out.push_back({Tok::Dot, ".", i++});
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "mu") {
        out.push_back({Tok::Mu, word, start});
      } else if (word == "nu") {
        out.push_back({Tok::Nu, word, start});
      } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
        out.push_back({Tok::Label, word, start});
      } else {
        out.push_back({Tok::Prop, word, start});
      }
    } else {
      throw FormulaError(FormulaError::Code::Lex, start,
                         "unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(start));
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, ParseOptions opts) : toks_(std::move(toks)), opts_(opts) {}

  Term sentence() {
    Term t = expr();
    if (peek().kind != Tok::End) fail("expected end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw FormulaError(FormulaError::Code::Syntax, t.pos,
                       msg + ", found " + found + " at offset " + std::to_string(t.pos));
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }

  Term expr() {
    if (peek().kind == Tok::Mu || peek().kind == Tok::Nu) return binder();
    return disj();
  }

  Term binder() {
    const bool is_mu = next().kind == Tok::Mu;
    std::string x = expect(Tok::Label, "label after binder").text;
    expect(Tok::Dot, "'.'");
    scope_.push_back(x);
    Term body = expr();
    scope_.pop_back();
    return is_mu ? build::mu(std::move(x), std::move(body)) : build::nu(std::move(x), std::move(body));
  }

  Term disj() {
    Term t = conj();
    while (peek().kind == Tok::Or) {
      next();
      t = build::lor(std::move(t), conj());
    }
    return t;
  }

  Term conj() {
    Term t = unary();
    while (peek().kind == Tok::And) {
      next();
      t = build::land(std::move(t), unary());
    }
    return t;
  }

  Term unary() {
    switch (peek().kind) {
      case Tok::Diamond:
        next();
        return build::diamond(unary());
      case Tok::Box:
        next();
        return build::box(unary());
      case Tok::Not:
        next();
        return build::neg(expect(Tok::Prop, "proposition after '!'").text);
      case Tok::Prop:
        return build::prop(next().text);
      case Tok::Label: {
        const Token& t = next();
        if (!opts_.allow_open && std::find(scope_.begin(), scope_.end(), t.text) == scope_.end()) {
          throw FormulaError(FormulaError::Code::FreeLabel, t.pos,
                             "free label '" + t.text + "' at offset " + std::to_string(t.pos));
        }
        return build::label(t.text);
      }
      case Tok::LParen: {
        next();
        Term t = expr();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Mu:
      case Tok::Nu:
        return binder();
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> toks_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Sentence parse(std::string_view text, ParseOptions opts) {
  Parser p(lex(text), opts);
  return Sentence(p.sentence());
}

// --- rendering --------------------------------------------------------------

namespace {

void render_into(const Term& t, std::string& out);

void wrapped(const Term& t, std::string& out) {
  if (is_leaf(t.kind)) {
    render_into(t, out);
    return;
  }
  out += '(';
  render_into(t, out);
  out += ')';
}

void render_into(const Term& t, std::string& out) {
  switch (t.kind) {
    case Kind::Prop:
    case Kind::Label:
      out += t.name;
      break;
    case Kind::NegProp:
      out += '!';
      out += t.name;
      break;
    case Kind::Or:
    case Kind::And:
      wrapped(t.children[0], out);
      out += t.kind == Kind::Or ? " | " : " & ";
      wrapped(t.children[1], out);
      break;
    case Kind::Diamond:
    case Kind::Box:
      out += t.kind == Kind::Diamond ? "<> " : "[] ";
      wrapped(t.children[0], out);
      break;
    case Kind::Mu:
    case Kind::Nu:
      out += t.kind == Kind::Mu ? "mu " : "nu ";
      out += t.name;
      out += ". ";
      wrapped(t.children[0], out);
      break;
  }
}

}  // namespace

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::string render(const Sentence& s, NodeId n) { return render(s.term(n)); }

// --- transformations --------------------------------------------------------

bool is_normal(const Sentence& s) {
  std::set<std::string> seen;
  for (const Node& n : s.nodes()) {
    if (is_binder(n.kind) && !seen.insert(n.name).second) return false;
  }
  return true;
}

Sentence normalize(const Sentence& s) {
  std::set<std::string> taken;
  for (const Node& n : s.nodes()) taken.insert(n.name);
  std::set<std::string> used;
  std::map<std::string, std::vector<std::string>> env;

  std::function<Term(const Term&)> go = [&](const Term& t) -> Term {
    if (t.kind == Kind::Label) {
      auto it = env.find(t.name);
      if (it == env.end() || it->second.empty()) return t;
      return build::label(it->second.back());
    }
    if (!is_binder(t.kind)) {
      Term out{t.kind, t.name, {}};
      for (const Term& c : t.children) out.children.push_back(go(c));
      return out;
    }
    std::string fresh = t.name;
    if (used.count(fresh)) {
      for (unsigned k = 1;; ++k) {
        fresh = t.name + std::to_string(k);
        if (!taken.count(fresh) && !used.count(fresh)) break;
      }
      taken.insert(fresh);
    }
    used.insert(fresh);
    env[t.name].push_back(fresh);
    Term body = go(t.children[0]);
    env[t.name].pop_back();
    return Term{t.kind, fresh, {std::move(body)}};
  };
  return Sentence(go(s.term()));
}

namespace {

Term dual_term(const Term& t) {
  Term out{t.kind, t.name, {}};
  switch (t.kind) {
    case Kind::Prop: out.kind = Kind::NegProp; break;
    case Kind::NegProp: out.kind = Kind::Prop; break;
    case Kind::Label: break;
    case Kind::Or: out.kind = Kind::And; break;
    case Kind::And: out.kind = Kind::Or; break;
    case Kind::Diamond: out.kind = Kind::Box; break;
    case Kind::Box: out.kind = Kind::Diamond; break;
    case Kind::Mu: out.kind = Kind::Nu; break;
    case Kind::Nu: out.kind = Kind::Mu; break;
  }
  for (const Term& c : t.children) out.children.push_back(dual_term(c));
  return out;
}

}  // namespace

Sentence dual(const Sentence& s) { return Sentence(dual_term(s.term())); }

// --- index ------------------------------------------------------------------

NodeId SyntaxIndex::reference(NodeId label) const {
  const auto& r = rf.at(label);
  if (!r) throw std::invalid_argument("node " + std::to_string(label) + " is not a label");
  return *r;
}

SyntaxIndex build_index(const Sentence& s) {
  const std::size_t n = s.size();
  SyntaxIndex ix;
  ix.size = n;
  ix.rf.assign(n, std::nullopt);
  ix.active_ancestors.assign(n, {});
  ix.binder_slot.assign(n, std::nullopt);
  ix.inner_binders.assign(n, {});

  // Pre-order ids: a parent always precedes its children.
  for (NodeId id = 0; id < n; ++id) {
    const Node& nd = s.node(id);
    if (nd.parent) {
      const NodeId p = *nd.parent;
      ix.active_ancestors[id] = ix.active_ancestors[p];
      if (is_binder(s.node(p).kind)) ix.active_ancestors[id].push_back(p);
    }
    if (is_binder(nd.kind)) {
      ix.binder_slot[id] = static_cast<std::uint32_t>(ix.mu_nu_nodes.size());
      ix.mu_nu_nodes.push_back(id);
      for (NodeId a : ix.active_ancestors[id]) ix.inner_binders[a].push_back(id);
    }
    if (nd.kind == Kind::Label) {
      const auto& anc = ix.active_ancestors[id];
      auto it = std::find_if(anc.rbegin(), anc.rend(),
                             [&](NodeId b) { return s.node(b).name == nd.name; });
      if (it == anc.rend()) {
        throw FormulaError(FormulaError::Code::FreeLabel, 0, "free label '" + nd.name + "'");
      }
      ix.rf[id] = *it;
    }
  }
  return ix;
}

}  // namespace boundmu
