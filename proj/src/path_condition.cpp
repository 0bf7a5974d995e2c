// Copyright 2026 The Relac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relac/path_condition.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace relac {

struct PathCondition::Node {
  PathKind kind = PathKind::Diamond;
  std::string label;
  bool reversed = false;
  PathCondition first;
  PathCondition second;
};

PathCondition::PathCondition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

PathCondition::PathCondition() {
  // One shared node for every diamond; its children stay null.
  static const std::shared_ptr<const Node> kDiamond = [] {
    auto n = std::shared_ptr<Node>(new Node{PathKind::Diamond, {}, false, PathCondition(nullptr),
                                            PathCondition(nullptr)});
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = kDiamond;
}

PathCondition PathCondition::diamond() { return PathCondition(); }

PathCondition PathCondition::edge(std::string label, bool reversed) {
  return PathCondition(std::make_shared<const Node>(
      Node{PathKind::Edge, std::move(label), reversed, PathCondition(nullptr), PathCondition(nullptr)}));
}

PathCondition PathCondition::edge(const EdgeCondition& ec) { return edge(ec.label, ec.reversed); }

PathCondition PathCondition::concat(PathCondition left, PathCondition right) {
  return PathCondition(std::make_shared<const Node>(
      Node{PathKind::Concat, {}, false, std::move(left), std::move(right)}));
}

PathCondition PathCondition::plus(PathCondition inner) {
  return PathCondition(std::make_shared<const Node>(
      Node{PathKind::Plus, {}, false, std::move(inner), PathCondition(nullptr)}));
}

PathCondition PathCondition::star(PathCondition inner) {
  return PathCondition(std::make_shared<const Node>(
      Node{PathKind::Star, {}, false, std::move(inner), PathCondition(nullptr)}));
}

PathCondition PathCondition::reverse(PathCondition inner) {
  return PathCondition(std::make_shared<const Node>(
      Node{PathKind::Reverse, {}, false, std::move(inner), PathCondition(nullptr)}));
}

PathKind PathCondition::kind() const { return node_->kind; }

const std::string& PathCondition::label() const {
  if (kind() != PathKind::Edge) throw std::logic_error("label() on a non-edge path condition");
  return node_->label;
}

bool PathCondition::reversed() const {
  if (kind() != PathKind::Edge) throw std::logic_error("reversed() on a non-edge path condition");
  return node_->reversed;
}

EdgeCondition PathCondition::edge_condition() const { return EdgeCondition{label(), reversed()}; }

const PathCondition& PathCondition::left() const {
  if (kind() != PathKind::Concat) throw std::logic_error("left() on a non-concatenation");
  return node_->first;
}

const PathCondition& PathCondition::right() const {
  if (kind() != PathKind::Concat) throw std::logic_error("right() on a non-concatenation");
  return node_->second;
}

const PathCondition& PathCondition::inner() const {
  switch (kind()) {
    case PathKind::Plus:
    case PathKind::Star:
    case PathKind::Reverse:
      return node_->first;
    default:
      throw std::logic_error("inner() on a path condition without a single child");
  }
}

bool operator==(const PathCondition& a, const PathCondition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PathKind::Diamond:
      return true;
    case PathKind::Edge:
      return a.node_->label == b.node_->label && a.node_->reversed == b.node_->reversed;
    case PathKind::Concat:
      return a.left() == b.left() && a.right() == b.right();
    case PathKind::Plus:
    case PathKind::Star:
    case PathKind::Reverse:
      return a.inner() == b.inner();
  }
  return false;
}

PathError::PathError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message), kind_(kind), position_(position) {}

// ── Parsing ──────────────────────────────────────────────────────────────────

namespace {

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '-';
}

class Parser {
 public:
  Parser(std::string_view text, const LabelVocabulary* vocabulary)
      : text_(text), vocabulary_(vocabulary) {}

  PathCondition run() {
    skip_ws();
    if (pos_ >= text_.size()) fail(PathError::Kind::Syntax, "empty path condition");
    PathCondition pc = parse_seq();
    skip_ws();
    if (pos_ < text_.size()) {
      if (text_[pos_] == '*') star_rejected();
      fail(PathError::Kind::Syntax, std::string("unexpected '") + text_[pos_] + "'");
    }
    return pc;
  }

 private:
  [[noreturn]] void fail(PathError::Kind kind, const std::string& what) const {
    throw PathError(kind, pos_, what + " at position " + std::to_string(pos_));
  }

  [[noreturn]] void star_rejected() const {
    fail(PathError::Kind::StarRejected,
         "'*' is not part of the policy language; write p* as two rules (p+ and @)");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PathCondition parse_seq() {
    std::vector<PathCondition> parts;
    parts.push_back(parse_unary());
    while (accept('.')) parts.push_back(parse_unary());
    PathCondition out = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) out = PathCondition::concat(*it, out);
    return out;
  }

  PathCondition parse_unary() {
    PathCondition pc = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') star_rejected();
      if (!accept('+')) break;
      pc = PathCondition::plus(std::move(pc));
    }
    return pc;
  }

  PathCondition parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail(PathError::Kind::Syntax, "unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return PathCondition::reverse(parse_atom());
    }
    if (c == '@') {
      ++pos_;
      return PathCondition::diamond();
    }
    if (c == '(') {
      ++pos_;
      PathCondition pc = parse_seq();
      if (!accept(')')) fail(PathError::Kind::Syntax, "expected ')'");
      return pc;
    }
    if (c == '*') star_rejected();
    if (!is_label_start(c)) fail(PathError::Kind::Syntax, std::string("unexpected '") + c + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    std::string token(text_.substr(start, pos_ - start));
    return PathCondition::edge(resolve(token, start));
  }

  std::string resolve(const std::string& token, std::size_t at) const {
    if (vocabulary_ == nullptr || vocabulary_->labels.count(token) > 0) return token;
    if (auto it = vocabulary_->aliases.find(token); it != vocabulary_->aliases.end()) return it->second;
    throw PathError(PathError::Kind::UnknownLabel, at,
                    "unknown relationship label '" + token + "' at position " + std::to_string(at));
  }

  std::string_view text_;
  const LabelVocabulary* vocabulary_;
  std::size_t pos_ = 0;
};

}  // namespace

PathCondition parse(std::string_view text, const LabelVocabulary& vocabulary) {
  return Parser(text, &vocabulary).run();
}

PathCondition parse(std::string_view text, const std::set<std::string>& labels) {
  LabelVocabulary vocabulary{labels, {}};
  return Parser(text, &vocabulary).run();
}

PathCondition parse_any(std::string_view text) { return Parser(text, nullptr).run(); }

// ── Rendering ────────────────────────────────────────────────────────────────

namespace {

class Renderer {
 public:
  explicit Renderer(bool allow_star) : allow_star_(allow_star) {}

  std::string seq(const PathCondition& pc) const {
    if (pc.kind() != PathKind::Concat) return unary(pc);
    const PathCondition& l = pc.left();
    std::string lhs = l.kind() == PathKind::Concat ? "(" + seq(l) + ")" : unary(l);
    return lhs + " . " + seq(pc.right());
  }

 private:
  std::string unary(const PathCondition& pc) const {
    switch (pc.kind()) {
      case PathKind::Plus:
        return repeat_operand(pc.inner()) + "+";
      case PathKind::Star:
        if (!allow_star_)
          throw PathError(PathError::Kind::StarRejected, 0, "cannot render a Star path condition");
        return "(" + seq(pc.inner()) + ")*";
      default:
        return atom(pc);
    }
  }

  std::string repeat_operand(const PathCondition& pc) const {
    switch (pc.kind()) {
      case PathKind::Diamond:
        return "@";
      case PathKind::Edge:
        if (!pc.reversed()) return pc.label();
        break;
      case PathKind::Plus:
        return unary(pc);
      default:
        break;
    }
    return "(" + seq(pc) + ")";
  }

  std::string atom(const PathCondition& pc) const {
    switch (pc.kind()) {
      case PathKind::Diamond:
        return "@";
      case PathKind::Edge:
        return pc.reversed() ? "~" + pc.label() : pc.label();
      case PathKind::Reverse:
        return "~" + reverse_operand(pc.inner());
      default:
        return "(" + seq(pc) + ")";
    }
  }

  std::string reverse_operand(const PathCondition& pc) const {
    switch (pc.kind()) {
      case PathKind::Diamond:
      case PathKind::Edge:
      case PathKind::Reverse:
        return atom(pc);
      default:
        return "(" + seq(pc) + ")";
    }
  }

  bool allow_star_;
};

}  // namespace

std::string render(const PathCondition& pc) { return Renderer(false).seq(pc); }

std::string debug_string(const PathCondition& pc) { return Renderer(true).seq(pc); }

// ── Normalisation ────────────────────────────────────────────────────────────

namespace {

using Factors = std::vector<PathCondition>;

PathCondition build(const Factors& factors) {
  if (factors.empty()) return PathCondition::diamond();
  PathCondition out = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) out = PathCondition::concat(*it, out);
  return out;
}

// Flattens `pc` (read backwards when `flip` is set) into a list of
// non-concatenation factors, each already in simple form.
void collect(const PathCondition& pc, bool flip, Factors& out) {
  switch (pc.kind()) {
    case PathKind::Diamond:
      return;
    case PathKind::Edge:
      out.push_back(PathCondition::edge(pc.label(), pc.reversed() != flip));
      return;
    case PathKind::Concat:
      if (flip) {
        collect(pc.right(), flip, out);
        collect(pc.left(), flip, out);
      } else {
        collect(pc.left(), flip, out);
        collect(pc.right(), flip, out);
      }
      return;
    case PathKind::Reverse:
      collect(pc.inner(), !flip, out);
      return;
    case PathKind::Plus:
    case PathKind::Star: {
      Factors body;
      collect(pc.inner(), flip, body);
      if (body.empty()) return;
      PathCondition inner = build(body);
      out.push_back(pc.kind() == PathKind::Plus ? PathCondition::plus(inner) : PathCondition::star(inner));
      return;
    }
  }
}

}  // namespace

PathCondition simplify(const PathCondition& pc) {
  Factors factors;
  collect(pc, false, factors);
  return build(factors);
}

bool is_simple(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Diamond:
    case PathKind::Edge:
      return true;
    case PathKind::Reverse:
      return false;
    case PathKind::Concat: {
      const PathCondition& l = pc.left();
      const PathCondition& r = pc.right();
      if (l.kind() == PathKind::Concat || l.is_diamond() || r.is_diamond()) return false;
      return is_simple(l) && is_simple(r);
    }
    case PathKind::Plus:
    case PathKind::Star:
      return !pc.inner().is_diamond() && is_simple(pc.inner());
  }
  return false;
}

EdgeCondition head(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Edge:
      return pc.edge_condition();
    case PathKind::Concat:
      return head(pc.left());
    case PathKind::Plus:
      return head(pc.inner());
    case PathKind::Diamond:
      throw PathError(PathError::Kind::Undefined, 0, "the diamond has no head");
    case PathKind::Star:
      throw PathError(PathError::Kind::Undefined, 0, "a leading Star must be unfolded before taking its head");
    case PathKind::Reverse:
      throw PathError(PathError::Kind::Undefined, 0, "head requires a simple path condition");
  }
  return {};
}

PathCondition sequence(const PathCondition& first, const PathCondition& second) {
  if (first.is_diamond()) return second;
  if (second.is_diamond()) return first;
  if (first.kind() == PathKind::Concat)
    return PathCondition::concat(first.left(), sequence(first.right(), second));
  return PathCondition::concat(first, second);
}

PathCondition suffix(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Edge:
      return PathCondition::diamond();
    case PathKind::Concat:
      return sequence(suffix(pc.left()), pc.right());
    case PathKind::Plus:
      return sequence(suffix(pc.inner()), PathCondition::star(pc.inner()));
    case PathKind::Diamond:
      throw PathError(PathError::Kind::Undefined, 0, "the diamond has no suffix");
    case PathKind::Star:
      throw PathError(PathError::Kind::Undefined, 0, "a leading Star must be unfolded before taking its suffix");
    case PathKind::Reverse:
      throw PathError(PathError::Kind::Undefined, 0, "suffix requires a simple path condition");
  }
  return {};
}

std::size_t length(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Diamond:
      return 0;
    case PathKind::Edge:
      return 1;
    case PathKind::Concat:
      return length(pc.left()) + length(pc.right());
    case PathKind::Plus:
    case PathKind::Star:
    case PathKind::Reverse:
      return length(pc.inner());
  }
  return 0;
}

std::size_t plus_count(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Concat:
      return plus_count(pc.left()) + plus_count(pc.right());
    case PathKind::Plus:
      return 1 + plus_count(pc.inner());
    case PathKind::Star:
    case PathKind::Reverse:
      return plus_count(pc.inner());
    default:
      return 0;
  }
}

std::size_t node_count(const PathCondition& pc) {
  switch (pc.kind()) {
    case PathKind::Concat:
      return 1 + node_count(pc.left()) + node_count(pc.right());
    case PathKind::Plus:
    case PathKind::Star:
    case PathKind::Reverse:
      return 1 + node_count(pc.inner());
    default:
      return 1;
  }
}

bool canonical_equal(const PathCondition& a, const PathCondition& b) { return simplify(a) == simplify(b); }

std::string canonical_key(const PathCondition& pc) { return debug_string(simplify(pc)); }

bool starts_with_star(const PathCondition& pc) {
  if (pc.kind() == PathKind::Star) return true;
  return pc.kind() == PathKind::Concat && pc.left().kind() == PathKind::Star;
}

}  // namespace relac
