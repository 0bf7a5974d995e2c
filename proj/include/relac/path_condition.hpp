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

#pragma once

// Path conditions: regular-expression-like patterns over relationship labels.
//
//   @        the empty condition (source and target coincide)
//   r        one edge labelled r, traversed along its direction
//   ~p       p with source and target swapped
//   p . q    p followed by q
//   p+       one or more repetitions of p
//
// Star (zero or more) is never written by users. It only shows up in the
// residual conditions the matcher produces while consuming a Plus.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relac {

enum class PathKind : std::uint8_t { Diamond, Edge, Concat, Plus, Star, Reverse };

// An atomic condition matched against a single graph edge.
struct EdgeCondition {
  std::string label;
  bool reversed = false;

  friend bool operator==(const EdgeCondition&, const EdgeCondition&) = default;
};

// Immutable AST handle. Copies share structure, so values are cheap to pass
// around and safe to read from several threads.
class PathCondition {
 public:
  // Default-constructed conditions are the diamond.
  PathCondition();

  static PathCondition diamond();
  static PathCondition edge(std::string label, bool reversed = false);
  static PathCondition edge(const EdgeCondition& ec);
  static PathCondition concat(PathCondition left, PathCondition right);
  static PathCondition plus(PathCondition inner);
  static PathCondition star(PathCondition inner);
  static PathCondition reverse(PathCondition inner);

  PathKind kind() const;
  bool is_diamond() const { return kind() == PathKind::Diamond; }

  // Edge accessors; only meaningful when kind() == Edge.
  const std::string& label() const;
  bool reversed() const;
  EdgeCondition edge_condition() const;

  // Concat children.
  const PathCondition& left() const;
  const PathCondition& right() const;
  // Plus / Star / Reverse child.
  const PathCondition& inner() const;

  // Structural equality (no normalisation).
  friend bool operator==(const PathCondition& a, const PathCondition& b);

 private:
  struct Node;
  explicit PathCondition(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

class PathError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownLabel, StarRejected, Undefined };

  PathError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  // Byte offset into the parsed text (0 for errors not raised by the parser).
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// Label vocabulary used by the parser. Aliases map short spellings onto
// members of `labels`; a token is accepted if it is a label or an alias.
struct LabelVocabulary {
  std::set<std::string> labels;
  std::map<std::string, std::string> aliases;
};

// Parses `text` against the grammar
//   path  := seq
//   seq   := unary ("." unary)*
//   unary := atom ("+")*
//   atom  := LABEL | "~" atom | "(" seq ")" | "@"
// Aliased labels are replaced by the label they stand for.
PathCondition parse(std::string_view text, const LabelVocabulary& vocabulary);
PathCondition parse(std::string_view text, const std::set<std::string>& labels);
// Accepts any syntactically valid label.
PathCondition parse_any(std::string_view text);

// Surface syntax for a Star-free condition. Throws PathError(StarRejected)
// when a Star is present.
std::string render(const PathCondition& pc);
// Like render, but prints Star as `(p)*`. For traces and diagnostics only.
std::string debug_string(const PathCondition& pc);

// Rewrites into simple form: reversal pushed onto edge labels, diamonds
// removed (unless the whole condition is the diamond), concatenation
// right-associated. The result is equivalent to the input.
PathCondition simplify(const PathCondition& pc);
bool is_simple(const PathCondition& pc);

// Leading edge condition / residual of a simple, non-diamond condition whose
// first factor is not a Star. The suffix is returned in simple form.
EdgeCondition head(const PathCondition& pc);
PathCondition suffix(const PathCondition& pc);

// Concatenation of two simple conditions, returned in simple form.
PathCondition sequence(const PathCondition& first, const PathCondition& second);

// Number of edge conditions; the diamond has length 0.
std::size_t length(const PathCondition& pc);
// Number of Plus nodes.
std::size_t plus_count(const PathCondition& pc);
// Total number of AST nodes.
std::size_t node_count(const PathCondition& pc);

// Equality after simplification.
bool canonical_equal(const PathCondition& a, const PathCondition& b);
// Injective string key for a condition's simplified form.
std::string canonical_key(const PathCondition& pc);

// True if the condition is Star(x) or Star(x) . y.
bool starts_with_star(const PathCondition& pc);

}  // namespace relac
