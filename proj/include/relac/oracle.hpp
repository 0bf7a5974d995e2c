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

// Reference decision procedure for G,u,v |= pc: compile the condition into
// an NFA over edge conditions and search the product of graph and automaton.
// It shares no traversal code with the matcher and is meant for testing, not
// for production-sized graphs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relac/graph.hpp"
#include "relac/path_condition.hpp"

namespace relac {

struct NfaTransition {
  std::size_t from = 0;
  std::optional<EdgeCondition> condition;  // nullopt is epsilon
  std::size_t to = 0;
};

struct PathNfa {
  std::size_t state_count = 0;
  std::size_t start = 0;
  std::size_t accept = 0;
  std::vector<NfaTransition> transitions;

  // Whether the automaton accepts exactly this sequence of edge conditions.
  bool accepts(const std::vector<EdgeCondition>& word) const;
};

// Thompson-style construction. Reversal is compiled directly (reading the
// operand backwards with flipped edge conditions), so the input need not be
// simple. Star is supported for residual checks.
PathNfa compile_nfa(const PathCondition& pc);

// Adjacency matrices for one graph snapshot, read through has_edge.
class OracleGraph {
 public:
  explicit OracleGraph(const SystemGraph& graph);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  // Nodes v with G,source,v |= the automaton's language.
  std::vector<bool> reachable(std::size_t source, const PathNfa& nfa) const;
  bool satisfies(std::size_t u, std::size_t v, const PathNfa& nfa) const { return reachable(u, nfa)[v]; }

 private:
  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  // adjacency_[label][from * n + to]
  std::vector<std::vector<bool>> adjacency_;
};

// Throws GraphError for unknown entity ids.
bool oracle_satisfies(const SystemGraph& graph, const std::string& u, const std::string& v,
                      const PathCondition& pc);

}  // namespace relac
