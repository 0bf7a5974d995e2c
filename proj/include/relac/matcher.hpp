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

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "relac/graph.hpp"
#include "relac/path_condition.hpp"
#include "relac/policy.hpp"

namespace relac {

struct MatchMetrics {
  // Distinct graph nodes taken off the queue.
  std::size_t nodes_visited = 0;
  // Edge-condition comparisons. A symmetric edge costs two (r and ~r).
  std::size_t edges_considered = 0;
  std::size_t queue_peak = 0;
  // Distinct (node, residual) pairs whose incident edges were scanned.
  std::size_t pairs_processed = 0;

  friend bool operator==(const MatchMetrics&, const MatchMetrics&) = default;
};

struct MatchResult {
  bool found = false;
  MatchMetrics metrics;
};

// Receives one call per trace event: the node, the residual condition (as
// debug_string) and what happened ("start", "dequeue", "unfold", "enqueue",
// "discard", "match").
using TraceSink = std::function<void(std::string_view node, std::string_view residual, std::string_view action)>;

// Decides G,u,v |= pc with a breadth-first search over (node, residual)
// pairs. Throws GraphError for unknown entity ids.
MatchResult match_path(const SystemGraph& graph, const std::string& u, const std::string& v,
                       const PathCondition& pc, const TraceSink& trace = {});

// |V| * (length + plus_count + 1): upper bound on pairs_processed.
std::size_t pair_bound(std::size_t node_count, const PathCondition& pc);

struct RuleMatchRecord {
  std::size_t index = 0;  // 0-based position in the policy
  std::string principal;
  bool evaluated = false;
  bool matched = false;
  MatchMetrics metrics;
};

struct PrincipalMatch {
  // Matched principals in rule order, without duplicates.
  std::vector<std::string> principals;
  std::vector<RuleMatchRecord> rules;
};

// Runs the principal-matching policy for (subject, object). Throws
// PolicyError if TOP is not last, GraphError for unknown entities.
PrincipalMatch match_principals(const SystemGraph& graph, const Request& request,
                                const std::vector<PrincipalRule>& policy, MatchingStrategy pms);

}  // namespace relac
