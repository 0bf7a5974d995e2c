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

#include "relac/matcher.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace relac {

namespace {

// A queued (node, residual) pair. The residual is simple and never the
// diamond; it may begin with a Star.
struct WorkItem {
  std::string node;
  PathCondition residual;
  std::string key;
};

// Head and suffix of one residual, computed once per search.
struct Step {
  EdgeCondition head;
  PathCondition rest;
  std::string rest_key;
};

class Search {
 public:
  Search(const SystemGraph& graph, const std::string& target, const TraceSink& trace)
      : graph_(graph), target_(target), trace_(trace) {}

  MatchResult run(const std::string& source, const PathCondition& start) {
    std::string key = debug_string(start);
    emit(source, key, "start");
    mark(source, key);
    push(WorkItem{source, start, std::move(key)});

    while (!queue_.empty()) {
      WorkItem item = std::move(queue_.front());
      queue_.pop_front();
      visited_.insert(item.node);
      emit(item.node, item.key, "dequeue");
      if (expand(item)) return finish(true);
    }
    return finish(false);
  }

 private:
  // Unfolds leading Stars at `item.node`, then scans incident edges for each
  // resulting residual. Returns true on a match.
  bool expand(const WorkItem& item) {
    std::vector<std::pair<PathCondition, std::string>> pending{{item.residual, item.key}};
    std::vector<std::pair<PathCondition, std::string>> active;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const PathCondition current = pending[i].first;
      if (!starts_with_star(current)) {
        active.push_back(pending[i]);
        continue;
      }
      emit(item.node, pending[i].second, "unfold");
      const bool bare = current.kind() == PathKind::Star;
      const PathCondition& star = bare ? current : current.left();
      const PathCondition rest = bare ? PathCondition::diamond() : current.right();

      // Zero further repetitions.
      if (rest.is_diamond()) {
        if (item.node == target_) {
          emit(item.node, "@", "match");
          return true;
        }
      } else {
        std::string k = debug_string(rest);
        if (mark(item.node, k)) pending.emplace_back(rest, std::move(k));
      }
      // At least one more repetition.
      PathCondition again = sequence(PathCondition::plus(star.inner()), rest);
      std::string k = debug_string(again);
      if (mark(item.node, k)) pending.emplace_back(std::move(again), std::move(k));
    }

    const auto& edges = graph_.incident(item.node);
    for (const auto& [residual, key] : active) {
      ++metrics_.pairs_processed;
      const Step& step = step_for(residual, key);
      for (const auto& ie : edges) {
        bool hit = false;
        switch (ie.direction) {
          case Direction::Out:
            ++metrics_.edges_considered;
            hit = !step.head.reversed && step.head.label == ie.label;
            break;
          case Direction::In:
            ++metrics_.edges_considered;
            hit = step.head.reversed && step.head.label == ie.label;
            break;
          case Direction::Sym:
            metrics_.edges_considered += 2;
            hit = step.head.label == ie.label;
            break;
        }
        if (!hit) continue;
        if (step.rest.is_diamond()) {
          if (ie.neighbor == target_) {
            emit(ie.neighbor, "@", "match");
            return true;
          }
          emit(ie.neighbor, "@", "discard");
          continue;
        }
        if (mark(ie.neighbor, step.rest_key)) {
          emit(ie.neighbor, step.rest_key, "enqueue");
          push(WorkItem{ie.neighbor, step.rest, step.rest_key});
        }
      }
    }
    return false;
  }

  const Step& step_for(const PathCondition& residual, const std::string& key) {
    auto it = steps_.find(key);
    if (it != steps_.end()) return it->second;
    PathCondition rest = suffix(residual);
    std::string rest_key = rest.is_diamond() ? std::string("@") : debug_string(rest);
    return steps_.emplace(key, Step{head(residual), std::move(rest), std::move(rest_key)}).first->second;
  }

  bool mark(const std::string& node, const std::string& key) {
    std::string entry;
    entry.reserve(node.size() + key.size() + 1);
    entry.append(node).push_back('\x1f');
    entry.append(key);
    return seen_.insert(std::move(entry)).second;
  }

  void push(WorkItem item) {
    queue_.push_back(std::move(item));
    metrics_.queue_peak = std::max(metrics_.queue_peak, queue_.size());
  }

  void emit(std::string_view node, std::string_view residual, std::string_view action) const {
    if (trace_) trace_(node, residual, action);
  }

  MatchResult finish(bool found) {
    metrics_.nodes_visited = visited_.size();
    return MatchResult{found, metrics_};
  }

  const SystemGraph& graph_;
  const std::string& target_;
  const TraceSink& trace_;
  std::deque<WorkItem> queue_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> visited_;
  std::unordered_map<std::string, Step> steps_;
  MatchMetrics metrics_;
};

}  // namespace

MatchResult match_path(const SystemGraph& graph, const std::string& u, const std::string& v,
                       const PathCondition& pc, const TraceSink& trace) {
  if (!graph.contains(u)) throw GraphError("unknown entity '" + u + "'");
  if (!graph.contains(v)) throw GraphError("unknown entity '" + v + "'");
  PathCondition start = simplify(pc);
  if (start.is_diamond()) {
    if (trace) trace(u, "@", u == v ? "match" : "discard");
    return MatchResult{u == v, {}};
  }
  return Search(graph, v, trace).run(u, start);
}

std::size_t pair_bound(std::size_t node_count, const PathCondition& pc) {
  PathCondition s = simplify(pc);
  return node_count * (length(s) + plus_count(s) + 1);
}

PrincipalMatch match_principals(const SystemGraph& graph, const Request& request,
                                const std::vector<PrincipalRule>& policy, MatchingStrategy pms) {
  if (auto problems = validate_principal_rules(policy); !problems.empty()) throw PolicyError(problems.front());
  if (!graph.contains(request.subject)) throw GraphError("unknown subject '" + request.subject + "'");
  if (!graph.contains(request.object)) throw GraphError("unknown object '" + request.object + "'");

  PrincipalMatch out;
  bool any = false;
  for (std::size_t i = 0; i < policy.size(); ++i) {
    const PrincipalRule& rule = policy[i];
    RuleMatchRecord record;
    record.index = i;
    record.principal = rule.principal;
    if (pms == MatchingStrategy::FirstMatch && any) {
      out.rules.push_back(std::move(record));
      continue;
    }
    record.evaluated = true;
    if (rule.is_top()) {
      record.matched = true;
    } else {
      MatchResult r = match_path(graph, request.subject, request.object, *rule.condition);
      record.matched = r.found;
      record.metrics = r.metrics;
    }
    if (record.matched) {
      any = true;
      if (std::find(out.principals.begin(), out.principals.end(), rule.principal) == out.principals.end())
        out.principals.push_back(rule.principal);
    }
    out.rules.push_back(std::move(record));
  }
  return out;
}

}  // namespace relac
