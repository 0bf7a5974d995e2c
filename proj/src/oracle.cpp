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

#include "relac/oracle.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace relac {

namespace {

struct Fragment {
  std::size_t entry;
  std::size_t exit;
};

class NfaBuilder {
 public:
  PathNfa build(const PathCondition& pc) {
    Fragment f = compile(pc, false);
    nfa_.start = f.entry;
    nfa_.accept = f.exit;
    return std::move(nfa_);
  }

 private:
  std::size_t state() { return nfa_.state_count++; }

  void link(std::size_t from, std::size_t to, std::optional<EdgeCondition> ec = std::nullopt) {
    nfa_.transitions.push_back(NfaTransition{from, std::move(ec), to});
  }

  // `flip` is set while compiling under an odd number of reversals: the
  // operand is read back to front and each edge condition is inverted.
  Fragment compile(const PathCondition& pc, bool flip) {
    switch (pc.kind()) {
      case PathKind::Diamond: {
        Fragment f{state(), state()};
        link(f.entry, f.exit);
        return f;
      }
      case PathKind::Edge: {
        Fragment f{state(), state()};
        link(f.entry, f.exit, EdgeCondition{pc.label(), pc.reversed() != flip});
        return f;
      }
      case PathKind::Concat: {
        const PathCondition& first = flip ? pc.right() : pc.left();
        const PathCondition& second = flip ? pc.left() : pc.right();
        Fragment a = compile(first, flip);
        Fragment b = compile(second, flip);
        link(a.exit, b.entry);
        return Fragment{a.entry, b.exit};
      }
      case PathKind::Reverse:
        return compile(pc.inner(), !flip);
      case PathKind::Plus:
      case PathKind::Star: {
        Fragment f{state(), state()};
        Fragment body = compile(pc.inner(), flip);
        link(f.entry, body.entry);
        link(body.exit, f.exit);
        link(f.exit, f.entry);
        if (pc.kind() == PathKind::Star) link(f.entry, f.exit);
        return f;
      }
    }
    return Fragment{0, 0};
  }

  PathNfa nfa_;
};

std::vector<std::vector<std::size_t>> outgoing(const PathNfa& nfa) {
  std::vector<std::vector<std::size_t>> out(nfa.state_count);
  for (std::size_t i = 0; i < nfa.transitions.size(); ++i) out[nfa.transitions[i].from].push_back(i);
  return out;
}

}  // namespace

PathNfa compile_nfa(const PathCondition& pc) { return NfaBuilder().build(pc); }

bool PathNfa::accepts(const std::vector<EdgeCondition>& word) const {
  auto out = outgoing(*this);
  auto closure = [&](std::vector<bool> current) {
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < state_count; ++s)
      if (current[s]) stack.push_back(s);
    while (!stack.empty()) {
      std::size_t s = stack.back();
      stack.pop_back();
      for (std::size_t t : out[s]) {
        const auto& tr = transitions[t];
        if (!tr.condition && !current[tr.to]) {
          current[tr.to] = true;
          stack.push_back(tr.to);
        }
      }
    }
    return current;
  };
  std::vector<bool> current(state_count, false);
  current[start] = true;
  current = closure(std::move(current));
  for (const auto& symbol : word) {
    std::vector<bool> next(state_count, false);
    for (std::size_t s = 0; s < state_count; ++s) {
      if (!current[s]) continue;
      for (std::size_t t : out[s]) {
        const auto& tr = transitions[t];
        if (tr.condition && *tr.condition == symbol) next[tr.to] = true;
      }
    }
    current = closure(std::move(next));
  }
  return current[accept];
}

OracleGraph::OracleGraph(const SystemGraph& graph) {
  for (const auto& [id, type] : graph.entities()) ids_.push_back(id);
  labels_.assign(graph.model().labels.begin(), graph.model().labels.end());
  const std::size_t n = ids_.size();
  adjacency_.assign(labels_.size(), std::vector<bool>(n * n, false));
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) adjacency_[l][i * n + j] = graph.has_edge(ids_[i], ids_[j], labels_[l]);
    }
  }
}

std::optional<std::size_t> OracleGraph::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<bool> OracleGraph::reachable(std::size_t source, const PathNfa& nfa) const {
  const std::size_t n = ids_.size();
  const std::size_t q = nfa.state_count;
  auto out = outgoing(nfa);

  // Label index and orientation per transition; npos marks epsilon, and
  // labels outside the model never relate anything.
  constexpr std::size_t kEpsilon = static_cast<std::size_t>(-1);
  constexpr std::size_t kNever = static_cast<std::size_t>(-2);
  std::vector<std::size_t> label_of(nfa.transitions.size(), kEpsilon);
  for (std::size_t t = 0; t < nfa.transitions.size(); ++t) {
    const auto& cond = nfa.transitions[t].condition;
    if (!cond) continue;
    auto it = std::lower_bound(labels_.begin(), labels_.end(), cond->label);
    label_of[t] = (it != labels_.end() && *it == cond->label) ? static_cast<std::size_t>(it - labels_.begin())
                                                              : kNever;
  }

  std::vector<bool> visited(n * q, false);
  std::deque<std::pair<std::size_t, std::size_t>> frontier;
  visited[source * q + nfa.start] = true;
  frontier.emplace_back(source, nfa.start);
  while (!frontier.empty()) {
    auto [node, s] = frontier.front();
    frontier.pop_front();
    for (std::size_t t : out[s]) {
      const auto& tr = nfa.transitions[t];
      auto visit = [&](std::size_t m) {
        if (!visited[m * q + tr.to]) {
          visited[m * q + tr.to] = true;
          frontier.emplace_back(m, tr.to);
        }
      };
      if (label_of[t] == kEpsilon) {
        visit(node);
        continue;
      }
      if (label_of[t] == kNever) continue;
      const auto& adj = adjacency_[label_of[t]];
      for (std::size_t m = 0; m < n; ++m) {
        bool step = tr.condition->reversed ? adj[m * n + node] : adj[node * n + m];
        if (step) visit(m);
      }
    }
  }
  std::vector<bool> result(n, false);
  for (std::size_t m = 0; m < n; ++m) result[m] = visited[m * q + nfa.accept];
  return result;
}

bool oracle_satisfies(const SystemGraph& graph, const std::string& u, const std::string& v,
                      const PathCondition& pc) {
  if (!graph.contains(u)) throw GraphError("unknown entity '" + u + "'");
  if (!graph.contains(v)) throw GraphError("unknown entity '" + v + "'");
  OracleGraph og(graph);
  return og.satisfies(*og.index_of(u), *og.index_of(v), compile_nfa(pc));
}

}  // namespace relac
