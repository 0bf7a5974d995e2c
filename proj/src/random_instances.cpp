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

#include "relac/random_instances.hpp"

#include "relac/matcher.hpp"
#include "relac/oracle.hpp"

namespace relac {

namespace {

constexpr std::size_t kMaxFailures = 5;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

const std::vector<std::string>& model_labels() {
  static const std::vector<std::string> labels = {"a", "b", "c"};
  return labels;
}

// Right-nested sequence of factors with total length exactly `budget`.
PathCondition simple_of_length(Rng& rng, const std::vector<std::string>& labels, std::size_t budget) {
  std::vector<PathCondition> factors;
  while (budget > 0) {
    if (budget >= 1 && coin(rng, 0.25)) {
      std::size_t n = uniform(rng, 1, budget);
      factors.push_back(PathCondition::plus(simple_of_length(rng, labels, n)));
      budget -= n;
    } else {
      factors.push_back(PathCondition::edge(labels[uniform(rng, 0, labels.size() - 1)], coin(rng)));
      budget -= 1;
    }
  }
  PathCondition out = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) out = PathCondition::concat(factors[i], out);
  return out;
}

bool check_pair(const SystemGraph& g, const OracleGraph& og, const std::vector<bool>& truth, std::size_t u,
                std::size_t v, const PathCondition& pc, std::size_t bound, DifferentialReport& report) {
  const std::string& su = og.ids()[u];
  const std::string& sv = og.ids()[v];
  MatchResult r = match_path(g, su, sv, pc);
  ++report.pairs;
  bool clean = r.found == truth[v];
  if (clean) {
    ++report.agreements;
  } else if (report.failures.size() < kMaxFailures) {
    report.failures.push_back("disagreement at (" + su + ", " + sv + ") for " + debug_string(pc) +
                              ": matcher=" + (r.found ? "true" : "false"));
  }
  if (r.metrics.pairs_processed > bound) {
    clean = false;
    ++report.bound_violations;
    if (report.failures.size() < kMaxFailures)
      report.failures.push_back("bound exceeded at (" + su + ", " + sv + ") for " + debug_string(pc));
  }
  return clean;
}

void compare_instance(const SystemGraph& g, const OracleGraph& og, const PathCondition& pc,
                       DifferentialReport& report) {
  const PathNfa nfa = compile_nfa(pc);
  const std::size_t bound = pair_bound(g.entity_count(), simplify(pc));
  bool clean = true;
  for (std::size_t u = 0; u < og.size(); ++u) {
    std::vector<bool> truth = og.reachable(u, nfa);
    for (std::size_t v = 0; v < og.size(); ++v) clean &= check_pair(g, og, truth, u, v, pc, bound, report);
  }
  ++report.instances;
  if (clean) ++report.clean_instances;
}

}  // namespace

SystemModel random_model() {
  SystemModel m;
  m.types = {"node"};
  m.labels = {"a", "b", "c"};
  m.symmetric = {"c"};
  for (const auto& l : m.labels) m.permissible.insert({"node", "node", l});
  return m;
}

SystemGraph random_graph(Rng& rng, std::size_t max_nodes) {
  SystemGraph g(random_model());
  const std::size_t n = uniform(rng, 1, max_nodes);
  for (std::size_t i = 0; i < n; ++i) g.add_entity("n" + std::to_string(i), "node");
  // Density varies per graph so both sparse and dense cases come up.
  const double p = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& l : model_labels()) {
        if (coin(rng, p)) g.add_edge("n" + std::to_string(i), "n" + std::to_string(j), l);
      }
    }
  }
  return g;
}

PathCondition random_simple_condition(Rng& rng, const std::vector<std::string>& labels, std::size_t max_length) {
  return simple_of_length(rng, labels, uniform(rng, 1, max_length));
}

PathCondition random_condition(Rng& rng, const std::vector<std::string>& labels, std::size_t depth) {
  const std::size_t pick = depth == 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 5);
  switch (pick) {
    case 0:
      return coin(rng, 0.15) ? PathCondition::diamond()
                             : PathCondition::edge(labels[uniform(rng, 0, labels.size() - 1)], coin(rng));
    case 1:
      return PathCondition::edge(labels[uniform(rng, 0, labels.size() - 1)], coin(rng));
    case 2:
    case 3:
      return PathCondition::concat(random_condition(rng, labels, depth - 1), random_condition(rng, labels, depth - 1));
    case 4:
      return PathCondition::plus(random_condition(rng, labels, depth - 1));
    default:
      return PathCondition::reverse(random_condition(rng, labels, depth - 1));
  }
}

DifferentialReport run_differential(std::uint64_t seed, std::size_t instances) {
  Rng rng(seed);
  DifferentialReport report;
  for (std::size_t i = 0; i < instances; ++i) {
    SystemGraph g = random_graph(rng);
    PathCondition pc = random_simple_condition(rng, model_labels());
    OracleGraph og(g);
    compare_instance(g, og, pc, report);
  }
  return report;
}

DifferentialReport run_differential(const Workspace& ws) {
  DifferentialReport report;
  OracleGraph og(ws.graph);
  for (const auto& rule : ws.system.principal_rules) {
    if (rule.is_top()) continue;
    compare_instance(ws.graph, og, *rule.condition, report);
  }
  return report;
}

Workspace random_workspace(Rng& rng) {
  SystemGraph g = random_graph(rng);
  const std::vector<std::string> principals = {"p0", "p1", "p2", "p3"};
  const std::vector<std::string> actions = {"read", "write"};
  std::vector<std::string> ids;
  for (const auto& [id, type] : g.entities()) ids.push_back(id);
  auto any_id = [&]() { return ids[uniform(rng, 0, ids.size() - 1)]; };
  auto any_decision = [&]() { return coin(rng) ? Decision::Allow : Decision::Deny; };

  AuthorizationSystem sys;
  sys.pms = coin(rng) ? MatchingStrategy::FirstMatch : MatchingStrategy::AllMatch;
  sys.crs = static_cast<ConflictStrategy>(uniform(rng, 0, 2));
  const std::size_t rule_count = uniform(rng, 0, 5);
  for (std::size_t i = 0; i < rule_count; ++i) {
    PathCondition pc = coin(rng) ? random_simple_condition(rng, model_labels(), 4)
                                 : random_condition(rng, model_labels(), 3);
    sys.principal_rules.push_back(PrincipalRule{pc, principals[uniform(rng, 0, principals.size() - 1)]});
  }
  if (coin(rng, 0.3)) sys.principal_rules.push_back(PrincipalRule::top("everyone"));

  const std::size_t auth_count = uniform(rng, 0, 8);
  for (std::size_t i = 0; i < auth_count; ++i) {
    std::string principal = coin(rng, 0.85) ? principals[uniform(rng, 0, principals.size() - 1)] : "everyone";
    std::optional<std::string> object;
    if (coin(rng, 0.4)) object = any_id();
    sys.auth_rules.push_back(
        AuthorizationRule{principal, object, actions[uniform(rng, 0, actions.size() - 1)], coin(rng)});
  }
  for (std::size_t i = uniform(rng, 0, 2); i > 0; --i) sys.subject_defaults[any_id()] = any_decision();
  for (std::size_t i = uniform(rng, 0, 2); i > 0; --i) sys.object_defaults[any_id()] = any_decision();
  sys.system_default = any_decision();

  std::vector<Request> requests;
  for (std::size_t i = uniform(rng, 1, 4); i > 0; --i)
    requests.push_back(Request{any_id(), any_id(), actions[uniform(rng, 0, actions.size() - 1)]});
  return Workspace{std::move(g), std::move(sys), std::move(requests)};
}

}  // namespace relac
