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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "relac/fixtures.hpp"
#include "relac/matcher.hpp"
#include "relac/oracle.hpp"
#include "relac/pdp.hpp"
#include "relac/random_instances.hpp"
#include "relac/workspace.hpp"

namespace {

using relac::Decision;
using relac::PathCondition;
using relac::Request;

// Pinned budgets and sizes.
constexpr double kSampleBudgetSeconds = 1.0;
constexpr std::uint64_t kDifferentialSeed = 20260101;
constexpr std::size_t kDifferentialInstances = 10000;
constexpr double kDifferentialBudgetSeconds = 60.0;
constexpr std::uint64_t kEquivalenceSeed = 424242;
constexpr std::size_t kEquivalenceConditions = 1000;
constexpr std::size_t kEquivalenceGraphs = 100;
constexpr std::uint64_t kScaleSeed = 99;
constexpr std::size_t kScaleNodes = 1000;
constexpr std::size_t kScaleEdges = 5000;
constexpr double kScaleBudgetSeconds = 1.0;
constexpr std::uint64_t kFuzzSeed = 8;
constexpr std::size_t kFuzzCases = 1000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pd_string(const std::vector<bool>& pd) {
  std::string s = "{";
  for (std::size_t i = 0; i < pd.size(); ++i) s += (i ? "," : "") + std::string(pd[i] ? "1" : "0");
  return s + "}";
}

const Request kSample[] = {
    {"Tech.#2", "Test.Spec.#1", "read"},
    {"Tech.#2", "Func.Spec.#1", "write"},
    {"Sales.#2", "Func.Spec.#1", "write"},
    {"CTO", "Proj.#1 Report#1", "read"},
    {"CEO", "Proj.#1 Report#1", "read"},
};

Outcome sample_requests() {
  Outcome out;
  const std::vector<std::vector<bool>> pds = {{true}, {true, false}, {false}, {true}, {}};
  const Decision outcomes[] = {Decision::Allow, Decision::Allow, Decision::Deny, Decision::Allow, Decision::Deny};
  auto t0 = std::chrono::steady_clock::now();
  relac::Workspace ws = relac::corporate_fixture();
  for (std::size_t i = 0; i < 5; ++i) {
    auto t = relac::evaluate(ws.graph, ws.system, kSample[i]);
    out.expect(t.possible_decisions == pds[i], "request " + std::to_string(i + 1) + " PD " + pd_string(t.possible_decisions));
    out.expect(t.outcome == outcomes[i], "request " + std::to_string(i + 1) + " outcome");
    out.detail << (i ? " " : "") << pd_string(t.possible_decisions) << "=" << relac::to_string(t.outcome);
  }
  double secs = seconds_since(t0);
  out.expect(secs < kSampleBudgetSeconds, "runtime");
  out.detail << " in " << secs << "s";
  return out;
}

Outcome matched_principals() {
  Outcome out;
  using V = std::vector<std::string>;
  const std::vector<V> expected = {
      {"Project Resource Supervisor", "Project Resource User"},
      {"Project Resource Supervisor", "Project Resource User"},
      {"Project Resource User"},
      {"Deliverable Reviewer"},
      {},
  };
  relac::Workspace ws = relac::corporate_fixture();
  for (std::size_t i = 0; i < 5; ++i) {
    auto pm = relac::match_principals(ws.graph, kSample[i], ws.system.principal_rules, ws.system.pms);
    out.expect(pm.principals == expected[i], "request " + std::to_string(i + 1));
    out.detail << (i ? " " : "") << pm.principals.size();
  }
  out.detail << " principals";
  return out;
}

Outcome metrics_table() {
  Outcome out;
  struct Row {
    const char* path;
    Request q;
    bool found;
  };
  const Row rows[] = {
      {"P . ~R . (~M)+", kSample[2], true},
      {"P . ~R . (~M)+", kSample[0], true},
      {"S . ~R . (~M)+", kSample[1], true},
      {"S+ . ~M . S . ~D . (~M)+", kSample[3], true},
      {"S+ . ~M . S . ~D . (~M)+", kSample[4], false},
  };
  relac::Workspace ws = relac::corporate_fixture();
  const std::size_t v = ws.graph.entity_count();
  for (const auto& row : rows) {
    PathCondition pc = relac::parse(row.path, ws.model().vocabulary());
    auto r = relac::match_path(ws.graph, row.q.subject, row.q.object, pc);
    const std::size_t bound = relac::pair_bound(v, pc);
    out.expect(r.found == row.found, std::string("found for ") + row.path + " " + row.q.subject);
    out.expect(r.metrics.nodes_visited <= bound && r.metrics.pairs_processed <= bound,
               std::string("bound for ") + row.path);
    out.detail << "[" << (r.found ? "Yes" : "No") << " n=" << r.metrics.nodes_visited
               << " e=" << r.metrics.edges_considered << " pairs=" << r.metrics.pairs_processed << "/" << bound
               << "]";
  }
  return out;
}

Outcome differential() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  auto r = relac::run_differential(kDifferentialSeed, kDifferentialInstances);
  double secs = seconds_since(t0);
  out.expect(r.instances == kDifferentialInstances, "instance count");
  out.expect(r.ok(), r.failures.empty() ? "disagreement" : r.failures.front());
  out.expect(secs < kDifferentialBudgetSeconds, "runtime");
  out.detail << r.clean_instances << "/" << r.instances << " instances, " << r.agreements << "/" << r.pairs
             << " pairs agree in " << secs << "s";
  return out;
}

Outcome equivalence_laws() {
  Outcome out;
  relac::Rng rng(kEquivalenceSeed);
  const std::vector<std::string> labels = {"a", "b", "c"};
  std::vector<relac::SystemGraph> graphs;
  for (std::size_t i = 0; i < kEquivalenceGraphs; ++i) graphs.push_back(relac::random_graph(rng));
  std::vector<relac::OracleGraph> oracles(graphs.begin(), graphs.end());

  std::size_t checks = 0;
  std::size_t failures = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t c = 0; c < kEquivalenceConditions; ++c) {
    PathCondition pc = relac::random_condition(rng, labels, 4);
    PathCondition s = relac::simplify(pc);
    const relac::PathNfa raw = relac::compile_nfa(pc);
    const relac::PathNfa simple = relac::compile_nfa(s);
    std::optional<relac::PathNfa> split;
    if (!s.is_diamond()) split = relac::compile_nfa(relac::sequence(PathCondition::edge(relac::head(s)), relac::suffix(s)));
    for (const auto& og : oracles) {
      for (std::size_t u = 0; u < og.size(); ++u) {
        auto expect = og.reachable(u, raw);
        ++checks;
        if (og.reachable(u, simple) != expect) {
          ++failures;
          out.expect(false, "simplify changed " + relac::debug_string(pc));
        }
        if (split) {
          ++checks;
          if (og.reachable(u, *split) != expect) {
            ++failures;
            out.expect(false, "head/suffix split of " + relac::debug_string(s));
          }
        }
      }
    }
  }
  out.detail << (checks - failures) << "/" << checks << " source rows agree (" << kEquivalenceConditions
             << " conditions x " << kEquivalenceGraphs << " graphs, all pairs) in " << seconds_since(t0) << "s";
  return out;
}

// Principals the oracle says should match, in policy order.
std::vector<std::string> oracle_principals(const relac::Workspace& ws, const Request& q) {
  std::vector<std::string> out;
  for (const auto& rule : ws.system.principal_rules) {
    bool hit = rule.is_top() || relac::oracle_satisfies(ws.graph, q.subject, q.object, *rule.condition);
    if (!hit || std::find(out.begin(), out.end(), rule.principal) != out.end()) continue;
    out.push_back(rule.principal);
    if (ws.system.pms == relac::MatchingStrategy::FirstMatch) break;
  }
  return out;
}

Outcome special_cases() {
  Outcome out;
  using V = std::vector<std::string>;
  relac::Workspace unix_ws = relac::unix_fixture();
  struct Case {
    Request q;
    V principals;
  };
  const Case unix_cases[] = {
      {{"alice", "report.txt", "read"}, {"owner"}},
      {{"bob", "report.txt", "read"}, {"group"}},
      {{"carol", "report.txt", "read"}, {"world"}},
      {{"alice", "notes.txt", "read"}, {"world"}},
      {{"carol", "notes.txt", "read"}, {"group"}},
  };
  for (const auto& c : unix_cases) {
    auto got = relac::match_principals(unix_ws.graph, c.q, unix_ws.system.principal_rules, unix_ws.system.pms).principals;
    out.expect(oracle_principals(unix_ws, c.q) == c.principals, "oracle for unix " + c.q.subject);
    out.expect(got == c.principals, "unix " + c.q.subject + " -> " + c.q.object);
  }

  relac::Workspace rbac = relac::rbac_fixture();
  const Case rbac_cases[] = {
      {{"alice", "design.doc", "read"}, {"docs-read", "docs-write"}},
      {{"bob", "design.doc", "read"}, {"docs-read", "docs-write"}},
      {{"bob", "budget.xls", "approve"}, {"budget-approve"}},
      {{"carol", "design.doc", "read"}, {"docs-read"}},
      {{"alice", "budget.xls", "approve"}, {}},
  };
  for (const auto& c : rbac_cases) {
    auto got = relac::match_principals(rbac.graph, c.q, rbac.system.principal_rules, rbac.system.pms).principals;
    out.expect(oracle_principals(rbac, c.q) == c.principals, "oracle for rbac " + c.q.subject);
    out.expect(got == c.principals, "rbac " + c.q.subject + " -> " + c.q.object);
  }
  auto t = relac::evaluate(rbac.graph, rbac.system, {"bob", "budget.xls", "approve"});
  out.expect(t.outcome == Decision::Allow, "rbac approve via role hierarchy");
  t = relac::evaluate(rbac.graph, rbac.system, {"carol", "design.doc", "write"});
  out.expect(t.outcome == Decision::Deny, "rbac exception grants read only");
  out.detail << "5 unix and 5 rbac requests checked against oracle";
  return out;
}

Outcome scale_smoke() {
  Outcome out;
  relac::Rng rng(kScaleSeed);
  relac::SystemGraph g(relac::random_model());
  for (std::size_t i = 0; i < kScaleNodes; ++i) g.add_entity("n" + std::to_string(i), "node");
  std::uniform_int_distribution<std::size_t> node(0, kScaleNodes - 1);
  const char* labels[] = {"a", "b", "c"};
  std::uniform_int_distribution<std::size_t> label(0, 2);
  while (g.edge_count() < kScaleEdges)
    g.add_edge("n" + std::to_string(node(rng)), "n" + std::to_string(node(rng)), labels[label(rng)]);

  relac::AuthorizationSystem sys;
  sys.pms = relac::MatchingStrategy::FirstMatch;
  PathCondition pc = relac::parse("a . b+ . ~c . a . ~b", g.model().vocabulary());
  sys.principal_rules = {relac::PrincipalRule{pc, "reader"}};
  sys.auth_rules = {relac::AuthorizationRule{"reader", std::nullopt, "read", true}};
  out.expect(relac::length(pc) == 5 && relac::plus_count(pc) == 1, "condition shape");

  // Subject with outgoing a edges, object that nothing reaches: a full search.
  relac::SystemGraph g2 = g;
  g2.add_entity("sink", "node");
  const std::size_t bound = relac::pair_bound(g2.entity_count(), pc);
  auto t0 = std::chrono::steady_clock::now();
  auto t = relac::evaluate(g2, sys, {"n0", "sink", "read"});
  double secs = seconds_since(t0);
  out.expect(secs < kScaleBudgetSeconds, "runtime");
  out.expect(t.rules.size() == 1 && t.rules[0].metrics.pairs_processed <= bound, "pair bound");
  out.expect(!t.rules.empty() && !t.rules[0].matched, "sink unreachable");
  out.detail << g2.entity_count() << " nodes, " << g2.edge_count() << " edges, pairs="
             << (t.rules.empty() ? 0 : t.rules[0].metrics.pairs_processed) << "/" << bound << " in " << secs << "s";
  return out;
}

Outcome totality_and_validation() {
  Outcome out;
  relac::Rng rng(kFuzzSeed);
  std::size_t evaluated = 0;
  for (std::size_t i = 0; i < kFuzzCases; ++i) {
    relac::Workspace ws = relac::random_workspace(rng);
    out.expect(relac::validate_workspace(ws).empty(), "generator produced an invalid workspace");
    const auto& q = ws.requests.front();
    try {
      auto t = relac::evaluate(ws.graph, ws.system, q);
      bool decided = t.outcome == Decision::Allow || t.outcome == Decision::Deny;
      bool settled = !t.possible_decisions.empty() || t.default_stage.has_value();
      out.expect(decided && settled, "no decision leaked");
      ++evaluated;
    } catch (const std::exception& e) {
      out.expect(false, std::string("evaluate threw: ") + e.what());
    }
  }

  using nlohmann::json;
  const json base = json::parse(relac::dump_workspace(relac::corporate_fixture()));
  struct Negative {
    const char* name;
    std::function<void(json&)> mutate;
    const char* needle;
  };
  const Negative corpus[] = {
      {"TOP misplaced",
       [](json& d) {
         auto& r = d["authorization_system"]["principal_rules"];
         r.insert(r.begin(), json{{"path", "TOP"}, {"principal", "world"}});
       },
       "TOP"},
      {"bad edge typing",
       [](json& d) { d["graph"]["edges"].push_back({{"from", "CEO"}, {"to", "CTO"}, {"label", "Client-of"}}); },
       "Client-of"},
      {"unknown label",
       [](json& d) { d["authorization_system"]["principal_rules"][0]["path"] = "C . ~Unknown-rel"; },
       "Unknown-rel"},
      {"unknown edge label",
       [](json& d) { d["graph"]["edges"].push_back({{"from", "CEO"}, {"to", "CTO"}, {"label", "Friend-of"}}); },
       "Friend-of"},
      {"dangling object", [](json& d) { d["authorization_system"]["auth_rules"][0]["object"] = "Ghost"; }, "Ghost"},
      {"missing system default", [](json& d) { d["authorization_system"]["defaults"].erase("system"); }, "system"},
  };
  std::size_t rejected = 0;
  for (const auto& n : corpus) {
    json doc = base;
    n.mutate(doc);
    try {
      relac::parse_workspace(doc.dump());
      out.expect(false, std::string(n.name) + " accepted");
    } catch (const relac::WorkspaceError& e) {
      bool named = false;
      for (const auto& v : e.violations()) named |= v.find(n.needle) != std::string::npos;
      out.expect(named, std::string(n.name) + " not named");
      if (named) ++rejected;
    }
  }
  out.detail << evaluated << "/" << kFuzzCases << " fuzz cases decided, " << rejected << "/" << std::size(corpus)
             << " ill-formed workspaces rejected";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "sample requests", sample_requests},
      {2, "matched principals", matched_principals},
      {3, "metrics table found column", metrics_table},
      {4, "differential oracle suite", differential},
      {5, "equivalence laws", equivalence_laws},
      {6, "unix and rbac fixtures", special_cases},
      {7, "scale smoke test", scale_smoke},
      {8, "totality and validation", totality_and_validation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
