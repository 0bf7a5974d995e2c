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

// relac: command-line front end.
//
// Exit codes: eval 0 allow, 1 deny; match 0 found, 1 not found;
// oracle-check 0 all agree, 1 otherwise; 2 for any error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relac/fixtures.hpp"
#include "relac/matcher.hpp"
#include "relac/pdp.hpp"
#include "relac/random_instances.hpp"
#include "relac/workspace.hpp"

namespace {

constexpr int kError = 2;

struct GlobalOptions {
  std::string workspace;
  bool trace = false;
  bool metrics = false;
  bool explain = false;
  std::uint64_t seed = 1;
};

void print_trace_line(std::string_view node, std::string_view residual, std::string_view action) {
  std::cout << "trace: " << action << " " << node << " | " << residual << "\n";
}

relac::Workspace require_workspace(const GlobalOptions& opts) {
  if (opts.workspace.empty())
    throw relac::WorkspaceError(relac::WorkspaceError::Kind::Io, "--workspace is required for this command");
  return relac::load_workspace(opts.workspace);
}

std::string outcome_line(const relac::DecisionTrace& t) {
  std::string line = t.outcome == relac::Decision::Allow ? "ALLOW" : "DENY";
  if (t.default_stage) line += std::string(" (") + relac::to_string(t.resolution) + ")";
  return line;
}

void print_metrics(const relac::DecisionTrace& t) {
  for (const auto& r : t.rules) {
    if (!r.evaluated) {
      std::cout << "  rule " << r.index + 1 << " [" << r.principal << "] skipped\n";
      continue;
    }
    std::cout << "  rule " << r.index + 1 << " [" << r.principal << "] " << (r.matched ? "matched" : "no match")
              << " n=" << r.metrics.nodes_visited << " e=" << r.metrics.edges_considered << "\n";
  }
}

// Re-runs the evaluated rules with a trace sink attached.
void print_rule_traces(const relac::Workspace& ws, const relac::DecisionTrace& t) {
  for (const auto& r : t.rules) {
    const auto& rule = ws.system.principal_rules[r.index];
    if (!r.evaluated || rule.is_top()) continue;
    std::cout << "rule " << r.index + 1 << ": " << relac::render(*rule.condition) << "\n";
    relac::match_path(ws.graph, t.request.subject, t.request.object, *rule.condition, print_trace_line);
  }
}

int report(const relac::DecisionTrace& t, const relac::Workspace& ws, const GlobalOptions& opts) {
  std::cout << outcome_line(t) << "\n";
  if (opts.metrics) print_metrics(t);
  if (opts.trace) print_rule_traces(ws, t);
  if (opts.explain) std::cout << relac::trace_to_json(t).dump(2) << "\n";
  return t.outcome == relac::Decision::Allow ? 0 : 1;
}

int cmd_validate(const GlobalOptions& opts) {
  try {
    require_workspace(opts);
  } catch (const relac::WorkspaceError& e) {
    if (e.violations().empty()) {
      std::cerr << "error: " << e.what() << "\n";
    } else {
      for (const auto& v : e.violations()) std::cout << "violation: " << v << "\n";
    }
    return kError;
  }
  std::cout << "valid\n";
  return 0;
}

int cmd_eval(const GlobalOptions& opts, const relac::Request& q) {
  relac::Workspace ws = require_workspace(opts);
  return report(relac::evaluate(ws.graph, ws.system, q), ws, opts);
}

int cmd_eval_batch(const GlobalOptions& opts) {
  relac::Workspace ws = require_workspace(opts);
  nlohmann::json all = nlohmann::json::array();
  for (const auto& q : ws.requests) {
    relac::DecisionTrace t = relac::evaluate(ws.graph, ws.system, q);
    std::cout << "(" << q.subject << ", " << q.object << ", " << q.action << ") " << outcome_line(t) << "\n";
    if (opts.metrics) print_metrics(t);
    if (opts.trace) print_rule_traces(ws, t);
    if (opts.explain) all.push_back(relac::trace_to_json(t));
  }
  if (opts.explain) std::cout << all.dump(2) << "\n";
  return 0;
}

int cmd_match(const GlobalOptions& opts, const std::string& s, const std::string& o, const std::string& path) {
  relac::Workspace ws = require_workspace(opts);
  relac::PathCondition pc = relac::parse(path, ws.model().vocabulary());
  relac::TraceSink sink;
  if (opts.trace) sink = print_trace_line;
  relac::MatchResult r = relac::match_path(ws.graph, s, o, pc, sink);
  std::cout << "found=" << (r.found ? "yes" : "no") << " n=" << r.metrics.nodes_visited
            << " e=" << r.metrics.edges_considered << "\n";
  if (opts.metrics) {
    std::cout << "  length=" << relac::length(relac::simplify(pc)) << " queue_peak=" << r.metrics.queue_peak
              << " pairs=" << r.metrics.pairs_processed
              << " bound=" << relac::pair_bound(ws.graph.entity_count(), pc) << "\n";
  }
  return r.found ? 0 : 1;
}

int cmd_simplify(const GlobalOptions& opts, const std::string& path) {
  relac::PathCondition pc =
      opts.workspace.empty() ? relac::parse_any(path) : relac::parse(path, require_workspace(opts).model().vocabulary());
  std::cout << relac::render(relac::simplify(pc)) << "\n";
  return 0;
}

int cmd_fixture(const std::string& name, const std::string& out) {
  auto ws = relac::fixture_by_name(name);
  if (!ws) {
    std::cerr << "error: unknown fixture '" << name << "'\n";
    return kError;
  }
  if (out.empty() || out == "-") {
    std::cout << relac::dump_workspace(*ws);
  } else {
    relac::save_workspace(*ws, out);
  }
  return 0;
}

int cmd_oracle_check(const GlobalOptions& opts, std::size_t trials) {
  relac::DifferentialReport r =
      opts.workspace.empty() ? relac::run_differential(opts.seed, trials) : relac::run_differential(require_workspace(opts));
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  std::cout << r.clean_instances << "/" << r.instances << " agree\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relac: relationship-based access control engine"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("-w,--workspace", opts.workspace, "Workspace JSON file");
  app.add_flag("--trace", opts.trace, "Print matcher trace events");
  app.add_flag("--metrics", opts.metrics, "Print per-rule match metrics");
  app.add_flag("--explain", opts.explain, "Dump the decision trace as JSON");
  app.add_option("--seed", opts.seed, "Seed for randomized checks");

  auto* validate = app.add_subcommand("validate", "Validate a workspace");

  relac::Request q;
  auto* eval = app.add_subcommand("eval", "Evaluate one request");
  eval->add_option("-s,--subject", q.subject)->required();
  eval->add_option("-o,--object", q.object)->required();
  eval->add_option("-a,--action", q.action)->required();

  auto* batch = app.add_subcommand("eval-batch", "Evaluate the requests stored in the workspace");

  std::string ms, mo, mp;
  auto* match = app.add_subcommand("match", "Match one path condition");
  match->add_option("-s,--subject", ms)->required();
  match->add_option("-o,--object", mo)->required();
  match->add_option("-p,--path", mp)->required();

  std::string sp;
  auto* simp = app.add_subcommand("simplify", "Print the simple form of a path condition");
  simp->add_option("path", sp)->required();

  std::string fname, fout;
  auto* fixture = app.add_subcommand("fixture", "Write a shipped workspace");
  fixture->add_option("name", fname)->required()->check(CLI::IsMember(relac::fixture_names()));
  fixture->add_option("-o,--out", fout, "Output file (stdout if omitted)");

  std::size_t trials = 1000;
  auto* oracle = app.add_subcommand("oracle-check", "Compare matcher and oracle");
  oracle->add_option("--trials", trials, "Random instances to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts);
    if (eval->parsed()) return cmd_eval(opts, q);
    if (batch->parsed()) return cmd_eval_batch(opts);
    if (match->parsed()) return cmd_match(opts, ms, mo, mp);
    if (simp->parsed()) return cmd_simplify(opts, sp);
    if (fixture->parsed()) return cmd_fixture(fname, fout);
    if (oracle->parsed()) return cmd_oracle_check(opts, trials);
  } catch (const relac::WorkspaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
