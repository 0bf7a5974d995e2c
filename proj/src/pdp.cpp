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

#include "relac/pdp.hpp"

#include <algorithm>
#include <set>

namespace relac {

const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::Unanimous:
      return "unanimous";
    case Resolution::FirstMatch:
      return "first match";
    case Resolution::DenyOverride:
      return "deny override";
    case Resolution::AllowOverride:
      return "allow override";
    case Resolution::SubjectDefault:
      return "subject default";
    case Resolution::ObjectDefault:
      return "object default";
    case Resolution::SystemDefault:
      return "system default";
  }
  return "?";
}

std::optional<Resolution> resolution_from_string(std::string_view text) {
  for (Resolution r : {Resolution::Unanimous, Resolution::FirstMatch, Resolution::DenyOverride,
                       Resolution::AllowOverride, Resolution::SubjectDefault, Resolution::ObjectDefault,
                       Resolution::SystemDefault}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

const char* to_string(DefaultStage s) { return s == DefaultStage::NoPrincipals ? "no principals" : "no decision"; }

std::optional<DefaultStage> default_stage_from_string(std::string_view text) {
  if (text == "no principals") return DefaultStage::NoPrincipals;
  if (text == "no decision") return DefaultStage::NoDecision;
  return std::nullopt;
}

std::vector<bool> possible_decisions(const std::vector<std::string>& mp, const std::string& object,
                                     const std::string& action, const std::vector<AuthorizationRule>& rules) {
  std::vector<bool> pd;
  std::set<std::string> decided;
  for (const auto& rule : rules) {
    if (rule.action != action || !rule.applies_to(object)) continue;
    if (std::find(mp.begin(), mp.end(), rule.principal) == mp.end()) continue;
    if (!decided.insert(rule.principal).second) continue;
    if (std::find(pd.begin(), pd.end(), rule.allow) == pd.end()) pd.push_back(rule.allow);
  }
  return pd;
}

std::optional<Resolved> resolve(const std::vector<bool>& pd, ConflictStrategy crs) {
  if (pd.empty()) return std::nullopt;
  auto as_decision = [](bool b) { return b ? Decision::Allow : Decision::Deny; };
  const bool has_allow = std::find(pd.begin(), pd.end(), true) != pd.end();
  const bool has_deny = std::find(pd.begin(), pd.end(), false) != pd.end();
  if (!(has_allow && has_deny)) return Resolved{as_decision(pd.front()), Resolution::Unanimous};
  switch (crs) {
    case ConflictStrategy::FirstMatch:
      return Resolved{as_decision(pd.front()), Resolution::FirstMatch};
    case ConflictStrategy::DenyOverride:
      return Resolved{Decision::Deny, Resolution::DenyOverride};
    case ConflictStrategy::AllowOverride:
      return Resolved{Decision::Allow, Resolution::AllowOverride};
  }
  return std::nullopt;
}

Resolved apply_defaults(DefaultStage stage, const std::string& subject, const std::string& object,
                        const AuthorizationSystem& system) {
  if (stage == DefaultStage::NoPrincipals) {
    if (auto it = system.subject_defaults.find(subject); it != system.subject_defaults.end())
      return Resolved{it->second, Resolution::SubjectDefault};
  }
  if (auto it = system.object_defaults.find(object); it != system.object_defaults.end())
    return Resolved{it->second, Resolution::ObjectDefault};
  return Resolved{system.system_default, Resolution::SystemDefault};
}

DecisionTrace evaluate(const SystemGraph& graph, const AuthorizationSystem& system, const Request& request) {
  if (!graph.contains(request.subject)) throw RequestError("unknown subject '" + request.subject + "'");
  if (!graph.contains(request.object)) throw RequestError("unknown object '" + request.object + "'");

  DecisionTrace trace;
  trace.request = request;
  PrincipalMatch pm = match_principals(graph, request, system.principal_rules, system.pms);
  trace.matched_principals = std::move(pm.principals);
  trace.rules = std::move(pm.rules);

  auto settle = [&trace](Resolved r, std::optional<DefaultStage> stage) {
    trace.outcome = r.decision;
    trace.resolution = r.resolution;
    trace.default_stage = stage;
  };

  if (trace.matched_principals.empty()) {
    settle(apply_defaults(DefaultStage::NoPrincipals, request.subject, request.object, system),
           DefaultStage::NoPrincipals);
    return trace;
  }
  trace.possible_decisions =
      possible_decisions(trace.matched_principals, request.object, request.action, system.auth_rules);
  if (auto r = resolve(trace.possible_decisions, system.crs)) {
    settle(*r, std::nullopt);
  } else {
    settle(apply_defaults(DefaultStage::NoDecision, request.subject, request.object, system),
           DefaultStage::NoDecision);
  }
  return trace;
}

}  // namespace relac
