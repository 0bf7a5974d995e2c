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

// Policy decision point. A request is evaluated in two stages:
//
//   1. principal matching: the principal-matching policy binds the request
//      to a list of matched principals (MP);
//   2. authorization: the authorization rules of those principals yield a
//      list of possible decisions (PD), which the conflict resolution
//      strategy reduces to one outcome.
//
// Defaults take over when MP or PD is empty; a system-wide default always
// exists, so evaluation is total.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relac/graph.hpp"
#include "relac/matcher.hpp"
#include "relac/policy.hpp"

namespace relac {

// How the outcome was reached.
enum class Resolution {
  Unanimous,      // PD held a single value
  FirstMatch,     // conflict, first decision added to PD won
  DenyOverride,   // conflict, deny won
  AllowOverride,  // conflict, allow won
  SubjectDefault,
  ObjectDefault,
  SystemDefault,
};

enum class DefaultStage { NoPrincipals, NoDecision };

const char* to_string(Resolution r);
std::optional<Resolution> resolution_from_string(std::string_view text);
const char* to_string(DefaultStage s);
std::optional<DefaultStage> default_stage_from_string(std::string_view text);

struct DecisionTrace {
  Request request;
  std::vector<std::string> matched_principals;
  std::vector<bool> possible_decisions;
  Resolution resolution = Resolution::SystemDefault;
  std::optional<DefaultStage> default_stage;
  Decision outcome = Decision::Deny;
  std::vector<RuleMatchRecord> rules;
};

// Malformed request (unknown subject or object). Distinct from a denial.
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scans the authorization rules in order. A rule applies when its principal
// is in `mp`, its action is `action` and its object is `object` or the
// wildcard. Each principal contributes the value of its first applicable
// rule only; repeated values are dropped, arrival order is kept.
std::vector<bool> possible_decisions(const std::vector<std::string>& mp, const std::string& object,
                                     const std::string& action, const std::vector<AuthorizationRule>& rules);

struct Resolved {
  Decision decision;
  Resolution resolution;
};

// nullopt when `pd` is empty.
std::optional<Resolved> resolve(const std::vector<bool>& pd, ConflictStrategy crs);

// Subject, then object, then system default; the subject level is skipped
// once principals have been matched.
Resolved apply_defaults(DefaultStage stage, const std::string& subject, const std::string& object,
                        const AuthorizationSystem& system);

// Throws RequestError for unknown entities and PolicyError for an invalid
// principal-matching policy.
DecisionTrace evaluate(const SystemGraph& graph, const AuthorizationSystem& system, const Request& request);

}  // namespace relac
