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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relac/path_condition.hpp"

namespace relac {

enum class Decision { Deny, Allow };

enum class MatchingStrategy { FirstMatch, AllMatch };

enum class ConflictStrategy { FirstMatch, DenyOverride, AllowOverride };

// (condition, principal). An empty condition is the TOP rule, which matches
// every request it is evaluated against.
struct PrincipalRule {
  std::optional<PathCondition> condition;
  std::string principal;

  static PrincipalRule top(std::string principal) { return {std::nullopt, std::move(principal)}; }
  bool is_top() const { return !condition.has_value(); }
};

// (principal, object or wildcard, action, allow).
struct AuthorizationRule {
  std::string principal;
  std::optional<std::string> object;  // nullopt is the wildcard
  std::string action;
  bool allow = false;

  bool applies_to(const std::string& o) const { return !object || *object == o; }
};

struct AuthorizationSystem {
  std::vector<PrincipalRule> principal_rules;
  MatchingStrategy pms = MatchingStrategy::FirstMatch;
  std::vector<AuthorizationRule> auth_rules;
  ConflictStrategy crs = ConflictStrategy::FirstMatch;
  std::map<std::string, Decision> subject_defaults;
  std::map<std::string, Decision> object_defaults;
  Decision system_default = Decision::Deny;
};

struct Request {
  std::string subject;
  std::string object;
  std::string action;

  friend bool operator==(const Request&, const Request&) = default;
};

class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// TOP may only appear as the last principal-matching rule.
std::vector<std::string> validate_principal_rules(const std::vector<PrincipalRule>& rules);

const char* to_string(Decision d);
const char* to_string(MatchingStrategy s);
const char* to_string(ConflictStrategy s);
std::optional<Decision> decision_from_string(std::string_view text);
std::optional<MatchingStrategy> matching_strategy_from_string(std::string_view text);
std::optional<ConflictStrategy> conflict_strategy_from_string(std::string_view text);

}  // namespace relac
