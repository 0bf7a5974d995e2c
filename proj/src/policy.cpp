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

#include "relac/policy.hpp"

namespace relac {

std::vector<std::string> validate_principal_rules(const std::vector<PrincipalRule>& rules) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < rules.size(); ++i) {
    if (rules[i].is_top()) {
      out.push_back("principal-matching rule " + std::to_string(i + 1) + " (TOP, " + rules[i].principal +
                    ") must be the last rule");
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].principal.empty())
      out.push_back("principal-matching rule " + std::to_string(i + 1) + " has an empty principal");
  }
  return out;
}

const char* to_string(Decision d) { return d == Decision::Allow ? "allow" : "deny"; }

const char* to_string(MatchingStrategy s) { return s == MatchingStrategy::AllMatch ? "AllMatch" : "FirstMatch"; }

const char* to_string(ConflictStrategy s) {
  switch (s) {
    case ConflictStrategy::FirstMatch:
      return "FirstMatch";
    case ConflictStrategy::DenyOverride:
      return "DenyOverride";
    case ConflictStrategy::AllowOverride:
      return "AllowOverride";
  }
  return "?";
}

std::optional<Decision> decision_from_string(std::string_view text) {
  if (text == "allow") return Decision::Allow;
  if (text == "deny") return Decision::Deny;
  return std::nullopt;
}

std::optional<MatchingStrategy> matching_strategy_from_string(std::string_view text) {
  if (text == "FirstMatch") return MatchingStrategy::FirstMatch;
  if (text == "AllMatch") return MatchingStrategy::AllMatch;
  return std::nullopt;
}

std::optional<ConflictStrategy> conflict_strategy_from_string(std::string_view text) {
  if (text == "FirstMatch") return ConflictStrategy::FirstMatch;
  if (text == "DenyOverride") return ConflictStrategy::DenyOverride;
  if (text == "AllowOverride") return ConflictStrategy::AllowOverride;
  return std::nullopt;
}

}  // namespace relac
