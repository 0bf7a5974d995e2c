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

// Workspace documents: one JSON file holding a system model, a system graph,
// an authorization system and optionally a list of requests.
//
//   {
//     "version": 1,
//     "model": {"types": [], "labels": [], "symmetric": [],
//               "permissible": [{"from", "to", "label"}], "aliases": {}},
//     "graph": {"entities": [{"id", "type"}], "edges": [{"from", "to", "label"}]},
//     "authorization_system": {
//       "pms": "FirstMatch" | "AllMatch",
//       "crs": "FirstMatch" | "DenyOverride" | "AllowOverride",
//       "principal_rules": [{"path": "<condition>" | "TOP", "principal"}],
//       "auth_rules": [{"principal", "object": "<id>" | "*", "action", "allow": bool}],
//       "defaults": {"system": "allow" | "deny", "subjects": {}, "objects": {}}
//     },
//     "requests": [{"subject", "object", "action"}]
//   }
//
// "aliases" and "requests" are optional.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "relac/graph.hpp"
#include "relac/pdp.hpp"
#include "relac/policy.hpp"

namespace relac {

inline constexpr int kWorkspaceVersion = 1;

struct Workspace {
  SystemGraph graph;  // carries the model
  AuthorizationSystem system;
  std::vector<Request> requests;

  const SystemModel& model() const { return graph.model(); }
};

class WorkspaceError : public std::runtime_error {
 public:
  enum class Kind { Io, Parse, Invalid };

  WorkspaceError(Kind kind, const std::string& message, std::vector<std::string> violations = {});

  Kind kind() const { return kind_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  Kind kind_;
  std::vector<std::string> violations_;
};

// Parses and fully validates a workspace; every problem found is listed in
// the thrown WorkspaceError.
Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::filesystem::path& path);

// All violations of an in-memory workspace (empty when valid).
std::vector<std::string> validate_workspace(const Workspace& ws);

// Canonical text: sorted keys, two-space indent, trailing LF.
std::string dump_workspace(const Workspace& ws);
void save_workspace(const Workspace& ws, const std::filesystem::path& path);

nlohmann::json trace_to_json(const DecisionTrace& trace);
// Throws std::invalid_argument on a malformed document.
DecisionTrace trace_from_json(const nlohmann::json& doc);

}  // namespace relac
