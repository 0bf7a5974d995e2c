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

// Workspaces shipped with the tool: a Unix-style permission model, an RBAC
// encoding and the corporate project example.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relac/workspace.hpp"

namespace relac {

// users alice (owner of report.txt), bob (in staff, which has report.txt)
// and carol (in admins, unrelated to report.txt). Rules: owner, group, world.
Workspace unix_fixture();

// Roles engineer and manager (manager is senior to engineer), one permission
// per principal. carol holds docs-read directly through an up# edge.
Workspace rbac_fixture();

// The corporate project graph with its twelve principal-matching rules,
// eleven authorization rules and five sample requests.
Workspace corporate_fixture();

const std::vector<std::string>& fixture_names();
std::optional<Workspace> fixture_by_name(std::string_view name);

}  // namespace relac
