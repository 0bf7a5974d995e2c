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

#include "relac/fixtures.hpp"

#include <utility>

namespace relac {

namespace {

PrincipalRule rule(const SystemModel& model, std::string_view path, std::string principal) {
  return PrincipalRule{parse(path, model.vocabulary()), std::move(principal)};
}

AuthorizationRule grant(std::string principal, std::optional<std::string> object, std::string action, bool allow) {
  return AuthorizationRule{std::move(principal), std::move(object), std::move(action), allow};
}

}  // namespace

Workspace unix_fixture() {
  SystemModel model;
  model.types = {"user", "group", "object"};
  model.labels = {"uo", "ug", "go"};
  model.permissible = {{"user", "object", "uo"}, {"user", "group", "ug"}, {"group", "object", "go"}};

  SystemGraph g(model);
  for (const char* u : {"alice", "bob", "carol"}) g.add_entity(u, "user");
  for (const char* gr : {"staff", "admins"}) g.add_entity(gr, "group");
  for (const char* o : {"report.txt", "notes.txt"}) g.add_entity(o, "object");
  g.add_edge("alice", "report.txt", "uo");
  g.add_edge("bob", "staff", "ug");
  g.add_edge("staff", "report.txt", "go");
  g.add_edge("carol", "admins", "ug");
  g.add_edge("admins", "notes.txt", "go");

  AuthorizationSystem sys;
  sys.pms = MatchingStrategy::FirstMatch;
  sys.crs = ConflictStrategy::FirstMatch;
  sys.principal_rules = {rule(model, "uo", "owner"), rule(model, "ug . go", "group"), PrincipalRule::top("world")};
  sys.auth_rules = {
      grant("owner", std::nullopt, "read", true),  grant("owner", std::nullopt, "write", true),
      grant("group", std::nullopt, "read", true),  grant("group", std::nullopt, "write", false),
      grant("world", std::nullopt, "read", false), grant("world", std::nullopt, "write", false),
  };
  sys.system_default = Decision::Deny;

  std::vector<Request> requests = {
      {"alice", "report.txt", "write"},
      {"bob", "report.txt", "read"},
      {"carol", "report.txt", "read"},
  };
  return Workspace{std::move(g), std::move(sys), std::move(requests)};
}

Workspace rbac_fixture() {
  struct Permission {
    const char* name;
    const char* object;
    const char* action;
  };
  const Permission permissions[] = {
      {"docs-read", "design.doc", "read"},
      {"docs-write", "design.doc", "write"},
      {"budget-approve", "budget.xls", "approve"},
  };

  SystemModel model;
  model.types = {"user", "role", "object"};
  model.labels = {"ua", "rr"};
  model.permissible = {{"user", "role", "ua"}, {"role", "role", "rr"}};
  for (const auto& p : permissions) {
    std::string pa = std::string("pa#") + p.name;
    std::string up = std::string("up#") + p.name;
    model.labels.insert(pa);
    model.labels.insert(up);
    model.permissible.insert({"role", "object", pa});
    model.permissible.insert({"user", "object", up});
  }

  SystemGraph g(model);
  for (const char* u : {"alice", "bob", "carol"}) g.add_entity(u, "user");
  for (const char* r : {"engineer", "manager"}) g.add_entity(r, "role");
  for (const char* o : {"design.doc", "budget.xls"}) g.add_entity(o, "object");
  g.add_edge("alice", "engineer", "ua");
  g.add_edge("bob", "manager", "ua");
  g.add_edge("manager", "engineer", "rr");
  g.add_edge("engineer", "design.doc", "pa#docs-read");
  g.add_edge("engineer", "design.doc", "pa#docs-write");
  g.add_edge("manager", "budget.xls", "pa#budget-approve");
  g.add_edge("carol", "design.doc", "up#docs-read");

  AuthorizationSystem sys;
  sys.pms = MatchingStrategy::AllMatch;
  sys.crs = ConflictStrategy::DenyOverride;
  for (const auto& p : permissions) {
    std::string name = p.name;
    sys.principal_rules.push_back(rule(model, "ua . pa#" + name, name));
    sys.principal_rules.push_back(rule(model, "ua . rr+ . pa#" + name, name));
    sys.principal_rules.push_back(rule(model, "up#" + name, name));
    sys.auth_rules.push_back(grant(name, std::string(p.object), p.action, true));
  }
  sys.system_default = Decision::Deny;

  std::vector<Request> requests = {
      {"alice", "design.doc", "write"},
      {"bob", "design.doc", "read"},
      {"bob", "budget.xls", "approve"},
      {"carol", "design.doc", "read"},
      {"alice", "budget.xls", "approve"},
  };
  return Workspace{std::move(g), std::move(sys), std::move(requests)};
}

Workspace corporate_fixture() {
  SystemModel model;
  model.types = {"File", "Folder", "Group", "Printer", "Project", "User"};
  model.labels = {"Client-of", "Deliverable-for", "Member-of", "Participant-of", "Resource-for", "Supervises"};
  model.aliases = {{"C", "Client-of"},      {"D", "Deliverable-for"}, {"M", "Member-of"},
                   {"P", "Participant-of"}, {"R", "Resource-for"},    {"S", "Supervises"}};
  model.permissible = {
      {"Group", "Project", "Client-of"},     {"Group", "User", "Client-of"},
      {"File", "Project", "Deliverable-for"}, {"Folder", "Project", "Deliverable-for"},
      {"User", "Group", "Member-of"},        {"Group", "Group", "Member-of"},
      {"File", "Folder", "Member-of"},       {"Folder", "Folder", "Member-of"},
      {"User", "Project", "Participant-of"}, {"Group", "Project", "Participant-of"},
      {"File", "Project", "Resource-for"},   {"Folder", "Project", "Resource-for"},
      {"File", "Group", "Resource-for"},     {"Folder", "Group", "Resource-for"},
      {"Printer", "Group", "Resource-for"},  {"Printer", "Project", "Resource-for"},
      {"User", "User", "Supervises"},        {"User", "Group", "Supervises"},
      {"User", "Project", "Supervises"},
  };

  SystemGraph g(model);
  for (const char* u : {"CEO", "CTO", "CSO", "Tech.#1", "Tech.#2", "Sales.#1", "Sales.#2", "Client.#1"})
    g.add_entity(u, "User");
  for (const char* gr : {"Technical", "Sales", "Client Co."}) g.add_entity(gr, "Group");
  g.add_entity("Proj.#1", "Project");
  for (const char* f : {"Proj.#1 Resources", "Proj.#1 Specs", "Proj.#1 Deliverables", "Technical Share"})
    g.add_entity(f, "Folder");
  for (const char* f : {"Func.Spec.#1", "Test.Spec.#1", "Proj.#1 Report#1", "Tech.Notes#1"}) g.add_entity(f, "File");
  g.add_entity("Printer#1", "Printer");

  const Edge edges[] = {
      {"CEO", "CSO", "Supervises"},
      {"CSO", "Sales", "Supervises"},
      {"CTO", "Technical", "Supervises"},
      {"Tech.#1", "Technical", "Member-of"},
      {"Tech.#2", "Technical", "Member-of"},
      {"Sales.#1", "Sales", "Member-of"},
      {"Sales.#2", "Sales", "Member-of"},
      {"Client.#1", "Client Co.", "Member-of"},
      {"Tech.#1", "Proj.#1", "Participant-of"},
      {"Tech.#2", "Proj.#1", "Participant-of"},
      {"Tech.#2", "Proj.#1", "Supervises"},
      {"Sales.#2", "Proj.#1", "Participant-of"},
      {"Client Co.", "Proj.#1", "Client-of"},
      {"Client Co.", "Sales.#1", "Client-of"},
      {"Proj.#1 Resources", "Proj.#1", "Resource-for"},
      {"Proj.#1 Specs", "Proj.#1 Resources", "Member-of"},
      {"Func.Spec.#1", "Proj.#1 Specs", "Member-of"},
      {"Test.Spec.#1", "Proj.#1 Specs", "Member-of"},
      {"Proj.#1 Deliverables", "Proj.#1", "Deliverable-for"},
      {"Proj.#1 Report#1", "Proj.#1 Deliverables", "Member-of"},
      {"Technical Share", "Technical", "Resource-for"},
      {"Tech.Notes#1", "Technical Share", "Member-of"},
      {"Printer#1", "Technical", "Resource-for"},
  };
  for (const auto& e : edges) g.add_edge(e.from, e.to, e.label);

  AuthorizationSystem sys;
  sys.pms = MatchingStrategy::AllMatch;
  sys.crs = ConflictStrategy::FirstMatch;
  sys.principal_rules = {
      rule(model, "C . ~D . (~M)+", "Deliverable Client"),
      rule(model, "S+ . ~M . S . ~D", "Deliverable Reviewer"),
      rule(model, "S+ . ~M . S . ~D . (~M)+", "Deliverable Reviewer"),
      rule(model, "S . ~D", "Deliverable Supervisor"),
      rule(model, "S . ~D . (~M)+", "Deliverable Supervisor"),
      rule(model, "P . ~D", "Deliverable User"),
      rule(model, "P . ~D . (~M)+", "Deliverable User"),
      rule(model, "S . ~R", "Project Resource Supervisor"),
      rule(model, "S . ~R . (~M)+", "Project Resource Supervisor"),
      rule(model, "P . ~R", "Project Resource User"),
      rule(model, "P . ~R . (~M)+", "Project Resource User"),
      rule(model, "M . ~R", "Team Resource User"),
  };
  sys.auth_rules = {
      grant("Deliverable Client", std::nullopt, "read", true),
      grant("Deliverable Reviewer", std::nullopt, "read", true),
      grant("Deliverable Supervisor", std::nullopt, "read", true),
      grant("Deliverable Supervisor", std::nullopt, "write", true),
      grant("Deliverable User", std::nullopt, "read", true),
      grant("Project Resource Supervisor", std::nullopt, "read", true),
      grant("Project Resource Supervisor", std::nullopt, "write", true),
      grant("Project Resource User", std::nullopt, "read", true),
      grant("Project Resource User", std::string("Func.Spec.#1"), "write", false),
      grant("Project Resource User", std::nullopt, "write", true),
      grant("Team Resource User", std::nullopt, "write", true),
  };
  sys.system_default = Decision::Deny;

  std::vector<Request> requests = {
      {"Tech.#2", "Test.Spec.#1", "read"},
      {"Tech.#2", "Func.Spec.#1", "write"},
      {"Sales.#2", "Func.Spec.#1", "write"},
      {"CTO", "Proj.#1 Report#1", "read"},
      {"CEO", "Proj.#1 Report#1", "read"},
  };
  return Workspace{std::move(g), std::move(sys), std::move(requests)};
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"unix", "rbac", "corporate"};
  return names;
}

std::optional<Workspace> fixture_by_name(std::string_view name) {
  if (name == "unix") return unix_fixture();
  if (name == "rbac") return rbac_fixture();
  if (name == "corporate") return corporate_fixture();
  return std::nullopt;
}

}  // namespace relac
