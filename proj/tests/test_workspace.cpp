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

#include <doctest.h>

#include <string>

#include "relac/fixtures.hpp"
#include "relac/random_instances.hpp"
#include "relac/workspace.hpp"

using nlohmann::json;
using relac::WorkspaceError;

namespace {

std::vector<std::string> violations_of(const std::string& text) {
  try {
    relac::parse_workspace(text);
  } catch (const WorkspaceError& e) {
    return e.violations();
  }
  return {};
}

json corporate_json() { return json::parse(relac::dump_workspace(relac::corporate_fixture())); }

bool mentions(const std::vector<std::string>& vs, const std::string& needle) {
  for (const auto& v : vs)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("shipped fixtures validate and round-trip") {
  for (const auto& name : relac::fixture_names()) {
    auto ws = relac::fixture_by_name(name);
    REQUIRE(ws.has_value());
    CHECK(relac::validate_workspace(*ws).empty());
    std::string text = relac::dump_workspace(*ws);
    relac::Workspace back = relac::parse_workspace(text);
    CHECK(relac::dump_workspace(back) == text);
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
  }
  CHECK_FALSE(relac::fixture_by_name("vms").has_value());
}

TEST_CASE("fixture shapes") {
  auto corp = relac::parse_workspace(relac::dump_workspace(relac::corporate_fixture()));
  CHECK(corp.system.principal_rules.size() == 12);
  CHECK(corp.system.auth_rules.size() == 11);
  CHECK(corp.requests.size() == 5);
  CHECK(corp.system.pms == relac::MatchingStrategy::AllMatch);
  CHECK(corp.system.crs == relac::ConflictStrategy::FirstMatch);
  CHECK(corp.system.system_default == relac::Decision::Deny);

  auto unix_ws = relac::unix_fixture();
  REQUIRE(unix_ws.system.principal_rules.size() == 3);
  CHECK(unix_ws.system.principal_rules.back().is_top());
  CHECK(unix_ws.system.principal_rules.back().principal == "world");
  CHECK(unix_ws.model().types == std::set<std::string>{"user", "group", "object"});
  CHECK(unix_ws.model().labels == std::set<std::string>{"uo", "ug", "go"});
}

TEST_CASE("parse errors carry a location") {
  try {
    relac::parse_workspace("");
    FAIL("empty text accepted");
  } catch (const WorkspaceError& e) {
    CHECK(e.kind() == WorkspaceError::Kind::Parse);
  }
  try {
    relac::parse_workspace("{\n  \"version\": 1,\n  \"model\": [}\n");
    FAIL("bad json accepted");
  } catch (const WorkspaceError& e) {
    CHECK(e.kind() == WorkspaceError::Kind::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(relac::load_workspace("/nonexistent/ws.json"), WorkspaceError);
}

TEST_CASE("negative corpus") {
  json doc = corporate_json();
  auto& rules = doc["authorization_system"]["principal_rules"];
  rules.insert(rules.begin(), json{{"path", "TOP"}, {"principal", "world"}});
  CHECK(mentions(violations_of(doc.dump()), "TOP"));

  doc = corporate_json();
  doc["graph"]["edges"].push_back({{"from", "CEO"}, {"to", "CTO"}, {"label", "Client-of"}});
  CHECK(mentions(violations_of(doc.dump()), "Client-of"));

  doc = corporate_json();
  doc["authorization_system"]["principal_rules"][0]["path"] = "C . ~Q";
  CHECK(mentions(violations_of(doc.dump()), "Q"));

  doc = corporate_json();
  doc["authorization_system"]["principal_rules"][0]["path"] = "C*";
  CHECK(!violations_of(doc.dump()).empty());

  doc = corporate_json();
  doc["authorization_system"]["auth_rules"][0]["object"] = "Ghost";
  CHECK(mentions(violations_of(doc.dump()), "Ghost"));

  doc = corporate_json();
  doc["authorization_system"]["defaults"]["subjects"]["Ghost"] = "allow";
  CHECK(mentions(violations_of(doc.dump()), "Ghost"));

  doc = corporate_json();
  doc["authorization_system"]["defaults"].erase("system");
  CHECK(mentions(violations_of(doc.dump()), "system"));

  doc = corporate_json();
  doc["authorization_system"]["pms"] = "SomeMatch";
  CHECK(mentions(violations_of(doc.dump()), "SomeMatch"));

  doc = corporate_json();
  doc["model"]["symmetric"].push_back("Sibling-of");
  CHECK(mentions(violations_of(doc.dump()), "Sibling-of"));

  doc = corporate_json();
  doc["graph"]["entities"].push_back({{"id", "CEO"}, {"type", "User"}});
  CHECK(mentions(violations_of(doc.dump()), "duplicate"));

  doc = corporate_json();
  doc["version"] = 7;
  CHECK(mentions(violations_of(doc.dump()), "version"));

  // Several problems are all reported.
  doc = corporate_json();
  doc["authorization_system"]["auth_rules"][0]["object"] = "Ghost";
  doc["graph"]["edges"].push_back({{"from", "CEO"}, {"to", "CTO"}, {"label", "Client-of"}});
  CHECK(violations_of(doc.dump()).size() == 2);
}

TEST_CASE("decision traces round-trip through JSON") {
  relac::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto ws = relac::random_workspace(rng);
    for (const auto& q : ws.requests) {
      auto t = relac::evaluate(ws.graph, ws.system, q);
      json j = relac::trace_to_json(t);
      auto back = relac::trace_from_json(json::parse(j.dump(2)));
      CHECK(relac::trace_to_json(back) == j);
      CHECK(back.request == t.request);
      CHECK(back.outcome == t.outcome);
    }
  }
  CHECK_THROWS_AS(relac::trace_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("random workspaces survive save and load") {
  relac::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    auto ws = relac::random_workspace(rng);
    std::string text = relac::dump_workspace(ws);
    CHECK(relac::dump_workspace(relac::parse_workspace(text)) == text);
  }
}
