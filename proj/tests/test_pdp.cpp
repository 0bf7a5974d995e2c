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

#include "relac/fixtures.hpp"
#include "relac/pdp.hpp"
#include "relac/random_instances.hpp"

using relac::ConflictStrategy;
using relac::Decision;
using relac::DefaultStage;
using relac::Resolution;

namespace {

using PD = std::vector<bool>;
const ConflictStrategy kAll[] = {ConflictStrategy::FirstMatch, ConflictStrategy::DenyOverride,
                                 ConflictStrategy::AllowOverride};

}  // namespace

TEST_CASE("possible_decisions") {
  auto ws = relac::corporate_fixture();
  const auto& pa = ws.system.auth_rules;
  CHECK(relac::possible_decisions({"Project Resource Supervisor", "Project Resource User"}, "Func.Spec.#1", "write",
                                  pa) == PD{true, false});
  CHECK(relac::possible_decisions({"Project Resource User"}, "Func.Spec.#1", "write", pa) == PD{false});
  CHECK(relac::possible_decisions({"Project Resource User"}, "Test.Spec.#1", "write", pa) == PD{true});
  CHECK(relac::possible_decisions({}, "Func.Spec.#1", "write", pa).empty());
  CHECK(relac::possible_decisions({"Team Resource User"}, "Func.Spec.#1", "read", pa).empty());
}

TEST_CASE("resolve") {
  CHECK(relac::resolve({true, false}, ConflictStrategy::FirstMatch)->decision == Decision::Allow);
  CHECK(relac::resolve({true, false}, ConflictStrategy::FirstMatch)->resolution == Resolution::FirstMatch);
  CHECK(relac::resolve({false, true}, ConflictStrategy::FirstMatch)->decision == Decision::Deny);
  CHECK(relac::resolve({true, false}, ConflictStrategy::DenyOverride)->decision == Decision::Deny);
  CHECK(relac::resolve({false, true}, ConflictStrategy::AllowOverride)->decision == Decision::Allow);
  for (auto crs : kAll) {
    CHECK_FALSE(relac::resolve({}, crs).has_value());
    CHECK(relac::resolve({true}, crs)->decision == Decision::Allow);
    CHECK(relac::resolve({false}, crs)->decision == Decision::Deny);
    CHECK(relac::resolve({false}, crs)->resolution == Resolution::Unanimous);
  }
}

TEST_CASE("property: conflict resolution laws") {
  const std::vector<PD> all = {{true}, {false}, {true, false}, {false, true}};
  for (const auto& pd : all) {
    bool has0 = std::find(pd.begin(), pd.end(), false) != pd.end();
    bool has1 = std::find(pd.begin(), pd.end(), true) != pd.end();
    CHECK((relac::resolve(pd, ConflictStrategy::DenyOverride)->decision == Decision::Deny) == has0);
    CHECK((relac::resolve(pd, ConflictStrategy::AllowOverride)->decision == Decision::Allow) == has1);
    CHECK(relac::resolve(pd, ConflictStrategy::FirstMatch)->decision == (pd.front() ? Decision::Allow : Decision::Deny));
  }
}

TEST_CASE("apply_defaults") {
  relac::AuthorizationSystem sys;
  sys.system_default = Decision::Deny;
  CHECK(relac::apply_defaults(DefaultStage::NoPrincipals, "s", "o", sys).resolution == Resolution::SystemDefault);
  sys.subject_defaults["s"] = Decision::Allow;
  auto r = relac::apply_defaults(DefaultStage::NoPrincipals, "s", "o", sys);
  CHECK(r.decision == Decision::Allow);
  CHECK(r.resolution == Resolution::SubjectDefault);
  sys.subject_defaults["s"] = Decision::Deny;
  sys.object_defaults["o"] = Decision::Allow;
  r = relac::apply_defaults(DefaultStage::NoDecision, "s", "o", sys);
  CHECK(r.decision == Decision::Allow);
  CHECK(r.resolution == Resolution::ObjectDefault);
  CHECK(relac::apply_defaults(DefaultStage::NoPrincipals, "s", "o", sys).decision == Decision::Deny);
  CHECK(relac::apply_defaults(DefaultStage::NoPrincipals, "x", "o", sys).resolution == Resolution::ObjectDefault);
}

TEST_CASE("evaluate corporate sample requests") {
  auto ws = relac::corporate_fixture();
  struct Row {
    relac::Request q;
    PD pd;
    Decision outcome;
  };
  const Row rows[] = {
      {{"Tech.#2", "Test.Spec.#1", "read"}, {true}, Decision::Allow},
      {{"Tech.#2", "Func.Spec.#1", "write"}, {true, false}, Decision::Allow},
      {{"Sales.#2", "Func.Spec.#1", "write"}, {false}, Decision::Deny},
      {{"CTO", "Proj.#1 Report#1", "read"}, {true}, Decision::Allow},
      {{"CEO", "Proj.#1 Report#1", "read"}, {}, Decision::Deny},
  };
  for (const auto& row : rows) {
    auto t = relac::evaluate(ws.graph, ws.system, row.q);
    CHECK(t.possible_decisions == row.pd);
    CHECK(t.outcome == row.outcome);
  }
  auto last = relac::evaluate(ws.graph, ws.system, rows[4].q);
  CHECK(last.resolution == Resolution::SystemDefault);
  CHECK(last.default_stage == DefaultStage::NoPrincipals);
  CHECK(relac::evaluate(ws.graph, ws.system, rows[1].q).resolution == Resolution::FirstMatch);

  CHECK_THROWS_AS(relac::evaluate(ws.graph, ws.system, {"Nobody", "CEO", "read"}), relac::RequestError);
  CHECK_THROWS_AS(relac::evaluate(ws.graph, ws.system, {"CEO", "Nothing", "read"}), relac::RequestError);
}

TEST_CASE("exception pattern holds under every strategy") {
  auto ws = relac::corporate_fixture();
  for (auto crs : kAll) {
    ws.system.crs = crs;
    CHECK(relac::evaluate(ws.graph, ws.system, {"Sales.#2", "Func.Spec.#1", "write"}).outcome == Decision::Deny);
    CHECK(relac::evaluate(ws.graph, ws.system, {"Sales.#2", "Test.Spec.#1", "write"}).outcome == Decision::Allow);
  }
}

TEST_CASE("property: totality and subject-default independence") {
  relac::Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    relac::Workspace ws = relac::random_workspace(rng);
    for (const auto& q : ws.requests) {
      auto t = relac::evaluate(ws.graph, ws.system, q);
      CHECK((t.outcome == Decision::Allow || t.outcome == Decision::Deny));
      if (t.matched_principals.empty()) continue;
      auto flipped = ws.system;
      flipped.subject_defaults[q.subject] =
          t.outcome == Decision::Allow ? Decision::Deny : Decision::Allow;
      CHECK(relac::evaluate(ws.graph, flipped, q).outcome == t.outcome);
    }
  }
}
