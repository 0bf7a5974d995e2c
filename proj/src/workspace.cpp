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

#include "relac/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace relac {

using nlohmann::json;

WorkspaceError::WorkspaceError(Kind kind, const std::string& message, std::vector<std::string> violations)
    : std::runtime_error(message), kind_(kind), violations_(std::move(violations)) {}

namespace {

constexpr const char* kTop = "TOP";
constexpr const char* kWildcard = "*";

// Schema reader that records problems instead of stopping at the first.
class Reader {
 public:
  std::vector<std::string> violations;

  const json* object(const json& parent, const char* key, const std::string& where, bool required = true) {
    auto it = parent.find(key);
    if (it == parent.end()) {
      if (required) violations.push_back(where + ": missing key '" + key + "'");
      return nullptr;
    }
    if (!it->is_object()) {
      violations.push_back(where + "." + key + ": expected an object");
      return nullptr;
    }
    return &*it;
  }

  const json* array(const json& parent, const char* key, const std::string& where, bool required = true) {
    auto it = parent.find(key);
    if (it == parent.end()) {
      if (required) violations.push_back(where + ": missing key '" + key + "'");
      return nullptr;
    }
    if (!it->is_array()) {
      violations.push_back(where + "." + key + ": expected an array");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const json& parent, const char* key, const std::string& where) {
    auto it = parent.find(key);
    if (it == parent.end()) {
      violations.push_back(where + ": missing key '" + key + "'");
      return std::nullopt;
    }
    if (!it->is_string()) {
      violations.push_back(where + "." + key + ": expected a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  std::set<std::string> string_set(const json& parent, const char* key, const std::string& where) {
    std::set<std::string> out;
    const json* arr = array(parent, key, where);
    if (arr == nullptr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& item = (*arr)[i];
      if (!item.is_string()) {
        violations.push_back(where + "." + key + "[" + std::to_string(i) + "]: expected a string");
        continue;
      }
      out.insert(item.get<std::string>());
    }
    return out;
  }

  std::map<std::string, std::string> string_map(const json& parent, const char* key, const std::string& where,
                                                bool required) {
    std::map<std::string, std::string> out;
    const json* obj = object(parent, key, where, required);
    if (obj == nullptr) return out;
    for (const auto& [k, v] : obj->items()) {
      if (!v.is_string()) {
        violations.push_back(where + "." + key + "." + k + ": expected a string");
        continue;
      }
      out.emplace(k, v.get<std::string>());
    }
    return out;
  }
};

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

SystemModel read_model(Reader& r, const json& doc) {
  SystemModel model;
  const json* m = r.object(doc, "model", "workspace");
  if (m == nullptr) return model;
  model.types = r.string_set(*m, "types", "model");
  model.labels = r.string_set(*m, "labels", "model");
  model.symmetric = r.string_set(*m, "symmetric", "model");
  if (const json* perm = r.array(*m, "permissible", "model")) {
    for (std::size_t i = 0; i < perm->size(); ++i) {
      std::string where = "model.permissible[" + std::to_string(i) + "]";
      const json& item = (*perm)[i];
      if (!item.is_object()) {
        r.violations.push_back(where + ": expected an object");
        continue;
      }
      auto from = r.string(item, "from", where);
      auto to = r.string(item, "to", where);
      auto label = r.string(item, "label", where);
      if (from && to && label) model.permissible.insert(PermissibleEdge{*from, *to, *label});
    }
  }
  model.aliases = r.string_map(*m, "aliases", "model", false);
  return model;
}

SystemGraph read_graph(Reader& r, const json& doc, SystemModel model) {
  std::vector<std::pair<std::string, std::string>> entities;
  std::vector<Edge> edges;
  const json* g = r.object(doc, "graph", "workspace");
  if (g != nullptr) {
    std::set<std::string> ids;
    if (const json* ents = r.array(*g, "entities", "graph")) {
      for (std::size_t i = 0; i < ents->size(); ++i) {
        std::string where = "graph.entities[" + std::to_string(i) + "]";
        const json& item = (*ents)[i];
        if (!item.is_object()) {
          r.violations.push_back(where + ": expected an object");
          continue;
        }
        auto id = r.string(item, "id", where);
        auto type = r.string(item, "type", where);
        if (!id || !type) continue;
        if (id->empty()) {
          r.violations.push_back(where + ": entity id must not be empty");
          continue;
        }
        if (!ids.insert(*id).second) {
          r.violations.push_back(where + ": duplicate entity id '" + *id + "'");
          continue;
        }
        entities.emplace_back(*id, *type);
      }
    }
    if (const json* es = r.array(*g, "edges", "graph")) {
      for (std::size_t i = 0; i < es->size(); ++i) {
        std::string where = "graph.edges[" + std::to_string(i) + "]";
        const json& item = (*es)[i];
        if (!item.is_object()) {
          r.violations.push_back(where + ": expected an object");
          continue;
        }
        auto from = r.string(item, "from", where);
        auto to = r.string(item, "to", where);
        auto label = r.string(item, "label", where);
        if (from && to && label) edges.push_back(Edge{*from, *to, *label});
      }
    }
  }
  return SystemGraph::assemble(std::move(model), entities, edges);
}

std::optional<Decision> read_decision(Reader& r, const json& value, const std::string& where) {
  if (!value.is_string()) {
    r.violations.push_back(where + ": expected \"allow\" or \"deny\"");
    return std::nullopt;
  }
  auto d = decision_from_string(value.get<std::string>());
  if (!d) r.violations.push_back(where + ": expected \"allow\" or \"deny\", got \"" + value.get<std::string>() + "\"");
  return d;
}

AuthorizationSystem read_system(Reader& r, const json& doc, const SystemModel& model) {
  AuthorizationSystem sys;
  const json* a = r.object(doc, "authorization_system", "workspace");
  if (a == nullptr) return sys;
  const std::string where = "authorization_system";

  if (auto pms = r.string(*a, "pms", where)) {
    if (auto v = matching_strategy_from_string(*pms)) {
      sys.pms = *v;
    } else {
      r.violations.push_back(where + ".pms: unknown principal-matching strategy '" + *pms + "'");
    }
  }
  if (auto crs = r.string(*a, "crs", where)) {
    if (auto v = conflict_strategy_from_string(*crs)) {
      sys.crs = *v;
    } else {
      r.violations.push_back(where + ".crs: unknown conflict resolution strategy '" + *crs + "'");
    }
  }

  const LabelVocabulary vocabulary = model.vocabulary();
  if (const json* rules = r.array(*a, "principal_rules", where)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      std::string at = where + ".principal_rules[" + std::to_string(i) + "]";
      const json& item = (*rules)[i];
      if (!item.is_object()) {
        r.violations.push_back(at + ": expected an object");
        continue;
      }
      auto path = r.string(item, "path", at);
      auto principal = r.string(item, "principal", at);
      if (!path || !principal) continue;
      if (*path == kTop) {
        sys.principal_rules.push_back(PrincipalRule::top(*principal));
        continue;
      }
      try {
        sys.principal_rules.push_back(PrincipalRule{parse(*path, vocabulary), *principal});
      } catch (const PathError& e) {
        r.violations.push_back(at + ".path: " + e.what());
      }
    }
  }

  if (const json* rules = r.array(*a, "auth_rules", where)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      std::string at = where + ".auth_rules[" + std::to_string(i) + "]";
      const json& item = (*rules)[i];
      if (!item.is_object()) {
        r.violations.push_back(at + ": expected an object");
        continue;
      }
      auto principal = r.string(item, "principal", at);
      auto object = r.string(item, "object", at);
      auto action = r.string(item, "action", at);
      auto allow = item.find("allow");
      if (allow == item.end() || !allow->is_boolean()) {
        r.violations.push_back(at + ".allow: expected a boolean");
        continue;
      }
      if (!principal || !object || !action) continue;
      AuthorizationRule rule{*principal, std::nullopt, *action, allow->get<bool>()};
      if (*object != kWildcard) rule.object = *object;
      sys.auth_rules.push_back(std::move(rule));
    }
  }

  if (const json* defaults = r.object(*a, "defaults", where)) {
    auto sd = defaults->find("system");
    if (sd == defaults->end()) {
      r.violations.push_back(where + ".defaults: a system-wide default is required");
    } else if (auto d = read_decision(r, *sd, where + ".defaults.system")) {
      sys.system_default = *d;
    }
    for (const char* level : {"subjects", "objects"}) {
      const json* table = r.object(*defaults, level, where + ".defaults", false);
      if (table == nullptr) continue;
      auto& target = std::string_view(level) == "subjects" ? sys.subject_defaults : sys.object_defaults;
      for (const auto& [id, value] : table->items()) {
        if (auto d = read_decision(r, value, where + ".defaults." + level + "." + id)) target.emplace(id, *d);
      }
    }
  }
  return sys;
}

std::vector<Request> read_requests(Reader& r, const json& doc) {
  std::vector<Request> out;
  const json* reqs = r.array(doc, "requests", "workspace", false);
  if (reqs == nullptr) return out;
  for (std::size_t i = 0; i < reqs->size(); ++i) {
    std::string where = "requests[" + std::to_string(i) + "]";
    const json& item = (*reqs)[i];
    if (!item.is_object()) {
      r.violations.push_back(where + ": expected an object");
      continue;
    }
    auto s = r.string(item, "subject", where);
    auto o = r.string(item, "object", where);
    auto a = r.string(item, "action", where);
    if (s && o && a) out.push_back(Request{*s, *o, *a});
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_workspace(const Workspace& ws) {
  std::vector<std::string> out = validate_model(ws.model());
  for (auto& v : validate_graph(ws.graph)) out.push_back(std::move(v));
  for (auto& v : validate_principal_rules(ws.system.principal_rules)) out.push_back(std::move(v));
  const auto& labels = ws.model().labels;
  for (std::size_t i = 0; i < ws.system.principal_rules.size(); ++i) {
    const auto& rule = ws.system.principal_rules[i];
    if (rule.is_top()) continue;
    {
      // Conditions built in code bypass the parser's vocabulary check.
      std::vector<PathCondition> stack{*rule.condition};
      while (!stack.empty()) {
        PathCondition pc = stack.back();
        stack.pop_back();
        switch (pc.kind()) {
          case PathKind::Edge:
            if (labels.count(pc.label()) == 0)
              out.push_back("principal-matching rule " + std::to_string(i + 1) + " uses unknown label '" +
                            pc.label() + "'");
            break;
          case PathKind::Concat:
            stack.push_back(pc.left());
            stack.push_back(pc.right());
            break;
          case PathKind::Plus:
          case PathKind::Reverse:
            stack.push_back(pc.inner());
            break;
          case PathKind::Star:
            out.push_back("principal-matching rule " + std::to_string(i + 1) + " contains a Star");
            break;
          case PathKind::Diamond:
            break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < ws.system.auth_rules.size(); ++i) {
    const auto& rule = ws.system.auth_rules[i];
    if (rule.object && !ws.graph.contains(*rule.object))
      out.push_back("authorization rule " + std::to_string(i + 1) + " names unknown object '" + *rule.object + "'");
  }
  for (const auto& [id, d] : ws.system.subject_defaults) {
    if (!ws.graph.contains(id)) out.push_back("subject default names unknown entity '" + id + "'");
  }
  for (const auto& [id, d] : ws.system.object_defaults) {
    if (!ws.graph.contains(id)) out.push_back("object default names unknown entity '" + id + "'");
  }
  return out;
}

Workspace parse_workspace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw WorkspaceError(WorkspaceError::Kind::Parse,
                         "parse error at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw WorkspaceError(WorkspaceError::Kind::Parse, "workspace must be a JSON object");

  Reader r;
  auto version = doc.find("version");
  if (version == doc.end()) {
    r.violations.push_back("workspace: missing key 'version'");
  } else if (!version->is_number_integer() || version->get<int>() != kWorkspaceVersion) {
    r.violations.push_back("workspace.version: unsupported version (expected " + std::to_string(kWorkspaceVersion) +
                           ")");
  }

  SystemModel model = read_model(r, doc);
  Workspace ws{read_graph(r, doc, model), {}, {}};
  ws.system = read_system(r, doc, model);
  ws.requests = read_requests(r, doc);

  std::vector<std::string> violations = std::move(r.violations);
  for (auto& v : validate_workspace(ws)) violations.push_back(std::move(v));
  if (!violations.empty()) {
    std::string message = "invalid workspace: " + violations.front();
    if (violations.size() > 1) message += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw WorkspaceError(WorkspaceError::Kind::Invalid, message, std::move(violations));
  }
  return ws;
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError(WorkspaceError::Kind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

std::string dump_workspace(const Workspace& ws) {
  const SystemModel& model = ws.model();
  json m;
  m["types"] = model.types;
  m["labels"] = model.labels;
  m["symmetric"] = model.symmetric;
  m["permissible"] = json::array();
  for (const auto& p : model.permissible)
    m["permissible"].push_back({{"from", p.from_type}, {"to", p.to_type}, {"label", p.label}});
  if (!model.aliases.empty()) m["aliases"] = model.aliases;

  json g;
  g["entities"] = json::array();
  for (const auto& [id, type] : ws.graph.entities()) g["entities"].push_back({{"id", id}, {"type", type}});
  g["edges"] = json::array();
  for (const auto& e : ws.graph.edges()) g["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});

  const AuthorizationSystem& sys = ws.system;
  json a;
  a["pms"] = to_string(sys.pms);
  a["crs"] = to_string(sys.crs);
  a["principal_rules"] = json::array();
  for (const auto& rule : sys.principal_rules) {
    a["principal_rules"].push_back(
        {{"path", rule.is_top() ? std::string(kTop) : render(*rule.condition)}, {"principal", rule.principal}});
  }
  a["auth_rules"] = json::array();
  for (const auto& rule : sys.auth_rules) {
    a["auth_rules"].push_back({{"principal", rule.principal},
                               {"object", rule.object.value_or(kWildcard)},
                               {"action", rule.action},
                               {"allow", rule.allow}});
  }
  json defaults;
  defaults["system"] = to_string(sys.system_default);
  defaults["subjects"] = json::object();
  for (const auto& [id, d] : sys.subject_defaults) defaults["subjects"][id] = to_string(d);
  defaults["objects"] = json::object();
  for (const auto& [id, d] : sys.object_defaults) defaults["objects"][id] = to_string(d);
  a["defaults"] = std::move(defaults);

  json reqs = json::array();
  for (const auto& q : ws.requests) reqs.push_back({{"subject", q.subject}, {"object", q.object}, {"action", q.action}});

  json doc;
  doc["version"] = kWorkspaceVersion;
  doc["model"] = std::move(m);
  doc["graph"] = std::move(g);
  doc["authorization_system"] = std::move(a);
  doc["requests"] = std::move(reqs);
  return doc.dump(2) + "\n";
}

void save_workspace(const Workspace& ws, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WorkspaceError(WorkspaceError::Kind::Io, "cannot write '" + path.string() + "'");
  out << dump_workspace(ws);
  if (!out) throw WorkspaceError(WorkspaceError::Kind::Io, "failed writing '" + path.string() + "'");
}

json trace_to_json(const DecisionTrace& trace) {
  json doc;
  doc["request"] = {
      {"subject", trace.request.subject}, {"object", trace.request.object}, {"action", trace.request.action}};
  doc["matched_principals"] = trace.matched_principals;
  doc["possible_decisions"] = json::array();
  for (bool b : trace.possible_decisions) doc["possible_decisions"].push_back(b ? 1 : 0);
  doc["resolution"] = to_string(trace.resolution);
  doc["default_stage"] = trace.default_stage ? json(to_string(*trace.default_stage)) : json(nullptr);
  doc["outcome"] = to_string(trace.outcome);
  doc["rules"] = json::array();
  for (const auto& r : trace.rules) {
    doc["rules"].push_back({{"rule", r.index + 1},
                            {"principal", r.principal},
                            {"evaluated", r.evaluated},
                            {"matched", r.matched},
                            {"metrics",
                             {{"nodes_visited", r.metrics.nodes_visited},
                              {"edges_considered", r.metrics.edges_considered},
                              {"queue_peak", r.metrics.queue_peak},
                              {"pairs_processed", r.metrics.pairs_processed}}}});
  }
  return doc;
}

DecisionTrace trace_from_json(const json& doc) {
  try {
    DecisionTrace trace;
    const json& q = doc.at("request");
    trace.request = Request{q.at("subject").get<std::string>(), q.at("object").get<std::string>(),
                            q.at("action").get<std::string>()};
    trace.matched_principals = doc.at("matched_principals").get<std::vector<std::string>>();
    for (const auto& b : doc.at("possible_decisions")) {
      int v = b.get<int>();
      if (v != 0 && v != 1) throw std::invalid_argument("possible decision must be 0 or 1");
      trace.possible_decisions.push_back(v == 1);
    }
    auto resolution = resolution_from_string(doc.at("resolution").get<std::string>());
    if (!resolution) throw std::invalid_argument("unknown resolution");
    trace.resolution = *resolution;
    const json& stage = doc.at("default_stage");
    if (!stage.is_null()) {
      trace.default_stage = default_stage_from_string(stage.get<std::string>());
      if (!trace.default_stage) throw std::invalid_argument("unknown default stage");
    }
    auto outcome = decision_from_string(doc.at("outcome").get<std::string>());
    if (!outcome) throw std::invalid_argument("unknown outcome");
    trace.outcome = *outcome;
    for (const auto& r : doc.at("rules")) {
      RuleMatchRecord rec;
      rec.index = r.at("rule").get<std::size_t>() - 1;
      rec.principal = r.at("principal").get<std::string>();
      rec.evaluated = r.at("evaluated").get<bool>();
      rec.matched = r.at("matched").get<bool>();
      const json& m = r.at("metrics");
      rec.metrics.nodes_visited = m.at("nodes_visited").get<std::size_t>();
      rec.metrics.edges_considered = m.at("edges_considered").get<std::size_t>();
      rec.metrics.queue_peak = m.at("queue_peak").get<std::size_t>();
      rec.metrics.pairs_processed = m.at("pairs_processed").get<std::size_t>();
      trace.rules.push_back(std::move(rec));
    }
    return trace;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed decision trace: ") + e.what());
  }
}

}  // namespace relac
