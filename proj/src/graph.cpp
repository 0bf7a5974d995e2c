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

#include "relac/graph.hpp"

#include <algorithm>
#include <utility>

namespace relac {

bool SystemModel::permits(const std::string& from_type, const std::string& to_type,
                          const std::string& label) const {
  if (permissible.count(PermissibleEdge{from_type, to_type, label}) > 0) return true;
  // A symmetric relationship is undirected; either orientation of the typed
  // triple admits it.
  return is_symmetric(label) && permissible.count(PermissibleEdge{to_type, from_type, label}) > 0;
}

std::vector<std::string> validate_model(const SystemModel& model) {
  std::vector<std::string> out;
  for (const auto& s : model.symmetric) {
    if (model.labels.count(s) == 0) out.push_back("symmetric label '" + s + "' is not a relationship label");
  }
  for (const auto& p : model.permissible) {
    std::string where = "permissible edge (" + p.from_type + ", " + p.to_type + ", " + p.label + ")";
    if (model.types.count(p.from_type) == 0) out.push_back(where + " uses unknown type '" + p.from_type + "'");
    if (model.types.count(p.to_type) == 0) out.push_back(where + " uses unknown type '" + p.to_type + "'");
    if (model.labels.count(p.label) == 0) out.push_back(where + " uses unknown label '" + p.label + "'");
  }
  for (const auto& [alias, target] : model.aliases) {
    if (model.labels.count(target) == 0)
      out.push_back("alias '" + alias + "' refers to unknown label '" + target + "'");
    if (model.labels.count(alias) > 0 && alias != target)
      out.push_back("alias '" + alias + "' shadows a relationship label");
  }
  return out;
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Out:
      return "out";
    case Direction::In:
      return "in";
    case Direction::Sym:
      return "sym";
  }
  return "?";
}

SystemGraph::SystemGraph(SystemModel model) : model_(std::move(model)) {}

SystemGraph SystemGraph::assemble(SystemModel model,
                                  const std::vector<std::pair<std::string, std::string>>& entities,
                                  const std::vector<Edge>& edges) {
  SystemGraph g(std::move(model));
  for (const auto& [id, type] : entities) {
    g.entities_.emplace(id, type);
    g.incident_.try_emplace(id);
  }
  for (const auto& e : edges) {
    Edge stored = g.stored_form(e.from, e.to, e.label);
    if (g.edges_.insert(stored).second) g.index_edge(stored);
  }
  return g;
}

std::optional<std::string> SystemGraph::type_of(const std::string& id) const {
  auto it = entities_.find(id);
  if (it == entities_.end()) return std::nullopt;
  return it->second;
}

void SystemGraph::add_entity(const std::string& id, const std::string& type) {
  if (id.empty()) throw GraphError("entity id must not be empty");
  if (model_.types.count(type) == 0) throw GraphError("entity '" + id + "' has unknown type '" + type + "'");
  if (!entities_.emplace(id, type).second) throw GraphError("duplicate entity id '" + id + "'");
  incident_.try_emplace(id);
  ++version_;
}

bool SystemGraph::add_edge(const std::string& from, const std::string& to, const std::string& label) {
  auto from_type = type_of(from);
  auto to_type = type_of(to);
  if (!from_type) throw GraphError("edge references unknown entity '" + from + "'");
  if (!to_type) throw GraphError("edge references unknown entity '" + to + "'");
  if (model_.labels.count(label) == 0) throw GraphError("unknown relationship label '" + label + "'");
  if (!model_.permits(*from_type, *to_type, label))
    throw GraphError("edge (" + from + ", " + to + ", " + label + ") is not permitted between types " +
                     *from_type + " and " + *to_type);
  Edge stored = stored_form(from, to, label);
  if (!edges_.insert(stored).second) return false;
  index_edge(stored);
  ++version_;
  return true;
}

bool SystemGraph::remove_edge(const std::string& from, const std::string& to, const std::string& label) {
  Edge stored = stored_form(from, to, label);
  if (edges_.erase(stored) == 0) return false;
  unindex_edge(stored);
  ++version_;
  return true;
}

void SystemGraph::remove_entity(const std::string& id) {
  if (!contains(id)) throw GraphError("unknown entity '" + id + "'");
  std::vector<Edge> doomed;
  for (const auto& e : edges_) {
    if (e.from == id || e.to == id) doomed.push_back(e);
  }
  for (const auto& e : doomed) {
    edges_.erase(e);
    unindex_edge(e);
  }
  entities_.erase(id);
  incident_.erase(id);
  ++version_;
}

const std::vector<IncidentEdge>& SystemGraph::incident(const std::string& node) const {
  if (!contains(node)) throw GraphError("unknown entity '" + node + "'");
  return incident_.at(node);
}

bool SystemGraph::has_edge(const std::string& from, const std::string& to, const std::string& label) const {
  return edges_.count(stored_form(from, to, label)) > 0;
}

Edge SystemGraph::stored_form(const std::string& from, const std::string& to, const std::string& label) const {
  if (model_.is_symmetric(label) && to < from) return Edge{to, from, label};
  return Edge{from, to, label};
}

namespace {

void insert_sorted(std::vector<IncidentEdge>& list, IncidentEdge item) {
  auto pos = std::lower_bound(list.begin(), list.end(), item);
  list.insert(pos, std::move(item));
}

void erase_one(std::vector<IncidentEdge>& list, const IncidentEdge& item) {
  auto pos = std::lower_bound(list.begin(), list.end(), item);
  if (pos != list.end() && *pos == item) list.erase(pos);
}

}  // namespace

void SystemGraph::index_edge(const Edge& e) {
  if (model_.is_symmetric(e.label)) {
    insert_sorted(incident_[e.from], {e.to, e.label, Direction::Sym});
    if (e.from != e.to) insert_sorted(incident_[e.to], {e.from, e.label, Direction::Sym});
    return;
  }
  insert_sorted(incident_[e.from], {e.to, e.label, Direction::Out});
  insert_sorted(incident_[e.to], {e.from, e.label, Direction::In});
}

void SystemGraph::unindex_edge(const Edge& e) {
  auto drop = [this](const std::string& node, const IncidentEdge& item) {
    if (auto it = incident_.find(node); it != incident_.end()) erase_one(it->second, item);
  };
  if (model_.is_symmetric(e.label)) {
    drop(e.from, {e.to, e.label, Direction::Sym});
    if (e.from != e.to) drop(e.to, {e.from, e.label, Direction::Sym});
    return;
  }
  drop(e.from, {e.to, e.label, Direction::Out});
  drop(e.to, {e.from, e.label, Direction::In});
}

std::vector<std::string> validate_graph(const SystemGraph& graph) {
  const SystemModel& model = graph.model();
  std::vector<std::string> out;
  for (const auto& [id, type] : graph.entities()) {
    if (model.types.count(type) == 0) out.push_back("entity '" + id + "' has unknown type '" + type + "'");
  }
  for (const auto& e : graph.edges()) {
    std::string where = "edge (" + e.from + ", " + e.to + ", " + e.label + ")";
    auto from_type = graph.type_of(e.from);
    auto to_type = graph.type_of(e.to);
    bool ok = true;
    if (!from_type) {
      out.push_back(where + " references unknown entity '" + e.from + "'");
      ok = false;
    }
    if (!to_type) {
      out.push_back(where + " references unknown entity '" + e.to + "'");
      ok = false;
    }
    if (model.labels.count(e.label) == 0) {
      out.push_back(where + " uses unknown label '" + e.label + "'");
      ok = false;
    }
    if (ok && !model.permits(*from_type, *to_type, e.label)) {
      out.push_back(where + " is not permitted: (" + *from_type + ", " + *to_type + ", " + e.label +
                    ") is not in the permissible relationship graph");
    }
  }
  return out;
}

std::vector<IncidentEdge> edges_incident(const SystemGraph& graph, const std::string& node) {
  return graph.incident(node);
}

}  // namespace relac
