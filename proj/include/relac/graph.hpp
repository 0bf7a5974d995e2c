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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relac/path_condition.hpp"

namespace relac {

// A typed edge permitted by the system model.
struct PermissibleEdge {
  std::string from_type;
  std::string to_type;
  std::string label;

  friend auto operator<=>(const PermissibleEdge&, const PermissibleEdge&) = default;
};

// Vocabulary of a system: entity types, relationship labels (some of them
// symmetric) and the permissible relationship graph over the types.
struct SystemModel {
  std::set<std::string> types;
  std::set<std::string> labels;
  std::set<std::string> symmetric;
  std::set<PermissibleEdge> permissible;
  // Short spellings accepted in path conditions, e.g. "S" for "Supervises".
  std::map<std::string, std::string> aliases;

  bool is_symmetric(const std::string& label) const { return symmetric.count(label) > 0; }
  bool permits(const std::string& from_type, const std::string& to_type, const std::string& label) const;
  LabelVocabulary vocabulary() const { return {labels, aliases}; }
};

// Returns one human-readable message per violated invariant.
std::vector<std::string> validate_model(const SystemModel& model);

struct Edge {
  std::string from;
  std::string to;
  std::string label;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Out < In < Sym, the order incident edges are reported in.
enum class Direction : std::uint8_t { Out, In, Sym };

const char* to_string(Direction d);

struct IncidentEdge {
  std::string neighbor;
  std::string label;
  Direction direction;

  friend auto operator<=>(const IncidentEdge&, const IncidentEdge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The entity multigraph. Symmetric edges are stored once with the smaller
// endpoint first; duplicate (from, to, label) triples collapse.
//
// Mutators validate against the model and throw GraphError on ill-formed
// input, so a graph built only through them is always well-formed. A
// SystemGraph is a value: copy it to take a snapshot.
class SystemGraph {
 public:
  explicit SystemGraph(SystemModel model = {});

  // Builds a graph without validation. Used by loaders that report problems
  // through validate_graph instead of failing on the first one.
  static SystemGraph assemble(SystemModel model, const std::vector<std::pair<std::string, std::string>>& entities,
                              const std::vector<Edge>& edges);

  void add_entity(const std::string& id, const std::string& type);
  // Returns false if the edge was already present.
  bool add_edge(const std::string& from, const std::string& to, const std::string& label);
  bool remove_edge(const std::string& from, const std::string& to, const std::string& label);
  // Also drops every incident edge.
  void remove_entity(const std::string& id);

  const SystemModel& model() const { return model_; }
  const std::map<std::string, std::string>& entities() const { return entities_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool contains(const std::string& id) const { return entities_.count(id) > 0; }
  std::optional<std::string> type_of(const std::string& id) const;
  std::size_t entity_count() const { return entities_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Incremented by every successful mutation.
  std::uint64_t version() const { return version_; }

  // Incident edges in (direction, neighbor, label) order. Throws GraphError
  // for an unknown entity.
  const std::vector<IncidentEdge>& incident(const std::string& node) const;

  // Whether (from, to, label) is in E; symmetric labels hold in both
  // orientations.
  bool has_edge(const std::string& from, const std::string& to, const std::string& label) const;

 private:
  Edge stored_form(const std::string& from, const std::string& to, const std::string& label) const;
  void index_edge(const Edge& e);
  void unindex_edge(const Edge& e);

  SystemModel model_;
  std::map<std::string, std::string> entities_;
  std::set<Edge> edges_;
  std::map<std::string, std::vector<IncidentEdge>> incident_;
  std::uint64_t version_ = 0;
};

std::vector<std::string> validate_graph(const SystemGraph& graph);

// Free-function form of SystemGraph::incident, returning a copy.
std::vector<IncidentEdge> edges_incident(const SystemGraph& graph, const std::string& node);

inline bool has_edge(const SystemGraph& graph, const std::string& from, const std::string& to,
                     const std::string& label) {
  return graph.has_edge(from, to, label);
}

}  // namespace relac
