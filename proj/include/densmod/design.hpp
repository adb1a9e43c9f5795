// Copyright 2026 The densmod Authors. All Rights Reserved.
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

#ifndef DENSMOD_DESIGN_HPP_
#define DENSMOD_DESIGN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace densmod {

/// A declared Structor or Functional: a short id token plus free-text name.
struct Entity {
  std::string id;
  std::string display_name;

  friend bool operator==(const Entity&, const Entity&) = default;
};

/// One `provides` edge, by declaration index into the structor and
/// functional lists.
struct ProvidesEdge {
  std::size_t structor;
  std::size_t functional;

  friend bool operator==(const ProvidesEdge&, const ProvidesEdge&) = default;
};

/// True when `token` matches `[A-Za-z_][A-Za-z0-9_-]*`.
bool is_valid_id(std::string_view token);

/// The bipartite Structor/Functional graph of a software design.
///
/// Immutable once built. `create` enforces every structural invariant:
/// known endpoints, unique ids across both sets, no repeated edges, at
/// least one structor and one functional. Edges only ever join a structor
/// to a functional, so the graph is bipartite by construction.
class SystemDesign {
 public:
  /// Throws DesignError when an invariant does not hold.
  static SystemDesign create(std::string name, std::vector<Entity> structors,
                             std::vector<Entity> functionals,
                             std::vector<ProvidesEdge> provides,
                             std::optional<std::vector<std::string>> sequence = std::nullopt);

  /// Same as `create` but with edges given as (structor id, functional id).
  static SystemDesign from_ids(
      std::string name, std::vector<Entity> structors, std::vector<Entity> functionals,
      const std::vector<std::pair<std::string, std::string>>& provides,
      std::optional<std::vector<std::string>> sequence = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<Entity>& structors() const { return structors_; }
  const std::vector<Entity>& functionals() const { return functionals_; }
  /// Edges in declaration order.
  const std::vector<ProvidesEdge>& provides() const { return provides_; }
  /// Left-to-right box order for designs lowered from circuits. Metadata only.
  const std::optional<std::vector<std::string>>& sequence() const { return sequence_; }

  std::optional<std::size_t> find_structor(std::string_view id) const;
  std::optional<std::size_t> find_functional(std::string_view id) const;

  friend bool operator==(const SystemDesign&, const SystemDesign&) = default;

 private:
  SystemDesign() = default;

  std::string name_;
  std::vector<Entity> structors_;
  std::vector<Entity> functionals_;
  std::vector<ProvidesEdge> provides_;
  std::optional<std::vector<std::string>> sequence_;
};

enum class VertexKind { kFunctional, kStructor };

/// Canonical vertex numbering: functionals 0..m-1 then structors m..N-1,
/// each in declaration order.
class VertexOrder {
 public:
  explicit VertexOrder(const SystemDesign& design);

  std::size_t size() const { return ids_.size(); }
  std::size_t functional_count() const { return functional_count_; }
  std::size_t structor_count() const { return ids_.size() - functional_count_; }

  std::size_t functional_index(std::size_t k) const { return k; }
  std::size_t structor_index(std::size_t k) const { return functional_count_ + k; }

  VertexKind kind(std::size_t vertex) const {
    return vertex < functional_count_ ? VertexKind::kFunctional : VertexKind::kStructor;
  }
  const std::string& id(std::size_t vertex) const { return ids_.at(vertex); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<std::size_t> find(std::string_view id) const;

  /// Vertex pair (functional vertex, structor vertex) of a provides edge.
  std::pair<std::size_t, std::size_t> endpoints(const ProvidesEdge& e) const {
    return {functional_index(e.functional), structor_index(e.structor)};
  }

 private:
  std::size_t functional_count_ = 0;
  std::vector<std::string> ids_;
};

/// Undirected vertex-index edge, u < v.
struct VertexEdge {
  std::size_t u;
  std::size_t v;

  friend auto operator<=>(const VertexEdge&, const VertexEdge&) = default;
};

/// All design edges as vertex pairs, sorted lexicographically.
std::vector<VertexEdge> vertex_edges(const SystemDesign& design, const VertexOrder& order);

enum class PartitionMethod { kOracle, kSpectral, kProjector, kFiedlerSplit };

std::string_view to_string(PartitionMethod method);

/// Disjoint cover of 0..N-1, kept in canonical form: every group sorted
/// ascending and groups sorted by smallest member.
class VertexPartition {
 public:
  /// Throws std::invalid_argument unless the groups exactly cover 0..N-1.
  VertexPartition(std::size_t vertex_count, std::vector<std::vector<std::size_t>> groups,
                  PartitionMethod method);

  /// Partition from a labeling: vertices with equal labels share a group.
  static VertexPartition from_labels(const std::vector<std::size_t>& labels,
                                     PartitionMethod method);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }
  PartitionMethod method() const { return method_; }

  /// Index of the group holding `vertex`.
  std::size_t group_of(std::size_t vertex) const;

  /// Same vertex universe and same groups, regardless of method.
  bool same_groups(const VertexPartition& other) const {
    return vertex_count_ == other.vertex_count_ && groups_ == other.groups_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<std::size_t>> groups_;
  PartitionMethod method_;
};

/// Exact connected components of the design graph, by union-find.
/// Isolated vertices come out as singleton groups.
VertexPartition connected_components(const SystemDesign& design);

/// A functional offered by two or more structors.
struct InheritanceFinding {
  std::string functional;
  std::vector<std::string> structors;  // declaration order

  friend bool operator==(const InheritanceFinding&, const InheritanceFinding&) = default;
};

/// Every functional with at least two providers, in functional declaration order.
std::vector<InheritanceFinding> infer_inheritance(const SystemDesign& design);

/// Vertices with no incident edge, ascending.
std::vector<std::size_t> isolated_vertices(const SystemDesign& design, const VertexOrder& order);

}  // namespace densmod

#endif  // DENSMOD_DESIGN_HPP_
