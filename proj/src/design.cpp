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

#include "densmod/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "densmod/disjoint_sets.hpp"
#include "densmod/errors.hpp"

namespace densmod {

bool is_valid_id(std::string_view token) {
  if (token.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(token.front())) return false;
  return std::all_of(token.begin() + 1, token.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '-'; });
}

namespace {

void check_entities(const std::vector<Entity>& entities, std::string_view kind,
                    std::set<std::string, std::less<>>& seen) {
  for (const auto& e : entities) {
    if (!is_valid_id(e.id)) {
      throw DesignError("invalid " + std::string(kind) + " id '" + e.id + "'");
    }
    if (e.display_name.find_first_of("\"\n\r") != std::string::npos) {
      throw DesignError("display name of '" + e.id + "' contains a quote or line break");
    }
    if (!seen.insert(e.id).second) {
      throw DesignError("duplicate id '" + e.id + "'");
    }
  }
}

std::optional<std::size_t> find_entity(const std::vector<Entity>& entities, std::string_view id) {
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].id == id) return i;
  }
  return std::nullopt;
}

}  // namespace

SystemDesign SystemDesign::create(std::string name, std::vector<Entity> structors,
                                  std::vector<Entity> functionals,
                                  std::vector<ProvidesEdge> provides,
                                  std::optional<std::vector<std::string>> sequence) {
  if (structors.empty() || functionals.empty()) {
    throw DesignError("empty design: need at least one structor and one functional");
  }
  std::set<std::string, std::less<>> seen;
  check_entities(structors, "structor", seen);
  check_entities(functionals, "functional", seen);

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : provides) {
    if (e.structor >= structors.size() || e.functional >= functionals.size()) {
      throw DesignError("provides edge references an undeclared vertex");
    }
    if (!edges.emplace(e.structor, e.functional).second) {
      throw DesignError("duplicate edge " + structors[e.structor].id + " -> " +
                        functionals[e.functional].id);
    }
  }
  if (sequence) {
    for (const auto& id : *sequence) {
      if (!find_entity(structors, id)) {
        throw DesignError("sequence references unknown structor '" + id + "'");
      }
    }
  }

  SystemDesign d;
  d.name_ = std::move(name);
  d.structors_ = std::move(structors);
  d.functionals_ = std::move(functionals);
  d.provides_ = std::move(provides);
  d.sequence_ = std::move(sequence);
  return d;
}

SystemDesign SystemDesign::from_ids(
    std::string name, std::vector<Entity> structors, std::vector<Entity> functionals,
    const std::vector<std::pair<std::string, std::string>>& provides,
    std::optional<std::vector<std::string>> sequence) {
  std::vector<ProvidesEdge> edges;
  edges.reserve(provides.size());
  for (const auto& [s, f] : provides) {
    auto si = find_entity(structors, s);
    if (!si) throw DesignError("unknown structor '" + s + "' in provides");
    auto fi = find_entity(functionals, f);
    if (!fi) throw DesignError("unknown functional '" + f + "' in provides");
    edges.push_back({*si, *fi});
  }
  return create(std::move(name), std::move(structors), std::move(functionals), std::move(edges),
                std::move(sequence));
}

std::optional<std::size_t> SystemDesign::find_structor(std::string_view id) const {
  return find_entity(structors_, id);
}

std::optional<std::size_t> SystemDesign::find_functional(std::string_view id) const {
  return find_entity(functionals_, id);
}

VertexOrder::VertexOrder(const SystemDesign& design)
    : functional_count_(design.functionals().size()) {
  ids_.reserve(design.functionals().size() + design.structors().size());
  for (const auto& f : design.functionals()) ids_.push_back(f.id);
  for (const auto& s : design.structors()) ids_.push_back(s.id);
}

std::optional<std::size_t> VertexOrder::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<VertexEdge> vertex_edges(const SystemDesign& design, const VertexOrder& order) {
  std::vector<VertexEdge> out;
  out.reserve(design.provides().size());
  for (const auto& e : design.provides()) {
    auto [f, s] = order.endpoints(e);
    out.push_back({std::min(f, s), std::max(f, s)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(PartitionMethod method) {
  switch (method) {
    case PartitionMethod::kOracle:
      return "oracle";
    case PartitionMethod::kSpectral:
      return "spectral";
    case PartitionMethod::kProjector:
      return "projector";
    case PartitionMethod::kFiedlerSplit:
      return "fiedler-split";
  }
  return "unknown";
}

VertexPartition::VertexPartition(std::size_t vertex_count,
                                 std::vector<std::vector<std::size_t>> groups,
                                 PartitionMethod method)
    : vertex_count_(vertex_count), groups_(std::move(groups)), method_(method) {
  std::vector<bool> seen(vertex_count_, false);
  std::size_t covered = 0;
  for (auto& g : groups_) {
    if (g.empty()) throw std::invalid_argument("partition has an empty group");
    std::sort(g.begin(), g.end());
    for (auto v : g) {
      if (v >= vertex_count_) throw std::invalid_argument("partition vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition groups overlap");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != vertex_count_) throw std::invalid_argument("partition does not cover all vertices");
  std::sort(groups_.begin(), groups_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

VertexPartition VertexPartition::from_labels(const std::vector<std::size_t>& labels,
                                             PartitionMethod method) {
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = slot.try_emplace(labels[v], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return VertexPartition(labels.size(), std::move(groups), method);
}

std::size_t VertexPartition::group_of(std::size_t vertex) const {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (std::binary_search(groups_[g].begin(), groups_[g].end(), vertex)) return g;
  }
  throw std::out_of_range("vertex not in partition");
}

VertexPartition connected_components(const SystemDesign& design) {
  VertexOrder order(design);
  DisjointSets sets(order.size());
  for (const auto& e : design.provides()) {
    auto [f, s] = order.endpoints(e);
    sets.unite(f, s);
  }
  return VertexPartition::from_labels(sets.labels(), PartitionMethod::kOracle);
}

std::vector<InheritanceFinding> infer_inheritance(const SystemDesign& design) {
  std::vector<std::vector<std::size_t>> providers(design.functionals().size());
  for (const auto& e : design.provides()) providers[e.functional].push_back(e.structor);

  std::vector<InheritanceFinding> out;
  for (std::size_t f = 0; f < providers.size(); ++f) {
    auto& p = providers[f];
    if (p.size() < 2) continue;
    std::sort(p.begin(), p.end());
    InheritanceFinding finding{design.functionals()[f].id, {}};
    for (auto s : p) finding.structors.push_back(design.structors()[s].id);
    out.push_back(std::move(finding));
  }
  return out;
}

std::vector<std::size_t> isolated_vertices(const SystemDesign& design, const VertexOrder& order) {
  std::vector<bool> touched(order.size(), false);
  for (const auto& e : design.provides()) {
    auto [f, s] = order.endpoints(e);
    touched[f] = touched[s] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < touched.size(); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

}  // namespace densmod
