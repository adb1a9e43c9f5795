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

#include "densmod/modularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "densmod/disjoint_sets.hpp"
#include "densmod/spectral.hpp"

namespace densmod {

namespace {

// Positions of module vertices, or npos for vertices outside the module.
std::vector<std::size_t> local_index(std::size_t vertex_count,
                                     const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> local(vertex_count, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] >= vertex_count) throw std::invalid_argument("module vertex out of range");
    local[vertices[k]] = k;
  }
  return local;
}

std::size_t component_count(std::size_t n, const std::vector<VertexEdge>& local_edges,
                            std::optional<std::size_t> skip, std::vector<std::size_t>* labels) {
  DisjointSets sets(n);
  std::size_t count = n;
  for (std::size_t e = 0; e < local_edges.size(); ++e) {
    if (skip && *skip == e) continue;
    if (sets.unite(local_edges[e].u, local_edges[e].v)) --count;
  }
  if (labels) *labels = sets.labels();
  return count;
}

bool two_sided(const VertexOrder& order, const std::vector<std::size_t>& vertices) {
  bool s = false;
  bool f = false;
  for (auto v : vertices) (order.kind(v) == VertexKind::kStructor ? s : f) = true;
  return s && f;
}

}  // namespace

bool ModuleReport::all_agree() const {
  for (const auto& row : agreement) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

std::vector<VertexEdge> induced_edges(const SystemDesign& design,
                                      const std::vector<std::size_t>& vertices) {
  VertexOrder order(design);
  auto local = local_index(order.size(), vertices);
  std::vector<VertexEdge> out;
  for (const auto& e : vertex_edges(design, order)) {
    if (local[e.u] != static_cast<std::size_t>(-1) && local[e.v] != static_cast<std::size_t>(-1)) {
      out.push_back(e);
    }
  }
  return out;
}

Eigen::MatrixXd induced_laplacian(const SystemDesign& design,
                                  const std::vector<std::size_t>& vertices) {
  VertexOrder order(design);
  auto local = local_index(order.size(), vertices);
  const auto n = static_cast<Eigen::Index>(vertices.size());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : induced_edges(design, vertices)) {
    const auto a = static_cast<Eigen::Index>(local[e.u]);
    const auto b = static_cast<Eigen::Index>(local[e.v]);
    l(a, a) += 1.0;
    l(b, b) += 1.0;
    l(a, b) -= 1.0;
    l(b, a) -= 1.0;
  }
  return l;
}

std::vector<VertexEdge> detect_outliers(const SystemDesign& design,
                                        const std::vector<std::size_t>& module) {
  VertexOrder order(design);
  auto local = local_index(order.size(), module);
  const auto edges = induced_edges(design, module);
  std::vector<VertexEdge> local_edges;
  for (const auto& e : edges) local_edges.push_back({local[e.u], local[e.v]});

  if (!module.empty() && component_count(module.size(), local_edges, std::nullopt, nullptr) != 1) {
    throw std::invalid_argument("module is not connected");
  }

  std::vector<VertexEdge> bridges;
  std::vector<std::size_t> labels;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (component_count(module.size(), local_edges, e, &labels) != 2) continue;
    std::vector<std::size_t> side_u;
    std::vector<std::size_t> side_v;
    const std::size_t root_u = labels[local_edges[e].u];
    for (std::size_t k = 0; k < module.size(); ++k) {
      (labels[k] == root_u ? side_u : side_v).push_back(module[k]);
    }
    if (two_sided(order, side_u) && two_sided(order, side_v)) bridges.push_back(edges[e]);
  }
  return bridges;
}

ModuleSummary summarize_module(const SystemDesign& design, const std::vector<std::size_t>& module,
                               double split_threshold) {
  VertexOrder order(design);
  ModuleSummary s;
  s.vertices = module;
  std::sort(s.vertices.begin(), s.vertices.end());
  for (auto v : s.vertices) {
    (order.kind(v) == VertexKind::kStructor ? s.structors : s.functionals) += 1;
  }
  s.edges = induced_edges(design, s.vertices).size();
  if (s.structors > 0 && s.functionals > 0) {
    s.density = static_cast<double>(s.edges) / static_cast<double>(s.structors * s.functionals);
  }
  s.bridges = detect_outliers(design, s.vertices);
  s.reducible = !s.bridges.empty() && s.density && *s.density < split_threshold;
  return s;
}

ModuleReport build_module_report(const SystemDesign& design, const VertexPartition& oracle,
                                 const VertexPartition& spectral,
                                 const VertexPartition& projector, double split_threshold) {
  ModuleReport report{oracle, {}, {}};
  for (const auto& g : oracle.groups()) {
    report.modules.push_back(summarize_module(design, g, split_threshold));
  }
  const std::array<const VertexPartition*, 3> parts = {&oracle, &spectral, &projector};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) report.agreement[a][b] = parts[a]->same_groups(*parts[b]);
  }
  return report;
}

SplitResult split_module(const SystemDesign& design, const std::vector<std::size_t>& module) {
  VertexOrder order(design);
  SplitResult r;
  r.parent = module;
  std::sort(r.parent.begin(), r.parent.end());
  if (r.parent.size() < 2) {
    r.side_a = r.parent;
    r.fiedler = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(r.parent.size()));
    return r;
  }

  const FiedlerResult fiedler = fiedler_vector(induced_laplacian(design, r.parent));
  r.fiedler = fiedler.vector;
  r.fiedler_value = fiedler.value;
  r.degenerate = fiedler.degenerate;

  std::vector<bool> on_a(order.size(), false);
  for (std::size_t k = 0; k < r.parent.size(); ++k) {
    const double x = r.fiedler(static_cast<Eigen::Index>(k));
    if (x >= -kFiedlerTieTolerance) {
      r.side_a.push_back(r.parent[k]);
      on_a[r.parent[k]] = true;
      if (x <= kFiedlerTieTolerance) ++r.ties;
    } else {
      r.side_b.push_back(r.parent[k]);
    }
  }
  for (const auto& e : induced_edges(design, r.parent)) {
    if (on_a[e.u] != on_a[e.v]) r.cut.push_back(e);
  }
  r.valid = two_sided(order, r.side_a) && two_sided(order, r.side_b);
  return r;
}

PartitionComparison compare_partitions(const VertexPartition& first,
                                       const VertexPartition& second) {
  if (first.vertex_count() != second.vertex_count()) {
    throw std::invalid_argument("partitions cover different vertex sets");
  }
  PartitionComparison c;
  const auto& a = first.groups();
  const auto& b = second.groups();
  for (const auto& g : a) {
    if (std::find(b.begin(), b.end(), g) == b.end()) c.only_in_first.push_back(g);
  }
  for (const auto& g : b) {
    if (std::find(a.begin(), a.end(), g) == a.end()) c.only_in_second.push_back(g);
  }
  c.equal = c.only_in_first.empty() && c.only_in_second.empty();
  return c;
}

}  // namespace densmod
