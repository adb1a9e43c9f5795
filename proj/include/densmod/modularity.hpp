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

#ifndef DENSMOD_MODULARITY_HPP_
#define DENSMOD_MODULARITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "densmod/design.hpp"

namespace densmod {

/// Default density below which a module with a two-sided bridge is flagged
/// as reducible.
inline constexpr double kDefaultSplitThreshold = 0.5;

/// Fiedler entries within this distance of zero are placed on side A.
inline constexpr double kFiedlerTieTolerance = 1e-10;

struct ModuleSummary {
  std::vector<std::size_t> vertices;
  std::size_t structors = 0;
  std::size_t functionals = 0;
  std::size_t edges = 0;
  /// edges / (structors * functionals); empty unless both counts are nonzero.
  std::optional<double> density;
  std::vector<VertexEdge> bridges;
  /// Has a two-sided bridge and density below the split threshold.
  bool reducible = false;
};

/// Method order in the agreement matrix.
inline constexpr std::array<PartitionMethod, 3> kCrossCheckMethods = {
    PartitionMethod::kOracle, PartitionMethod::kSpectral, PartitionMethod::kProjector};

struct ModuleReport {
  VertexPartition partition;
  std::vector<ModuleSummary> modules;
  /// agreement[a][b]: methods a and b produce the same groups.
  std::array<std::array<bool, 3>, 3> agreement{};

  bool all_agree() const;
};

/// Sub-Laplacian of the subgraph induced by `vertices` (in the given order).
Eigen::MatrixXd induced_laplacian(const SystemDesign& design,
                                  const std::vector<std::size_t>& vertices);

/// Edges with both endpoints in `vertices`, sorted.
std::vector<VertexEdge> induced_edges(const SystemDesign& design,
                                      const std::vector<std::size_t>& vertices);

/// Edges whose removal splits the (connected) module into two parts that
/// each hold at least one structor and one functional. Throws
/// std::invalid_argument when the module is not connected.
std::vector<VertexEdge> detect_outliers(const SystemDesign& design,
                                        const std::vector<std::size_t>& module);

ModuleSummary summarize_module(const SystemDesign& design, const std::vector<std::size_t>& module,
                               double split_threshold = kDefaultSplitThreshold);

/// Builds the per-module report over `oracle` and records pairwise
/// agreement of the three partitions.
ModuleReport build_module_report(const SystemDesign& design, const VertexPartition& oracle,
                                 const VertexPartition& spectral,
                                 const VertexPartition& projector,
                                 double split_threshold = kDefaultSplitThreshold);

struct SplitResult {
  std::vector<std::size_t> parent;
  Eigen::VectorXd fiedler;  // aligned with `parent`
  double fiedler_value = 0.0;
  std::vector<std::size_t> side_a;  // Fiedler entry >= -kFiedlerTieTolerance
  std::vector<std::size_t> side_b;
  std::vector<VertexEdge> cut;
  /// Both sides hold at least one structor and one functional.
  bool valid = false;
  bool degenerate = false;
  /// Entries within kFiedlerTieTolerance of zero, assigned to side A.
  std::size_t ties = 0;
};

/// One-level Fiedler bisection of a connected module. A single-vertex
/// module yields an invalid result with everything on side A. Throws
/// std::invalid_argument when the module is disconnected.
SplitResult split_module(const SystemDesign& design, const std::vector<std::size_t>& module);

struct PartitionComparison {
  bool equal = false;
  std::vector<std::vector<std::size_t>> only_in_first;
  std::vector<std::vector<std::size_t>> only_in_second;
};

/// Throws std::invalid_argument when the vertex universes differ.
PartitionComparison compare_partitions(const VertexPartition& first,
                                       const VertexPartition& second);

}  // namespace densmod

#endif  // DENSMOD_MODULARITY_HPP_
