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

#ifndef DENSMOD_REPORT_HPP_
#define DENSMOD_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "densmod/design.hpp"
#include "densmod/modularity.hpp"
#include "densmod/projectors.hpp"
#include "densmod/spectral.hpp"

namespace densmod {

struct AnalysisOptions {
  double split_threshold = kDefaultSplitThreshold;
  /// Overrides the Laplacian zero tolerance.
  std::optional<double> tolerance;
  bool verbose_projectors = false;
  bool include_matrices = false;
};

/// Everything one `analyze` run computes for a design.
struct AnalysisReport {
  SystemDesign design;
  AnalysisOptions options;
  DesignMatrices matrices;
  EigenSystem laplacian_spectrum;
  std::size_t zero_multiplicity = 0;
  std::size_t density_zero_multiplicity = 0;
  VertexPartition oracle;
  VertexPartition spectral;
  VertexPartition projector;
  ModuleReport modules;
  std::vector<EdgeProjector> terms;
  std::vector<std::vector<std::size_t>> term_classes;
  std::vector<InheritanceFinding> inheritance;
  std::vector<std::string> warnings;

  bool methods_agree() const { return modules.all_agree(); }
};

/// Runs the three module derivations and the module checks. Throws
/// DesignError for designs without edges.
AnalysisReport analyze(const SystemDesign& design, const AnalysisOptions& options = {});

/// Deterministic JSON rendering; key order is fixed and eigenvalues are
/// rounded to 12 significant digits with kernel values reported as 0.
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

std::string report_to_text(const AnalysisReport& report);

enum class MatrixKind { kDegree, kAdjacency, kLaplacian, kDensity };

std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

/// Row-major CSV with vertex ids as header row and first column. Integer
/// matrices print as integers, the density with 15 significant digits.
std::string matrix_to_csv(const DesignMatrices& m, MatrixKind kind);

/// Undirected DOT graph: one cluster per module, structors as boxes and
/// functionals as ellipses.
std::string design_to_dot(const SystemDesign& design, const VertexPartition& modules);

nlohmann::ordered_json split_to_json(const SystemDesign& design, const SplitResult& split,
                                     const ModuleSummary& summary, double split_threshold);
std::string split_to_text(const SystemDesign& design, const SplitResult& split,
                          const ModuleSummary& summary, double split_threshold);

}  // namespace densmod

#endif  // DENSMOD_REPORT_HPP_
