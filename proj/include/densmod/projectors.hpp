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

#ifndef DENSMOD_PROJECTORS_HPP_
#define DENSMOD_PROJECTORS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "densmod/design.hpp"
#include "densmod/spectral.hpp"

namespace densmod {

/// Computational-basis label of a vertex: its index in fixed-width binary.
struct KetLabel {
  std::size_t index;
  std::string bits;
};

/// Bits needed to label `vertex_count` kets: max(1, ceil(log2 N)).
std::size_t ket_width(std::size_t vertex_count);

KetLabel ket_label(std::size_t index, std::size_t vertex_count);

/// coefficient * (|u> - |v>)(<u| - <v|), u < v, for one design edge.
struct EdgeProjector {
  std::size_t u;
  std::size_t v;
  double coefficient;
};

/// Dense N x N matrix of a single term.
Eigen::MatrixXd term_matrix(const EdgeProjector& term, std::size_t vertex_count);

/// rho |j><j|, stored as the nonzero entries of column j of rho.
struct KetColumnOperator {
  std::size_t ket;
  std::vector<std::pair<std::size_t, double>> column;
};

/// Throws std::out_of_range when j is not a basis index.
KetColumnOperator apply_to_ket(const Eigen::MatrixXd& density, std::size_t j);

/// Text such as `0.1*(2*|000⟩ - |100⟩ - |101⟩)⟨000|`, with the 1/d factor
/// pulled out so the bracket holds Laplacian entries.
std::string render_ket_column(const KetColumnOperator& op, std::size_t vertex_count,
                              long degree_sum);

/// One term per edge, coefficient 1/d, ordered by (u, v).
std::vector<EdgeProjector> edge_decomposition(const DesignMatrices& m);

/// Sum of all term matrices.
Eigen::MatrixXd sum_terms(const std::vector<EdgeProjector>& terms, std::size_t vertex_count);

/// Groups term indices under the transitive closure of "shares a basis
/// ket". Classes are ordered by their first term index.
std::vector<std::vector<std::size_t>> partition_terms(const std::vector<EdgeProjector>& terms);

/// Sum of term matrices per class.
std::vector<Eigen::MatrixXd> class_matrices(const std::vector<EdgeProjector>& terms,
                                            const std::vector<std::vector<std::size_t>>& classes,
                                            std::size_t vertex_count);

/// Vertex groups spanned by each class; vertices that no term touches are
/// appended as singletons.
VertexPartition modules_from_projectors(const SystemDesign& design,
                                        const std::vector<EdgeProjector>& terms,
                                        const std::vector<std::vector<std::size_t>>& classes);

struct DiracStyle {
  /// Prefix the 1/d coefficient, as in `0.1 · (...)`.
  bool verbose = false;
  /// Render this endpoint first instead of the lower index. The operator is
  /// unchanged; only the written order of |u> and |v> flips.
  std::optional<std::size_t> leading;
};

/// `(|<u>⟩-|<v>⟩)(⟨<u>|-⟨<v>|)` with KetLabel bit strings.
std::string render_dirac(const EdgeProjector& term, const VertexOrder& order,
                         const DiracStyle& style = {});

}  // namespace densmod

#endif  // DENSMOD_PROJECTORS_HPP_
