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

#ifndef DENSMOD_SPECTRAL_HPP_
#define DENSMOD_SPECTRAL_HPP_

#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "densmod/design.hpp"

namespace densmod {

/// Degree, adjacency, Laplacian and density matrices of a design, all
/// indexed by the design's VertexOrder.
struct DesignMatrices {
  VertexOrder order;
  Eigen::MatrixXd degree;
  Eigen::MatrixXd adjacency;
  Eigen::MatrixXd laplacian;  // degree - adjacency
  long degree_sum = 0;        // trace of the Laplacian, twice the edge count
  Eigen::MatrixXd density;    // laplacian / degree_sum

  std::size_t size() const { return order.size(); }
};

/// Throws DesignError for a design without edges (its density matrix is
/// undefined) and NumericalError if an invariant check fails.
DesignMatrices build_matrices(const SystemDesign& design);

/// Ascending eigenpairs of a real symmetric matrix.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // column k pairs with values[k]
  double tolerance = 0.0;   // eigenvalues below this count as zero

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
};

/// Relative zero threshold used when no override is given.
inline constexpr double kRelativeZeroTolerance = 1e-9;
/// Kernel projector entries above this magnitude link two vertices.
inline constexpr double kKernelLinkThreshold = 1e-8;

/// Dense symmetric eigendecomposition. The zero tolerance defaults to
/// 1e-9 * max(|largest eigenvalue|, 1). Throws std::invalid_argument when
/// `m` is not symmetric within 1e-12.
EigenSystem eigendecompose(const Eigen::MatrixXd& m,
                           std::optional<double> tolerance = std::nullopt);

/// Number of eigenvalues below the zero tolerance.
std::size_t zero_multiplicity(const EigenSystem& es);

/// Sum of v v^T over the kernel eigenvectors.
Eigen::MatrixXd kernel_projector(const EigenSystem& es);

/// Modules from the kernel projector K: i and j share a group iff
/// |K_ij| > kKernelLinkThreshold. K does not depend on which orthonormal
/// basis of the kernel the solver returned.
/// Throws NumericalError when the kernel is empty.
VertexPartition modules_from_kernel(const EigenSystem& es);

struct FiedlerResult {
  double value = 0.0;
  Eigen::VectorXd vector;  // unit norm, first nonzero entry positive
  /// Next eigenvalue lies within kFiedlerDegeneracyGap (relative) of `value`.
  bool degenerate = false;
};

inline constexpr double kFiedlerDegeneracyGap = 1e-6;

/// Eigenvector of the smallest eigenvalue above the zero tolerance.
/// `laplacian` must describe a connected graph on at least two vertices;
/// throws std::invalid_argument otherwise.
FiedlerResult fiedler_vector(const Eigen::MatrixXd& laplacian);

}  // namespace densmod

#endif  // DENSMOD_SPECTRAL_HPP_
