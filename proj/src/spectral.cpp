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

#include "densmod/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "densmod/disjoint_sets.hpp"
#include "densmod/errors.hpp"
#include "densmod/kernels.hpp"

namespace densmod {

DesignMatrices build_matrices(const SystemDesign& design) {
  if (design.provides().empty()) {
    throw DesignError("degree-sum is zero; density matrix undefined");
  }
  VertexOrder order(design);
  const auto edges = vertex_edges(design, order);
  const auto n = static_cast<Eigen::Index>(order.size());

  DesignMatrices m{order, {}, {}, {}, 0, {}};
  m.laplacian = kernels::laplacian_from_edges(order.size(), edges);
  m.degree = Eigen::MatrixXd(m.laplacian.diagonal().asDiagonal());
  m.adjacency = m.degree - m.laplacian;
  m.degree_sum = 2 * static_cast<long>(edges.size());
  m.density = m.laplacian / static_cast<double>(m.degree_sum);

  // Invariant checks. Entries are small integers, so equality is exact.
  if (m.laplacian.trace() != static_cast<double>(m.degree_sum)) {
    throw NumericalError("Laplacian trace differs from the degree-sum");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double a = m.adjacency(i, j);
      if (a != 0.0 && order.kind(static_cast<std::size_t>(i)) ==
                          order.kind(static_cast<std::size_t>(j))) {
        throw NumericalError("adjacency links two vertices of the same kind");
      }
      off += std::abs(m.laplacian(i, j));
    }
    // Diagonal dominance with a nonnegative diagonal makes L (and rho) PSD.
    if (m.adjacency(i, i) != 0.0 || m.laplacian(i, i) < off) {
      throw NumericalError("Laplacian row " + order.id(static_cast<std::size_t>(i)) +
                           " is not diagonally dominant");
    }
  }
  if (std::abs(m.density.trace() - 1.0) > 1e-12) {
    throw NumericalError("density matrix trace is not one");
  }
  return m;
}

EigenSystem eigendecompose(const Eigen::MatrixXd& m, std::optional<double> tolerance) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  EigenSystem es;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  if (tolerance) {
    es.tolerance = *tolerance;
  } else {
    const double largest = es.values.size() ? es.values.cwiseAbs().maxCoeff() : 0.0;
    es.tolerance = kRelativeZeroTolerance * std::max(largest, 1.0);
  }
  return es;
}

std::size_t zero_multiplicity(const EigenSystem& es) {
  // Values are ascending, so the kernel is a prefix.
  std::size_t k = 0;
  while (k < es.size() && es.values(static_cast<Eigen::Index>(k)) < es.tolerance) ++k;
  return k;
}

Eigen::MatrixXd kernel_projector(const EigenSystem& es) {
  return kernels::outer_sum(es.vectors, zero_multiplicity(es));
}

VertexPartition modules_from_kernel(const EigenSystem& es) {
  if (zero_multiplicity(es) == 0) {
    throw NumericalError("no eigenvalue below the zero tolerance");
  }
  const Eigen::MatrixXd k = kernel_projector(es);
  const auto n = static_cast<std::size_t>(k.rows());
  DisjointSets sets(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (std::abs(k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) >
          kKernelLinkThreshold) {
        sets.unite(i, j);
      }
    }
  }
  return VertexPartition::from_labels(sets.labels(), PartitionMethod::kSpectral);
}

FiedlerResult fiedler_vector(const Eigen::MatrixXd& laplacian) {
  if (laplacian.rows() < 2) {
    throw std::invalid_argument("Fiedler vector needs at least two vertices");
  }
  const EigenSystem es = eigendecompose(laplacian);
  const std::size_t kernel = zero_multiplicity(es);
  if (kernel != 1) {
    throw std::invalid_argument("graph is disconnected (kernel dimension " +
                                std::to_string(kernel) + "); partition it first");
  }
  FiedlerResult r;
  r.value = es.values(1);
  r.vector = es.vectors.col(1);
  for (Eigen::Index i = 0; i < r.vector.size(); ++i) {
    if (std::abs(r.vector(i)) > 1e-10) {
      if (r.vector(i) < 0) r.vector = -r.vector;
      break;
    }
  }
  if (es.values.size() > 2) {
    r.degenerate = es.values(2) - r.value <= kFiedlerDegeneracyGap * std::max(1.0, r.value);
  }
  return r;
}

}  // namespace densmod
