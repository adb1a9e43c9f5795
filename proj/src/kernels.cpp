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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "densmod/kernels.hpp"

namespace densmod::kernels {

namespace {

void check_same_shape(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
}

// Below this dimension thread start-up costs more than the loop.
constexpr std::ptrdiff_t kParallelMinDim = 64;

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Eigen::MatrixXd laplacian_from_edges(std::size_t n, std::span<const VertexEdge> edges) {
  // Compressed adjacency: neighbors of j are adj[offset[j] .. offset[j+1]).
  std::vector<std::size_t> offset(n + 1, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    ++offset[e.u + 1];
    ++offset[e.v + 1];
  }
  for (std::size_t j = 0; j < n; ++j) offset[j + 1] += offset[j];
  std::vector<std::size_t> adj(offset[n]);
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (const auto& e : edges) {
    adj[fill[e.u]++] = e.v;
    adj[fill[e.v]++] = e.u;
  }
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd l(size, size);
  // Column j only touches its own entries.
#pragma omp parallel for schedule(static) if (size >= kParallelMinDim)
  for (Eigen::Index j = 0; j < size; ++j) {
    auto col = l.col(j);
    col.setZero();
    const auto lo = offset[static_cast<std::size_t>(j)];
    const auto hi = offset[static_cast<std::size_t>(j) + 1];
    col(j) = static_cast<double>(hi - lo);
    for (auto k = lo; k < hi; ++k) col(static_cast<Eigen::Index>(adj[k])) -= 1.0;
  }
  return l;
}

Eigen::MatrixXd outer_sum(const Eigen::MatrixXd& vectors, std::size_t count) {
  const Eigen::Index n = vectors.rows();
  const auto k = static_cast<Eigen::Index>(count);
  if (k > vectors.cols()) throw std::invalid_argument("outer_sum count exceeds columns");
  const Eigen::MatrixXd v = vectors.leftCols(k);
  const Eigen::MatrixXd vt = v.transpose();
  Eigen::MatrixXd out(n, n);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (Eigen::Index j = 0; j < n; ++j) out.col(j).noalias() = v * vt.col(j);
  return out;
}

Eigen::MatrixXd weighted_outer_sum(const Eigen::VectorXd& weights,
                                   const Eigen::MatrixXd& vectors) {
  if (weights.size() != vectors.cols()) throw std::invalid_argument("weight count mismatch");
  const Eigen::Index n = vectors.rows();
  const Eigen::MatrixXd wvt = weights.asDiagonal() * vectors.transpose();
  Eigen::MatrixXd out(n, n);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (Eigen::Index j = 0; j < n; ++j) out.col(j).noalias() = vectors * wvt.col(j);
  return out;
}

double max_abs_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
  const Eigen::Index cols = b.cols();
  if (a.rows() == 0 || cols == 0) return 0.0;
  // Column blocks keep each product a matrix-matrix multiply.
  constexpr Eigen::Index kBlock = 32;
  const Eigen::Index blocks = (cols + kBlock - 1) / kBlock;
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (cols >= kParallelMinDim)
  for (Eigen::Index blk = 0; blk < blocks; ++blk) {
    const Eigen::Index j0 = blk * kBlock;
    const Eigen::MatrixXd part = a * b.middleCols(j0, std::min(kBlock, cols - j0));
    worst = std::max(worst, part.cwiseAbs().maxCoeff());
  }
  return worst;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  check_same_shape(a, b);
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0) return 0.0;
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (cols >= kParallelMinDim)
  for (Eigen::Index j = 0; j < cols; ++j) {
    worst = std::max(worst, (a.col(j) - b.col(j)).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace serial {

Eigen::MatrixXd laplacian_from_edges(std::size_t n, std::span<const VertexEdge> edges) {
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(size, size);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, u) += 1.0;
    l(v, v) += 1.0;
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
  }
  return l;
}

Eigen::MatrixXd outer_sum(const Eigen::MatrixXd& vectors, std::size_t count) {
  const auto k = static_cast<Eigen::Index>(count);
  if (k > vectors.cols()) throw std::invalid_argument("outer_sum count exceeds columns");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(vectors.rows(), vectors.rows());
  for (Eigen::Index c = 0; c < k; ++c) out += vectors.col(c) * vectors.col(c).transpose();
  return out;
}

Eigen::MatrixXd weighted_outer_sum(const Eigen::VectorXd& weights,
                                   const Eigen::MatrixXd& vectors) {
  if (weights.size() != vectors.cols()) throw std::invalid_argument("weight count mismatch");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(vectors.rows(), vectors.rows());
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    out += weights(c) * vectors.col(c) * vectors.col(c).transpose();
  }
  return out;
}

double max_abs_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
  Eigen::MatrixXd p = a * b;
  return p.size() == 0 ? 0.0 : p.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  check_same_shape(a, b);
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace serial

}  // namespace densmod::kernels
