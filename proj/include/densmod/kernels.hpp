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

#ifndef DENSMOD_KERNELS_HPP_
#define DENSMOD_KERNELS_HPP_

// Dense kernels behind the spectral and projector analyses. The functions
// in `kernels` parallelize their outer loop with OpenMP; `kernels::serial`
// holds straightforward single-threaded versions with identical contracts,
// kept as the reference the tests and benchmarks compare against.

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "densmod/design.hpp"

namespace densmod::kernels {

/// n x n Laplacian of the undirected graph with the given edges.
Eigen::MatrixXd laplacian_from_edges(std::size_t n, std::span<const VertexEdge> edges);

/// Sum over the first `count` columns v of `vectors` of v v^T.
Eigen::MatrixXd outer_sum(const Eigen::MatrixXd& vectors, std::size_t count);

/// Sum over all k of weights[k] * v_k v_k^T.
Eigen::MatrixXd weighted_outer_sum(const Eigen::VectorXd& weights, const Eigen::MatrixXd& vectors);

/// max |(a * b)_ij|.
double max_abs_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// max |a_ij - b_ij|.
double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Threads the parallel kernels will use.
int thread_count();

namespace serial {

Eigen::MatrixXd laplacian_from_edges(std::size_t n, std::span<const VertexEdge> edges);
Eigen::MatrixXd outer_sum(const Eigen::MatrixXd& vectors, std::size_t count);
Eigen::MatrixXd weighted_outer_sum(const Eigen::VectorXd& weights, const Eigen::MatrixXd& vectors);
double max_abs_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace serial

}  // namespace densmod::kernels

#endif  // DENSMOD_KERNELS_HPP_
