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

#include "densmod/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "densmod/disjoint_sets.hpp"

namespace densmod {

namespace {

std::string format_coefficient(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", c);
  return buf;
}

}  // namespace

std::size_t ket_width(std::size_t vertex_count) {
  std::size_t width = 0;
  while ((std::size_t{1} << width) < vertex_count) ++width;
  return std::max<std::size_t>(width, 1);
}

KetLabel ket_label(std::size_t index, std::size_t vertex_count) {
  if (index >= vertex_count) throw std::out_of_range("ket index out of range");
  const std::size_t width = ket_width(vertex_count);
  std::string bits(width, '0');
  for (std::size_t b = 0; b < width; ++b) {
    if (index >> b & 1U) bits[width - 1 - b] = '1';
  }
  return {index, std::move(bits)};
}

Eigen::MatrixXd term_matrix(const EdgeProjector& term, std::size_t vertex_count) {
  const auto n = static_cast<Eigen::Index>(vertex_count);
  const auto u = static_cast<Eigen::Index>(term.u);
  const auto v = static_cast<Eigen::Index>(term.v);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(u, u) = m(v, v) = term.coefficient;
  m(u, v) = m(v, u) = -term.coefficient;
  return m;
}

KetColumnOperator apply_to_ket(const Eigen::MatrixXd& density, std::size_t j) {
  if (j >= static_cast<std::size_t>(density.cols())) {
    throw std::out_of_range("ket index out of range");
  }
  KetColumnOperator op{j, {}};
  const auto col = static_cast<Eigen::Index>(j);
  for (Eigen::Index i = 0; i < density.rows(); ++i) {
    if (density(i, col) != 0.0) op.column.emplace_back(static_cast<std::size_t>(i), density(i, col));
  }
  return op;
}

std::string render_ket_column(const KetColumnOperator& op, std::size_t vertex_count,
                              long degree_sum) {
  const std::string bra = "⟨" + ket_label(op.ket, vertex_count).bits + "|";
  if (op.column.empty()) return "0*" + bra;
  const double scale = 1.0 / static_cast<double>(degree_sum);
  std::string body;
  for (std::size_t k = 0; k < op.column.size(); ++k) {
    const auto& [i, value] = op.column[k];
    const double entry = value / scale;
    const double mag = std::abs(entry);
    if (k == 0) {
      if (entry < 0) body += "-";
    } else {
      body += entry < 0 ? " - " : " + ";
    }
    if (std::abs(mag - 1.0) > 1e-9) body += format_coefficient(mag) + "*";
    body += "|" + ket_label(i, vertex_count).bits + "⟩";
  }
  return format_coefficient(scale) + "*(" + body + ")" + bra;
}

std::vector<EdgeProjector> edge_decomposition(const DesignMatrices& m) {
  std::vector<EdgeProjector> terms;
  const double c = 1.0 / static_cast<double>(m.degree_sum);
  const auto n = m.adjacency.rows();
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = u + 1; v < n; ++v) {
      if (m.adjacency(u, v) != 0.0) {
        terms.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), c});
      }
    }
  }
  return terms;
}

Eigen::MatrixXd sum_terms(const std::vector<EdgeProjector>& terms, std::size_t vertex_count) {
  const auto n = static_cast<Eigen::Index>(vertex_count);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& t : terms) {
    const auto u = static_cast<Eigen::Index>(t.u);
    const auto v = static_cast<Eigen::Index>(t.v);
    out(u, u) += t.coefficient;
    out(v, v) += t.coefficient;
    out(u, v) -= t.coefficient;
    out(v, u) -= t.coefficient;
  }
  return out;
}

std::vector<std::vector<std::size_t>> partition_terms(const std::vector<EdgeProjector>& terms) {
  std::size_t n = 0;
  for (const auto& t : terms) n = std::max({n, t.u + 1, t.v + 1});
  DisjointSets sets(n);
  for (const auto& t : terms) sets.unite(t.u, t.v);

  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    auto [it, fresh] = slot.try_emplace(sets.find(terms[k].u), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

std::vector<Eigen::MatrixXd> class_matrices(const std::vector<EdgeProjector>& terms,
                                            const std::vector<std::vector<std::size_t>>& classes,
                                            std::size_t vertex_count) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<EdgeProjector> subset;
    for (auto k : cls) subset.push_back(terms.at(k));
    out.push_back(sum_terms(subset, vertex_count));
  }
  return out;
}

VertexPartition modules_from_projectors(const SystemDesign& design,
                                        const std::vector<EdgeProjector>& terms,
                                        const std::vector<std::vector<std::size_t>>& classes) {
  const std::size_t n = VertexOrder(design).size();
  std::vector<bool> used(n, false);
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& cls : classes) {
    std::vector<std::size_t> g;
    for (auto k : cls) {
      for (auto x : {terms.at(k).u, terms.at(k).v}) {
        if (!used.at(x)) {
          used[x] = true;
          g.push_back(x);
        }
      }
    }
    groups.push_back(std::move(g));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!used[x]) groups.push_back({x});
  }
  return VertexPartition(n, std::move(groups), PartitionMethod::kProjector);
}

std::string render_dirac(const EdgeProjector& term, const VertexOrder& order,
                         const DiracStyle& style) {
  std::size_t first = term.u;
  std::size_t second = term.v;
  if (style.leading && *style.leading == term.v) std::swap(first, second);
  const std::string a = ket_label(first, order.size()).bits;
  const std::string b = ket_label(second, order.size()).bits;
  std::string out = "(|" + a + "⟩-|" + b + "⟩)(⟨" + a + "|-⟨" + b + "|)";
  if (style.verbose) out = format_coefficient(term.coefficient) + " · " + out;
  return out;
}

}  // namespace densmod
