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

// Independent reference computations for the test suites. Nothing here
// calls into the library's algorithms beyond reading a SystemDesign.

#ifndef DENSMOD_TESTS_SUPPORT_ORACLES_HPP_
#define DENSMOD_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "densmod/design.hpp"

namespace densmod::testing {

using Groups = std::vector<std::vector<std::size_t>>;
using Edge = std::pair<std::size_t, std::size_t>;

// Vertex edges with functionals first, matching the canonical ordering:
// functional k -> k, structor k -> m + k.
inline std::vector<Edge> oracle_edges(const SystemDesign& d) {
  const std::size_t m = d.functionals().size();
  std::vector<Edge> out;
  for (const auto& e : d.provides()) out.emplace_back(e.functional, m + e.structor);
  return out;
}

inline std::size_t oracle_vertex_count(const SystemDesign& d) {
  return d.functionals().size() + d.structors().size();
}

inline bool oracle_is_structor(const SystemDesign& d, std::size_t v) {
  return v >= d.functionals().size();
}

inline Groups canonical(Groups g) {
  for (auto& x : g) std::sort(x.begin(), x.end());
  std::sort(g.begin(), g.end());
  return g;
}

// Breadth-first components of the subgraph on `vertices`, ignoring edge
// index `skip`.
inline Groups bfs_components(std::size_t n, const std::vector<Edge>& edges,
                             const std::vector<std::size_t>& vertices,
                             std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  std::vector<bool> member(n, false);
  for (auto v : vertices) member[v] = true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k == skip) continue;
    auto [a, b] = edges[k];
    if (member[a] && member[b]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<bool> seen(n, false);
  Groups out;
  for (auto start : vertices) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      comp.push_back(x);
      for (auto y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return canonical(std::move(out));
}

inline Groups bfs_components(const SystemDesign& d) {
  std::vector<std::size_t> all(oracle_vertex_count(d));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return bfs_components(all.size(), oracle_edges(d), all);
}

// True when no nonempty proper subset of `group` (|group| <= 16) has zero
// edges to its complement inside the group.
inline bool cannot_split_without_crossing(const std::vector<Edge>& edges,
                                          const std::vector<std::size_t>& group) {
  const std::size_t k = group.size();
  if (k <= 1) return true;
  std::vector<int> pos(1 + *std::max_element(group.begin(), group.end()), -1);
  for (std::size_t i = 0; i < k; ++i) pos[group[i]] = static_cast<int>(i);
  for (unsigned mask = 1; mask + 1 < (1U << k); ++mask) {
    if (!(mask & 1U)) continue;  // fix group[0] on one side
    bool crossing = false;
    for (auto [a, b] : edges) {
      if (a >= pos.size() || b >= pos.size() || pos[a] < 0 || pos[b] < 0) continue;
      bool sa = mask >> pos[a] & 1U;
      bool sb = mask >> pos[b] & 1U;
      if (sa != sb) {
        crossing = true;
        break;
      }
    }
    if (!crossing) return false;
  }
  return true;
}

struct CutCandidate {
  std::vector<std::size_t> side_a;  // holds group[0]
  std::vector<std::size_t> side_b;
  std::vector<Edge> cut;
  double ratio = 0.0;  // |cut| / (|A| |B|)
};

// Every bipartition of `group` (|group| <= 16) into two nonempty sides.
inline std::vector<CutCandidate> enumerate_bipartitions(const std::vector<Edge>& edges,
                                                        const std::vector<std::size_t>& group) {
  const std::size_t k = group.size();
  std::vector<CutCandidate> out;
  for (unsigned mask = 1; mask + 1 < (1U << k); ++mask) {
    if (!(mask & 1U)) continue;
    CutCandidate c;
    std::vector<int> side(1 + *std::max_element(group.begin(), group.end()), -1);
    for (std::size_t i = 0; i < k; ++i) {
      bool a = mask >> i & 1U;
      side[group[i]] = a ? 0 : 1;
      (a ? c.side_a : c.side_b).push_back(group[i]);
    }
    for (auto [a, b] : edges) {
      if (a >= side.size() || b >= side.size() || side[a] < 0 || side[b] < 0) continue;
      if (side[a] != side[b]) c.cut.emplace_back(std::min(a, b), std::max(a, b));
    }
    c.ratio = static_cast<double>(c.cut.size()) /
              static_cast<double>(c.side_a.size() * c.side_b.size());
    out.push_back(std::move(c));
  }
  return out;
}

// Exhaustive edge-removal: edges whose removal leaves two components that
// each hold a structor and a functional.
inline std::vector<Edge> brute_force_bridges(const SystemDesign& d,
                                             const std::vector<std::size_t>& group) {
  const auto edges = oracle_edges(d);
  const std::size_t n = oracle_vertex_count(d);
  std::vector<Edge> out;
  std::vector<bool> member(n, false);
  for (auto v : group) member[v] = true;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!member[edges[k].first] || !member[edges[k].second]) continue;
    auto comps = bfs_components(n, edges, group, k);
    if (comps.size() != 2) continue;
    bool ok = true;
    for (const auto& c : comps) {
      bool s = false;
      bool f = false;
      for (auto v : c) (oracle_is_structor(d, v) ? s : f) = true;
      ok = ok && s && f;
    }
    if (ok) out.push_back(edges[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cyclic Jacobi eigenvalues of a small symmetric matrix, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Entity> numbered(const char* prefix, std::size_t count) {
  std::vector<Entity> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string id = prefix + std::to_string(i + 1);
    out.push_back({id, "name " + id});
  }
  return out;
}

// m, n uniform in [1, max_side]; each of the m*n edges kept with
// probability p. Draws without edges are discarded.
inline SystemDesign random_design(std::mt19937_64& rng, std::size_t max_side = 12,
                                  double p = 0.25) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::bernoulli_distribution keep(p);
  for (;;) {
    const std::size_t n = side(rng);  // structors
    const std::size_t m = side(rng);  // functionals
    std::vector<ProvidesEdge> edges;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t f = 0; f < m; ++f)
        if (keep(rng)) edges.push_back({s, f});
    if (edges.empty()) continue;
    return SystemDesign::create("random", numbered("S", n), numbered("F", m), std::move(edges));
  }
}

struct TwoClusterDesign {
  SystemDesign design;
  std::vector<std::size_t> cluster_a;  // vertex indices, sorted
  std::vector<std::size_t> cluster_b;
  Edge bridge;
};

// Two connected clusters (2-5 structors and 2-5 functionals each, internal
// density >= 0.75) plus one bridge edge between them.
inline TwoClusterDesign two_cluster_design(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::bernoulli_distribution keep(0.85);
  for (;;) {
    const std::size_t sa = size(rng), fa = size(rng), sb = size(rng), fb = size(rng);
    const std::size_t n = sa + sb;
    const std::size_t m = fa + fb;
    std::vector<ProvidesEdge> edges;
    bool ok = true;
    auto cluster = [&](std::size_t s0, std::size_t ns, std::size_t f0, std::size_t nf) {
      std::size_t count = 0;
      for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t f = 0; f < nf; ++f)
          if (keep(rng)) {
            edges.push_back({s0 + s, f0 + f});
            ++count;
          }
      if (static_cast<double>(count) < 0.75 * static_cast<double>(ns * nf)) ok = false;
    };
    cluster(0, sa, 0, fa);
    cluster(sa, sb, fa, fb);
    if (!ok) continue;
    std::uniform_int_distribution<std::size_t> pick_s(0, sa - 1);
    std::uniform_int_distribution<std::size_t> pick_f(fa, m - 1);
    edges.push_back({pick_s(rng), pick_f(rng)});
    auto design = SystemDesign::create("two-cluster", numbered("S", n), numbered("F", m), edges);

    TwoClusterDesign out{design, {}, {}, {}};
    for (std::size_t f = 0; f < fa; ++f) out.cluster_a.push_back(f);
    for (std::size_t s = 0; s < sa; ++s) out.cluster_a.push_back(m + s);
    for (std::size_t f = fa; f < m; ++f) out.cluster_b.push_back(f);
    for (std::size_t s = sa; s < n; ++s) out.cluster_b.push_back(m + s);
    const auto& b = edges.back();
    out.bridge = {b.functional, m + b.structor};

    const auto all_edges = oracle_edges(design);
    if (bfs_components(oracle_vertex_count(design), all_edges, out.cluster_a).size() != 1 ||
        bfs_components(oracle_vertex_count(design), all_edges, out.cluster_b).size() != 1) {
      continue;
    }
    return out;
  }
}

}  // namespace densmod::testing

#endif  // DENSMOD_TESTS_SUPPORT_ORACLES_HPP_
