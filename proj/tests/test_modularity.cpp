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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "densmod/modularity.hpp"
#include "densmod/projectors.hpp"
#include "densmod/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace densmod;
namespace t = densmod::testing;

namespace {

std::vector<std::size_t> all_vertices(const SystemDesign& d) {
  std::vector<std::size_t> v(VertexOrder(d).size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> ids(const SystemDesign& d, std::initializer_list<const char*> names) {
  VertexOrder order(d);
  std::vector<std::size_t> out;
  for (const char* n : names) out.push_back(*order.find(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<t::Edge> as_pairs(const std::vector<VertexEdge>& edges) {
  std::vector<t::Edge> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

TEST_CASE("outlier fixture has exactly one bridge") {
  const auto d = t::design_fixture("outlier.sfd");
  const auto module = all_vertices(d);
  const auto bridges = detect_outliers(d, module);
  CHECK(as_pairs(bridges) == t::brute_force_bridges(d, module));
  REQUIRE(bridges.size() == 1);
  CHECK(bridges[0] == VertexEdge{*VertexOrder(d).find("F3"), *VertexOrder(d).find("S2")});
}

TEST_CASE("path-shaped outlier has several two-sided bridges") {
  const auto d = t::design_fixture("outlier_path.sfd");
  const auto module = all_vertices(d);
  const auto bridges = detect_outliers(d, module);
  const auto oracle = t::brute_force_bridges(d, module);
  CHECK(as_pairs(bridges) == oracle);
  CHECK(bridges.size() == 5);
}

TEST_CASE("prototype modules and bridges") {
  const auto d = t::prototype();
  const auto big = ids(d, {"F1", "F2", "S1", "S2"});
  const auto bridges = detect_outliers(d, big);
  CHECK(as_pairs(bridges) == t::brute_force_bridges(d, big));
  // Removing S2-F1 leaves {S1,F1} and {S2,F2}.
  REQUIRE(bridges.size() == 1);
  CHECK(bridges[0] == VertexEdge{0, 5});
  CHECK(detect_outliers(d, ids(d, {"F3", "S3"})).empty());
  CHECK_THROWS_AS(detect_outliers(d, ids(d, {"F3", "S3", "F4", "S4"})), std::invalid_argument);

  const auto summary = summarize_module(d, big);
  CHECK(summary.structors == 2);
  CHECK(summary.functionals == 2);
  CHECK(summary.edges == 3);
  CHECK(*summary.density == doctest::Approx(0.75));
  CHECK_FALSE(summary.reducible);
  CHECK(summarize_module(d, big, 0.9).reducible);
}

TEST_CASE("singleton module summary") {
  const auto d = t::design_fixture("isolated.sfd");
  const auto s = summarize_module(d, ids(d, {"S3"}));
  CHECK(s.structors == 1);
  CHECK(s.functionals == 0);
  CHECK_FALSE(s.density.has_value());
  CHECK_FALSE(s.reducible);
}

TEST_CASE("fiedler split of the outlier fixture") {
  const auto d = t::design_fixture("outlier.sfd");
  const auto module = all_vertices(d);
  const auto r = split_module(d, module);
  const auto a = ids(d, {"F1", "F2", "S1", "S2"});
  const auto b = ids(d, {"F3", "F4", "S3", "S4"});
  const bool a_first = r.side_a == a;
  CHECK((a_first ? r.side_b : r.side_a) == b);
  CHECK((a_first ? r.side_a : r.side_b) == a);
  REQUIRE(r.cut.size() == 1);
  CHECK(r.cut[0] == detect_outliers(d, module)[0]);
  CHECK(r.valid);
  CHECK_FALSE(r.degenerate);
  CHECK(r.ties == 0);

  // Exhaustive: the unique minimum cut and the best ratio cut are both this split.
  const auto candidates = t::enumerate_bipartitions(t::oracle_edges(d), module);
  std::size_t min_cut = 99;
  double best_ratio = 1e9;
  for (const auto& c : candidates) {
    min_cut = std::min(min_cut, c.cut.size());
    best_ratio = std::min(best_ratio, c.ratio);
  }
  std::size_t at_min = 0;
  for (const auto& c : candidates) {
    if (c.cut.size() == min_cut) {
      ++at_min;
      CHECK(c.side_a == a);
      CHECK(c.side_b == b);
    }
    if (c.ratio == best_ratio) CHECK(c.side_a == a);
  }
  CHECK(at_min == 1);
  CHECK(min_cut == r.cut.size());
}

TEST_CASE("fiedler split of the path-shaped outlier") {
  const auto d = t::design_fixture("outlier_path.sfd");
  const auto r = split_module(d, all_vertices(d));
  const auto a = ids(d, {"F1", "F2", "S1", "S2"});
  const auto b = ids(d, {"F3", "F4", "S3", "S4"});
  CHECK(((r.side_a == a && r.side_b == b) || (r.side_a == b && r.side_b == a)));
  REQUIRE(r.cut.size() == 1);
  CHECK(r.cut[0] == VertexEdge{*VertexOrder(d).find("F3"), *VertexOrder(d).find("S2")});
  CHECK(r.valid);

  const auto candidates = t::enumerate_bipartitions(t::oracle_edges(d), all_vertices(d));
  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& x, const auto& y) { return x.ratio < y.ratio; });
  CHECK(best->side_a == a);
}

TEST_CASE("fiedler split of the prototype's large module") {
  const auto d = t::prototype();
  const auto r = split_module(d, ids(d, {"F1", "F2", "S1", "S2"}));
  // Path S1-F1-S2-F2: the middle edge is cut.
  const auto left = ids(d, {"F1", "S1"});
  const auto right = ids(d, {"F2", "S2"});
  CHECK(((r.side_a == left && r.side_b == right) || (r.side_a == right && r.side_b == left)));
  CHECK(r.valid);
  CHECK(r.fiedler_value == doctest::Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("small modules cannot be split validly") {
  const auto d = t::prototype();
  const auto pair = split_module(d, ids(d, {"F3", "S3"}));
  CHECK_FALSE(pair.valid);
  CHECK(pair.side_a.size() == 1);
  CHECK(pair.side_b.size() == 1);
  CHECK(pair.cut.size() == 1);

  const auto iso = t::design_fixture("isolated.sfd");
  const auto single = split_module(iso, ids(iso, {"S3"}));
  CHECK_FALSE(single.valid);
  CHECK(single.side_a == ids(iso, {"S3"}));
  CHECK(single.side_b.empty());

  CHECK_THROWS_AS(split_module(d, ids(d, {"F3", "S3", "F4", "S4"})), std::invalid_argument);
}

TEST_CASE("split invariants on random connected modules") {
  std::mt19937_64 rng(606);
  int checked = 0;
  while (checked < 200) {
    const auto d = t::random_design(rng, 8, 0.45);
    const auto edges = t::oracle_edges(d);
    const std::size_t n = t::oracle_vertex_count(d);
    const auto components = connected_components(d);
    for (const auto& g : components.groups()) {
      if (g.size() < 2) continue;
      ++checked;
      const auto r = split_module(d, g);
      CHECK(r.fiedler.minCoeff() < 0.0);
      CHECK(r.fiedler.maxCoeff() > 0.0);
      CHECK(!r.side_a.empty());
      CHECK(!r.side_b.empty());
      std::vector<std::size_t> both = r.side_a;
      both.insert(both.end(), r.side_b.begin(), r.side_b.end());
      std::sort(both.begin(), both.end());
      CHECK(both == g);

      // Cut edges are exactly the crossing edges.
      std::vector<t::Edge> crossing;
      for (auto [u, v] : edges) {
        const bool ua = std::binary_search(r.side_a.begin(), r.side_a.end(), u);
        const bool va = std::binary_search(r.side_a.begin(), r.side_a.end(), v);
        const bool in = std::binary_search(g.begin(), g.end(), u);
        if (in && ua != va) crossing.emplace_back(u, v);
      }
      std::sort(crossing.begin(), crossing.end());
      CHECK(as_pairs(r.cut) == crossing);

      // Each side stays connected once the cut is removed.
      if (r.ties == 0) {
        CHECK(t::bfs_components(n, edges, r.side_a).size() == 1);
        CHECK(t::bfs_components(n, edges, r.side_b).size() == 1);
      }
    }
  }
}

TEST_CASE("reducibility flag rule on random designs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = t::random_design(rng, 8, 0.4);
    const auto components = connected_components(d);
    for (double threshold : {0.3, 0.5, 0.9}) {
      for (const auto& g : components.groups()) {
        const auto s = summarize_module(d, g, threshold);
        const auto bridges = t::brute_force_bridges(d, g);
        CHECK(as_pairs(s.bridges) == bridges);
        CHECK(s.reducible == (!bridges.empty() && s.density && *s.density < threshold));
        if (s.density) {
          CHECK(*s.density > 0.0);
          CHECK(*s.density <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("partition comparison") {
  const auto p = t::prototype();
  const auto m = build_matrices(p);
  const auto oracle = connected_components(p);
  const auto spectral = modules_from_kernel(eigendecompose(m.laplacian));
  const auto terms = edge_decomposition(m);
  const auto projector = modules_from_projectors(p, terms, partition_terms(terms));
  CHECK(compare_partitions(oracle, spectral).equal);
  CHECK(compare_partitions(oracle, projector).equal);
  CHECK(compare_partitions(spectral, projector).equal);
  CHECK(compare_partitions(oracle, oracle).equal);

  const auto report = build_module_report(p, oracle, spectral, projector);
  CHECK(report.all_agree());
  CHECK(report.modules.size() == 3);

  const auto separate = connected_components(t::circuit_fixture("grover.qhc"));
  const auto coupled = connected_components(t::circuit_fixture("grover_coupled.qhc"));
  const auto diff = compare_partitions(separate, coupled);
  CHECK_FALSE(diff.equal);
  CHECK(diff.only_in_first == std::vector<std::vector<std::size_t>>{{1, 5}, {2, 6}});
  CHECK(diff.only_in_second == std::vector<std::vector<std::size_t>>{{1, 2, 5, 6}});

  const auto report2 = build_module_report(p, oracle, spectral,
                                           VertexPartition(8, {{0, 1, 2, 3, 4, 5, 6, 7}},
                                                           PartitionMethod::kProjector));
  CHECK_FALSE(report2.all_agree());
  CHECK(report2.agreement[0][1]);
  CHECK_FALSE(report2.agreement[0][2]);

  CHECK_THROWS_AS(compare_partitions(oracle, VertexPartition(2, {{0, 1}}, PartitionMethod::kOracle)),
                  std::invalid_argument);
}

TEST_CASE("two planted clusters are separated") {
  std::mt19937_64 rng(11);
  int separated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto tc = t::two_cluster_design(rng);
    const auto s = split_module(tc.design, all_vertices(tc.design));
    if ((s.side_a == tc.cluster_a && s.side_b == tc.cluster_b) ||
        (s.side_a == tc.cluster_b && s.side_b == tc.cluster_a))
      ++separated;
    CHECK(s.side_a.size() + s.side_b.size() == s.parent.size());
  }
  CHECK(separated >= 95);
}

TEST_CASE("split prefers the balanced cut when the bridge is ambiguous") {
  // F6 has one edge into its own cluster and the bridge edge to S1, so both
  // placements cut one edge. The Fiedler split takes the 5|5 side.
  const auto d = SystemDesign::from_ids(
      "ambiguous", t::numbered("S", 4), t::numbered("F", 6),
      {{"S1", "F1"}, {"S1", "F2"}, {"S2", "F1"}, {"S2", "F2"}, {"S3", "F3"}, {"S3", "F5"},
       {"S3", "F6"}, {"S4", "F3"}, {"S4", "F4"}, {"S4", "F5"}, {"S1", "F6"}});
  const auto s = split_module(d, all_vertices(d));
  CHECK(s.side_a == ids(d, {"F1", "F2", "F6", "S1", "S2"}));
  CHECK(s.cut == std::vector<VertexEdge>{{5, 8}});
  CHECK(s.valid);
  CHECK_FALSE(s.degenerate);
  CHECK(s.fiedler_value == doctest::Approx(0.157764).epsilon(1e-5));
}
