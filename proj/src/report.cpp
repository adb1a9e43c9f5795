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

#include "densmod/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace densmod {

namespace {

using ordered_json = nlohmann::ordered_json;

double round_sig(double x, double zero_tolerance) {
  if (std::abs(x) < zero_tolerance) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string fmt(double x, const char* format = "%.12g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

ordered_json id_list(const VertexOrder& order, const std::vector<std::size_t>& vertices) {
  ordered_json arr = ordered_json::array();
  for (auto v : vertices) arr.push_back(order.id(v));
  return arr;
}

ordered_json groups_json(const VertexOrder& order, const VertexPartition& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : p.groups()) arr.push_back(id_list(order, g));
  return arr;
}

// Structor first, matching the `provides` direction.
ordered_json edge_json(const VertexOrder& order, const VertexEdge& e) {
  return ordered_json::array({order.id(e.v), order.id(e.u)});
}

std::string edge_text(const VertexOrder& order, const VertexEdge& e) {
  return "(" + order.id(e.v) + "," + order.id(e.u) + ")";
}

std::string join_ids(const VertexOrder& order, const std::vector<std::size_t>& vertices) {
  std::string out = "{";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += ", ";
    out += order.id(vertices[k]);
  }
  return out + "}";
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

AnalysisReport analyze(const SystemDesign& design, const AnalysisOptions& options) {
  DesignMatrices m = build_matrices(design);
  EigenSystem spectrum = eigendecompose(m.laplacian, options.tolerance);
  std::optional<double> density_tol;
  if (options.tolerance) density_tol = *options.tolerance / static_cast<double>(m.degree_sum);
  const EigenSystem density_spectrum = eigendecompose(m.density, density_tol);

  VertexPartition oracle = connected_components(design);
  VertexPartition spectral = zero_multiplicity(spectrum) > 0
                                 ? modules_from_kernel(spectrum)
                                 : VertexPartition::from_labels({}, PartitionMethod::kSpectral);
  auto terms = edge_decomposition(m);
  auto classes = partition_terms(terms);
  VertexPartition projector = modules_from_projectors(design, terms, classes);
  ModuleReport modules =
      build_module_report(design, oracle, spectral, projector, options.split_threshold);

  std::vector<std::string> warnings;
  for (auto v : isolated_vertices(design, m.order)) {
    warnings.push_back("isolated vertex " + m.order.id(v) + " forms a singleton module");
  }
  if (!modules.all_agree()) {
    warnings.push_back("module derivations disagree; check the zero tolerance");
  }

  std::size_t zero = zero_multiplicity(spectrum);
  std::size_t density_zero = zero_multiplicity(density_spectrum);
  auto inheritance = infer_inheritance(design);
  return AnalysisReport{design,
                        options,
                        std::move(m),
                        std::move(spectrum),
                        zero,
                        density_zero,
                        std::move(oracle),
                        std::move(spectral),
                        std::move(projector),
                        std::move(modules),
                        std::move(terms),
                        std::move(classes),
                        std::move(inheritance),
                        std::move(warnings)};
}

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  const VertexOrder& order = r.matrices.order;
  ordered_json j;

  ordered_json d;
  d["name"] = r.design.name();
  d["structors"] = ordered_json::array();
  for (const auto& s : r.design.structors()) d["structors"].push_back({{"id", s.id}, {"name", s.display_name}});
  d["functionals"] = ordered_json::array();
  for (const auto& f : r.design.functionals()) d["functionals"].push_back({{"id", f.id}, {"name", f.display_name}});
  d["edges"] = ordered_json::array();
  for (const auto& e : r.design.provides()) {
    d["edges"].push_back({r.design.structors()[e.structor].id, r.design.functionals()[e.functional].id});
  }
  d["sequence"] = r.design.sequence() ? ordered_json(*r.design.sequence()) : ordered_json();
  d["inheritance"] = ordered_json::array();
  for (const auto& f : r.inheritance) {
    d["inheritance"].push_back({{"functional", f.functional}, {"structors", f.structors}});
  }
  d["isolated"] = id_list(order, isolated_vertices(r.design, order));
  j["design"] = std::move(d);
  j["vertex_order"] = order.ids();

  ordered_json s;
  s["degree_sum"] = r.matrices.degree_sum;
  s["tolerance"] = round_sig(r.laplacian_spectrum.tolerance, 0.0);
  s["laplacian_eigenvalues"] = ordered_json::array();
  for (Eigen::Index k = 0; k < r.laplacian_spectrum.values.size(); ++k) {
    s["laplacian_eigenvalues"].push_back(
        round_sig(r.laplacian_spectrum.values(k), r.laplacian_spectrum.tolerance));
  }
  s["zero_multiplicity"] = r.zero_multiplicity;
  s["density_zero_multiplicity"] = r.density_zero_multiplicity;
  j["spectrum"] = std::move(s);

  ordered_json p;
  p["oracle"] = groups_json(order, r.oracle);
  p["spectral"] = groups_json(order, r.spectral);
  p["projector"] = groups_json(order, r.projector);
  p["agreement"] = {{"oracle_spectral", r.modules.agreement[0][1]},
                    {"oracle_projector", r.modules.agreement[0][2]},
                    {"spectral_projector", r.modules.agreement[1][2]}};
  p["all_agree"] = r.methods_agree();
  j["partitions"] = std::move(p);

  j["split_threshold"] = r.options.split_threshold;
  j["modules"] = ordered_json::array();
  for (const auto& m : r.modules.modules) {
    ordered_json mj;
    mj["vertices"] = id_list(order, m.vertices);
    mj["structors"] = m.structors;
    mj["functionals"] = m.functionals;
    mj["edges"] = m.edges;
    mj["density"] = m.density ? ordered_json(*m.density) : ordered_json();
    mj["bridges"] = ordered_json::array();
    for (const auto& b : m.bridges) mj["bridges"].push_back(edge_json(order, b));
    mj["reducible"] = m.reducible;
    j["modules"].push_back(std::move(mj));
  }

  ordered_json pr;
  pr["coefficient"] = 1.0 / static_cast<double>(r.matrices.degree_sum);
  pr["classes"] = ordered_json::array();
  DiracStyle style{r.options.verbose_projectors, std::nullopt};
  for (const auto& cls : r.term_classes) {
    std::vector<std::size_t> vertices;
    ordered_json terms = ordered_json::array();
    for (auto k : cls) {
      terms.push_back(render_dirac(r.terms[k], order, style));
      vertices.push_back(r.terms[k].u);
      vertices.push_back(r.terms[k].v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    pr["classes"].push_back({{"module", id_list(order, vertices)}, {"terms", std::move(terms)}});
  }
  j["projectors"] = std::move(pr);

  if (r.options.include_matrices) {
    j["matrices"] = {{"degree", matrix_json(r.matrices.degree)},
                     {"adjacency", matrix_json(r.matrices.adjacency)},
                     {"laplacian", matrix_json(r.matrices.laplacian)},
                     {"density", matrix_json(r.matrices.density)}};
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  const VertexOrder& order = r.matrices.order;
  std::ostringstream out;
  out << "design " << r.design.name() << ": " << r.design.structors().size() << " structors, "
      << r.design.functionals().size() << " functionals, " << r.design.provides().size()
      << " edges\n";
  if (r.design.sequence()) {
    out << "sequence:";
    for (const auto& s : *r.design.sequence()) out << ' ' << s;
    out << '\n';
  }
  for (const auto& f : r.inheritance) {
    out << "inheritance: " << f.functional << " provided by";
    for (const auto& s : f.structors) out << ' ' << s;
    out << '\n';
  }
  out << "degree-sum " << r.matrices.degree_sum << ", density = "
      << fmt(1.0 / static_cast<double>(r.matrices.degree_sum)) << " * L\n";
  out << "laplacian eigenvalues:";
  for (Eigen::Index k = 0; k < r.laplacian_spectrum.values.size(); ++k) {
    out << ' ' << fmt(round_sig(r.laplacian_spectrum.values(k), r.laplacian_spectrum.tolerance), "%.6g");
  }
  out << "\nzero multiplicity " << r.zero_multiplicity << " (tolerance "
      << fmt(r.laplacian_spectrum.tolerance, "%.3g") << ")\n";
  out << "methods " << (r.methods_agree() ? "agree" : "DISAGREE") << ": oracle "
      << r.oracle.size() << ", spectral " << r.spectral.size() << ", projector "
      << r.projector.size() << " modules\n\n";

  DiracStyle style{r.options.verbose_projectors, std::nullopt};
  for (std::size_t k = 0; k < r.modules.modules.size(); ++k) {
    const auto& m = r.modules.modules[k];
    out << "module #" << k + 1 << ' ' << join_ids(order, m.vertices) << ": " << m.structors
        << " structors, " << m.functionals << " functionals, " << m.edges << " edges, density "
        << (m.density ? fmt(*m.density, "%.4g") : std::string("n/a"));
    if (!m.bridges.empty()) {
      out << ", bridges";
      for (const auto& b : m.bridges) out << ' ' << edge_text(order, b);
    }
    if (m.reducible) out << " [reducible]";
    out << '\n';
  }
  out << "\nmodule projectors:\n";
  for (std::size_t c = 0; c < r.term_classes.size(); ++c) {
    out << "#" << c + 1 << ' ';
    for (std::size_t t = 0; t < r.term_classes[c].size(); ++t) {
      if (t) out << " + ";
      out << render_dirac(r.terms[r.term_classes[c][t]], order, style);
    }
    out << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  if (name == "degree") return MatrixKind::kDegree;
  if (name == "adjacency") return MatrixKind::kAdjacency;
  if (name == "laplacian") return MatrixKind::kLaplacian;
  if (name == "density") return MatrixKind::kDensity;
  return std::nullopt;
}

std::string matrix_to_csv(const DesignMatrices& m, MatrixKind kind) {
  const Eigen::MatrixXd* mat = nullptr;
  switch (kind) {
    case MatrixKind::kDegree:
      mat = &m.degree;
      break;
    case MatrixKind::kAdjacency:
      mat = &m.adjacency;
      break;
    case MatrixKind::kLaplacian:
      mat = &m.laplacian;
      break;
    case MatrixKind::kDensity:
      mat = &m.density;
      break;
  }
  const bool integral = kind != MatrixKind::kDensity;
  std::ostringstream out;
  for (const auto& id : m.order.ids()) out << ',' << id;
  out << '\n';
  for (Eigen::Index i = 0; i < mat->rows(); ++i) {
    out << m.order.id(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < mat->cols(); ++j) {
      const double x = (*mat)(i, j) == 0.0 ? 0.0 : (*mat)(i, j);  // no "-0"
      out << ',' << (integral ? std::to_string(std::lround(x)) : fmt(x, "%.15g"));
    }
    out << '\n';
  }
  return out.str();
}

std::string design_to_dot(const SystemDesign& design, const VertexPartition& modules) {
  VertexOrder order(design);
  std::ostringstream out;
  out << "graph \"" << design.name() << "\" {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t g = 0; g < modules.size(); ++g) {
    out << "  subgraph cluster_" << g << " {\n";
    out << "    label=\"Module " << g + 1 << "\";\n";
    out << "    style=filled;\n    color=lightblue;\n";
    for (auto v : modules.groups()[g]) {
      const bool structor = order.kind(v) == VertexKind::kStructor;
      const Entity& e = structor ? design.structors()[v - order.functional_count()]
                                 : design.functionals()[v];
      out << "    \"" << e.id << "\" [shape=" << (structor ? "box" : "ellipse")
          << ", style=filled, fillcolor=" << (structor ? "palegreen" : "orange")
          << ", label=\"" << e.id << "\\n" << e.display_name << "\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : design.provides()) {
    out << "  \"" << design.structors()[e.structor].id << "\" -- \""
        << design.functionals()[e.functional].id << "\";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json split_to_json(const SystemDesign& design, const SplitResult& split,
                                     const ModuleSummary& summary, double split_threshold) {
  VertexOrder order(design);
  ordered_json j;
  j["module"] = id_list(order, split.parent);
  j["density"] = summary.density ? ordered_json(*summary.density) : ordered_json();
  j["split_threshold"] = split_threshold;
  j["bridges"] = ordered_json::array();
  for (const auto& b : summary.bridges) j["bridges"].push_back(edge_json(order, b));
  j["recommended"] = summary.reducible;
  j["fiedler_value"] = round_sig(split.fiedler_value, 0.0);
  ordered_json fv = ordered_json::object();
  for (std::size_t k = 0; k < split.parent.size(); ++k) {
    fv[order.id(split.parent[k])] = round_sig(split.fiedler(static_cast<Eigen::Index>(k)), 1e-12);
  }
  j["fiedler_vector"] = std::move(fv);
  j["side_a"] = id_list(order, split.side_a);
  j["side_b"] = id_list(order, split.side_b);
  j["cut"] = ordered_json::array();
  for (const auto& e : split.cut) j["cut"].push_back(edge_json(order, e));
  j["valid"] = split.valid;
  j["degenerate"] = split.degenerate;
  j["ties"] = split.ties;
  ordered_json warnings = ordered_json::array();
  if (split.degenerate) warnings.push_back("Fiedler eigenvalue is degenerate; split is one of several");
  if (split.ties) {
    warnings.push_back(std::to_string(split.ties) + " Fiedler entries at zero assigned to side A");
  }
  j["warnings"] = std::move(warnings);
  return j;
}

std::string split_to_text(const SystemDesign& design, const SplitResult& split,
                          const ModuleSummary& summary, double split_threshold) {
  VertexOrder order(design);
  std::ostringstream out;
  out << "module " << join_ids(order, split.parent) << ", density "
      << (summary.density ? fmt(*summary.density, "%.4g") : std::string("n/a"))
      << " (threshold " << fmt(split_threshold, "%.4g") << ")\n";
  out << "bridges:";
  if (summary.bridges.empty()) out << " none";
  for (const auto& b : summary.bridges) out << ' ' << edge_text(order, b);
  out << "\nsplit " << (summary.reducible ? "recommended" : "not recommended") << '\n';
  if (split.parent.size() >= 2) {
    out << "fiedler value " << fmt(split.fiedler_value, "%.6g") << "\nfiedler vector:";
    for (std::size_t k = 0; k < split.parent.size(); ++k) {
      out << ' ' << order.id(split.parent[k]) << '='
          << fmt(round_sig(split.fiedler(static_cast<Eigen::Index>(k)), 1e-12), "%.6g");
    }
    out << '\n';
  }
  out << "side A " << join_ids(order, split.side_a) << "\nside B " << join_ids(order, split.side_b)
      << "\ncut:";
  if (split.cut.empty()) out << " none";
  for (const auto& e : split.cut) out << ' ' << edge_text(order, e);
  out << "\nvalid " << (split.valid ? "yes" : "no") << '\n';
  if (split.degenerate) out << "warning: Fiedler eigenvalue is degenerate; split is one of several\n";
  if (split.ties) out << "warning: " << split.ties << " Fiedler entries at zero assigned to side A\n";
  return out.str();
}

}  // namespace densmod
