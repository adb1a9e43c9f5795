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

#include "densmod/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "densmod/errors.hpp"
#include "densmod/ingest.hpp"
#include "densmod/modularity.hpp"
#include "densmod/report.hpp"

namespace densmod::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, 0, 0, "cannot write file");
  file << text;
}

struct InputFlags {
  std::string path;
  std::string format;
};

void add_input(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("path", in.path, "Design (.sfd), circuit (.qhc) or JSON design file")
      ->required();
  cmd->add_option("--format", in.format, "Input format, overriding the file extension")
      ->check(CLI::IsMember({"design", "circuit", "json"}));
}

}  // namespace

SystemDesign load_design(const std::string& path, const std::string& format) {
  std::filesystem::path p(path);
  std::string fmt = format;
  if (fmt.empty()) {
    const auto ext = p.extension().string();
    if (ext == ".qhc") {
      fmt = "circuit";
    } else if (ext == ".json") {
      fmt = "json";
    } else {
      fmt = "design";
    }
  }
  const std::string text = read_file(path);
  const std::string name = p.stem().string();
  if (fmt == "circuit") return lower_circuit(parse_circuit(text, path), name);
  if (fmt == "json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path, 0, e.byte, e.what());
    }
    if (!j.contains("name")) j["name"] = name;
    return design_from_json(j);
  }
  return parse_design(text, name, path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Module analysis of Structor/Functional software designs", "densmod"};
  app.require_subcommand(1);

  InputFlags analyze_in;
  bool json = false;
  AnalysisOptions options;
  double tolerance = 0.0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Derive and cross-check the design's modules");
  add_input(analyze_cmd, analyze_in);
  analyze_cmd->add_flag("--json", json, "Emit the JSON report");
  analyze_cmd->add_option("--split-threshold", options.split_threshold,
                          "Density below which a bridged module is reducible")
      ->check(CLI::Range(0.0, 1.0));
  analyze_cmd->add_flag("--verbose-projectors", options.verbose_projectors,
                        "Show the 1/d coefficient on every projector");
  auto* tol_opt = analyze_cmd->add_option("--tolerance", tolerance,
                                          "Absolute zero-eigenvalue tolerance");
  analyze_cmd->add_flag("--matrices", options.include_matrices, "Include all matrices");

  InputFlags matrices_in;
  std::string which;
  std::string matrices_out;
  auto* matrices_cmd = app.add_subcommand("matrices", "Export one design matrix as CSV");
  add_input(matrices_cmd, matrices_in);
  matrices_cmd->add_option("which", which, "degree, adjacency, laplacian or density")
      ->required()
      ->check(CLI::IsMember({"degree", "adjacency", "laplacian", "density"}));
  matrices_cmd->add_option("-o,--out", matrices_out, "Output file (default stdout)");

  InputFlags split_in;
  std::string selector;
  double split_threshold = kDefaultSplitThreshold;
  bool split_json = false;
  auto* split_cmd = app.add_subcommand("split", "Fiedler bisection of one module");
  add_input(split_cmd, split_in);
  split_cmd->add_option("module", selector, "Id of a vertex in the module to split")->required();
  split_cmd->add_option("--split-threshold", split_threshold,
                        "Density below which a bridged module is reducible")
      ->check(CLI::Range(0.0, 1.0));
  split_cmd->add_flag("--json", split_json, "Emit JSON");

  InputFlags dot_in;
  std::string dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "Render the design graph with module clusters");
  add_input(dot_cmd, dot_in);
  dot_cmd->add_option("-o,--out", dot_out, "Output file (default stdout)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  // Input stage: anything wrong here is a parse error.
  const InputFlags& in = analyze_cmd->parsed()    ? analyze_in
                         : matrices_cmd->parsed() ? matrices_in
                         : split_cmd->parsed()    ? split_in
                                                  : dot_in;
  std::optional<SystemDesign> design;
  try {
    design = load_design(in.path, in.format);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    if (matrices_cmd->parsed()) {
      const DesignMatrices m = build_matrices(*design);
      emit(matrix_to_csv(m, *parse_matrix_kind(which)), matrices_out, out);
      return kExitOk;
    }

    if (tol_opt->count() > 0) options.tolerance = tolerance;
    const AnalysisReport report = analyze(*design, options);

    if (analyze_cmd->parsed()) {
      if (json) {
        out << report_to_json(report).dump(2) << '\n';
      } else {
        out << report_to_text(report);
      }
    } else if (dot_cmd->parsed()) {
      emit(design_to_dot(*design, report.oracle), dot_out, out);
    }
    if (!report.methods_agree()) {
      err << "error: oracle, spectral and projector modules disagree\n";
      return kExitDisagreement;
    }
    if (!split_cmd->parsed()) return kExitOk;

    const auto vertex = report.matrices.order.find(selector);
    if (!vertex) {
      err << "error: unknown module selector '" << selector << "'\n";
      return kExitParseError;
    }
    const auto& module = report.oracle.groups()[report.oracle.group_of(*vertex)];
    const ModuleSummary summary = summarize_module(*design, module, split_threshold);
    const SplitResult split = split_module(*design, module);
    if (split_json) {
      out << split_to_json(*design, split, summary, split_threshold).dump(2) << '\n';
    } else {
      out << split_to_text(*design, split, summary, split_threshold);
    }
    return split.valid ? kExitOk : kExitSplitInvalid;
  } catch (const DesignError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidDesign;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisagreement;
  }
}

}  // namespace densmod::cli
