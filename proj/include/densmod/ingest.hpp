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

#ifndef DENSMOD_INGEST_HPP_
#define DENSMOD_INGEST_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "densmod/design.hpp"

namespace densmod {

// Line-oriented design format:
//
//   structor <id> "<display name>"
//   functional <id> "<display name>"
//   provides <structor-id> <functional-id>
//   # comment
//
// Ids must be declared before a `provides` names them.

struct StructorDecl {
  Entity entity;
};
struct FunctionalDecl {
  Entity entity;
};
struct ProvidesDecl {
  std::string structor;
  std::string functional;
};

struct DesignStatement {
  std::size_t line;
  std::variant<StructorDecl, FunctionalDecl, ProvidesDecl> decl;
};

/// Parsed, reference-checked statements of one design file.
struct DesignDocument {
  std::string source;
  std::vector<DesignStatement> statements;
};

DesignDocument parse_design_document(std::string_view text, std::string source = "<input>");

/// Builds the design; throws ParseError when it would be empty.
SystemDesign to_design(const DesignDocument& doc, std::string name);

/// parse_design_document + to_design. Throws ParseError on any failure.
SystemDesign parse_design(std::string_view text, std::string name = "design",
                          std::string source = "<input>");

/// Renders `design` in the design format; parse_design inverts it.
std::string serialize_design(const SystemDesign& design);

// Circuit format:
//
//   qubits <n>                      (first statement)
//   box <id> "<display>" lines <lo>-<hi> functional "<display>"
//   couple <box-A> <box-B> via <functional>
//   # comment

struct CircuitBox {
  std::string id;
  std::string display_name;
  std::size_t lo;
  std::size_t hi;
  std::string functional;
  std::size_t line;
};

struct CircuitCoupling {
  std::string from_box;
  std::string to_box;
  std::string via;
  std::size_t line;
};

struct CircuitDocument {
  std::string source;
  std::size_t qubits = 0;
  std::vector<CircuitBox> boxes;  // left-to-right order
  std::vector<CircuitCoupling> couplings;
};

CircuitDocument parse_circuit(std::string_view text, std::string source = "<input>");

/// One structor S<k> per box, one functional F<k> per distinct functional
/// name in order of first use, one edge per box. A coupling (A, B, via F)
/// adds the edge (structor of B, F), where F must be A's functional, named
/// either by its lowered id or by its display name.
SystemDesign lower_circuit(const CircuitDocument& doc, std::string name = "circuit");

/// JSON mirror of SystemDesign:
/// {"name", "structors":[{"id","name"}], "functionals":[...],
///  "provides":[[structor, functional], ...], "sequence":[...]?}
nlohmann::json design_to_json(const SystemDesign& design);
SystemDesign design_from_json(const nlohmann::json& j);

}  // namespace densmod

#endif  // DENSMOD_INGEST_HPP_
