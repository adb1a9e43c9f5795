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

#ifndef DENSMOD_CLI_HPP_
#define DENSMOD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "densmod/design.hpp"

namespace densmod::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;     // unreadable or malformed input, bad usage
inline constexpr int kExitInvalidDesign = 2;  // design has no edges
inline constexpr int kExitDisagreement = 3;   // module derivations disagree
inline constexpr int kExitSplitInvalid = 4;   // a split side lacks a structor or functional

/// Loads a design from `path`. `format` is one of design, circuit, json, or
/// empty to pick by extension (.sfd, .qhc, .json). The design is named after
/// the file stem. Throws ParseError or DesignError.
SystemDesign load_design(const std::string& path, const std::string& format = "");

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace densmod::cli

#endif  // DENSMOD_CLI_HPP_
