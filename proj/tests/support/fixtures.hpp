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

#ifndef DENSMOD_TESTS_SUPPORT_FIXTURES_HPP_
#define DENSMOD_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "densmod/design.hpp"
#include "densmod/ingest.hpp"

namespace densmod::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(DENSMOD_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SystemDesign prototype() {
  return parse_design(read_fixture("prototype.sfd"), "prototype");
}

inline SystemDesign design_fixture(const std::string& name) {
  return parse_design(read_fixture(name), name.substr(0, name.find('.')));
}

inline SystemDesign circuit_fixture(const std::string& name) {
  return lower_circuit(parse_circuit(read_fixture(name), name), name.substr(0, name.find('.')));
}

}  // namespace densmod::testing

#endif  // DENSMOD_TESTS_SUPPORT_FIXTURES_HPP_
