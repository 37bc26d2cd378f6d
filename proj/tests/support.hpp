// Copyright 2026 The snarkpipe Authors.
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

// Shared fixtures for the test binaries.

#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "snarkpipe/snarkpipe.hpp"

namespace snarkpipe::testing {

inline std::string example_path(const std::string& name) {
  return std::string(SNARKPIPE_EXAMPLES_DIR) + "/" + name;
}

inline std::string read_example(const std::string& name) {
  std::ifstream in(example_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::vector<std::string>& corpus_programs() {
  static const std::vector<std::string> names = {"coloring5.zkp", "product.zkp", "cubic.zkp",
                                                 "nonzero_quadratic.zkp"};
  return names;
}

inline Valuation colors(const Field& f, const std::array<uint64_t, 5>& c) {
  Valuation in;
  for (size_t i = 0; i < 5; ++i) in["c" + std::to_string(i + 1)] = f.element(c[i]);
  return in;
}

// Color vector number `code` in base 3, digits mapped to {1,2,3}.
inline std::array<uint64_t, 5> color_vector(uint64_t code) {
  std::array<uint64_t, 5> c{};
  for (auto& x : c) {
    x = 1 + code % 3;
    code /= 3;
  }
  return c;
}

// The 3-coloring graph, written out independently of the program text.
inline const std::vector<std::pair<int, int>>& coloring_edges() {
  static const std::vector<std::pair<int, int>> edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5},
                                                         {2, 5}, {2, 3}, {3, 4}, {4, 5}};
  return edges;
}

inline bool proper_coloring(const std::array<uint64_t, 5>& c) {
  for (auto [a, b] : coloring_edges())
    if (c[a - 1] == c[b - 1]) return false;
  for (uint64_t x : c)
    if (x < 1 || x > 3) return false;
  return true;
}

inline Valuation random_inputs(const Program& prog, const Field& f, DeterministicRng& rng) {
  Valuation in;
  for (const auto& name : prog.inputs) in[name] = rng.field_element(f);
  return in;
}

struct Compiled {
  Program program;
  Circuit circuit;
  Qap qap;
};

inline Compiled compile(const std::string& source, const Field& f = Field()) {
  Compiled c{parse_program(source), {}, {}};
  c.circuit = flatten(c.program, f);
  c.qap = build_qap(c.circuit);
  return c;
}

}  // namespace snarkpipe::testing
