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

#pragma once

#include <string_view>

namespace snarkpipe::corpus {

// Source of examples/coloring5.zkp, bundled so `snarkpipe selftest` runs
// without the examples directory.
inline constexpr std::string_view kColoring5 = R"zkp(
# Proper 3-coloring of the 5-vertex graph with edges
#   (1,2) (1,3) (1,4) (1,5) (2,5) (2,3) (3,4) (4,5)
# f1 is nonzero iff adjacent vertices get different colors,
# f2 is zero iff every color lies in {1, 2, 3}.
inputs c1, c2, c3, c4, c5;

f1 := (c1 - c2) * (c1 - c3) * (c1 - c4) * (c1 - c5)
    * (c2 - c5) * (c2 - c3) * (c3 - c4) * (c4 - c5);

f2 := (1 - c1) * (2 - c1) * (3 - c1)
    + (1 - c2) * (2 - c2) * (3 - c2)
    + (1 - c3) * (2 - c3) * (3 - c3)
    + (1 - c4) * (2 - c4) * (3 - c4)
    + (1 - c5) * (2 - c5) * (3 - c5);

assert f1 != 0;
assert f2 == 0;
)zkp";

}  // namespace snarkpipe::corpus
