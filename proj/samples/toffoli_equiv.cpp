// Copyright 2026 The zxw Authors
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

// Builds the Toffoli gate twice, once from Clifford+T gates and once from triangles, and checks that both
// agree with each other and with the CCX permutation.

#include <cstdio>

#include "zxw/gallery.hpp"
#include "zxw/rewrite.hpp"

int main() {
  using namespace zxw;
  Diagram circuit = gallery::toffoli_circuit();
  Diagram triangle = gallery::toffoli_triangle();
  std::printf("circuit form:  %zu nodes\n", circuit.nodes.size());
  std::printf("triangle form: %zu nodes\n", triangle.nodes.size());

  Diagram smaller = simplify(circuit);
  std::printf("circuit form after simplify: %zu nodes\n", smaller.nodes.size());

  auto c = gallery::check_equiv(circuit, triangle);
  if (!c) {
    std::printf("the two forms differ\n");
    return 1;
  }
  std::printf("equal up to the scalar %s\n", format_complex(*c).c_str());

  auto ccx = gallery::expected_matrix("toffoli-triangle");
  bool ok = scalar_equiv(interpret(smaller), *ccx).has_value();
  std::printf("matches the CCX permutation: %s\n", ok ? "yes" : "no");
  return ok ? 0 : 1;
}
