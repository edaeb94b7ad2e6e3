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

// Random qubit ZX diagrams for property tests and benchmarks.

#pragma once

#include <cmath>
#include <random>

#include "zxw/build.hpp"

namespace zxw {

struct RandomDiagramOptions {
  int max_nodes = 6;
  int max_wires = 3;
  bool pi4_phases = false;    // phases restricted to multiples of pi/4
  bool triangles = true;
  bool lambda_boxes = true;   // dyadic weights when pi4_phases is set
  bool self_loops = false;
};

inline Phase random_phase(std::mt19937_64& rng, bool pi4) {
  if (pi4) return Phase::turn(std::uniform_int_distribution<int>(0, 7)(rng), 4);
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return Phase::turn(std::uniform_int_distribution<int>(0, 3)(rng), 2);
  return Phase::radians(std::uniform_real_distribution<double>(0, 2 * kPi)(rng));
}

// Layered random diagram: a few wires, then generators placed on random wires until the node budget is spent.
inline Diagram random_zx_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opt = {}) {
  using namespace build;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int wires = pick(1, opt.max_wires);
  Diagram d = I(wires);
  int budget = pick(1, opt.max_nodes);
  int used = 0;
  while (used < budget) {
    int w = d.n_out;
    int choice = pick(0, 9);
    Diagram g;
    int span = 1, cost = 1;
    switch (choice) {
      case 0:
      case 1: g = Z(random_phase(rng, opt.pi4_phases)); break;
      case 2: g = X(random_phase(rng, opt.pi4_phases)); break;
      case 3: g = H(); break;
      case 4:
        if (!opt.triangles) continue;
        g = T(pick(0, 3) == 0 ? -1 : 1);
        break;
      case 5: {
        if (!opt.lambda_boxes) continue;
        double l = opt.pi4_phases ? std::ldexp(pick(0, 12), -pick(0, 3)) : std::uniform_real_distribution<double>(0, 3)(rng);
        g = L(l);
        break;
      }
      case 6: {
        // Split one wire, or join two wires through a Z/X pair.
        if (w < 2 || (w < opt.max_wires && pick(0, 1))) {
          g = pick(0, 1) ? Z(random_phase(rng, opt.pi4_phases), 1, 2) : X(random_phase(rng, opt.pi4_phases), 1, 2);
          break;
        }
        g = seq({par({Z(random_phase(rng, opt.pi4_phases), 1, 2), I()}),
                 par({I(), pick(0, 1) ? X(random_phase(rng, opt.pi4_phases), 2, 1) : Z(random_phase(rng, opt.pi4_phases), 2, 1)})});
        span = 2, cost = 2;
        break;
      }
      case 7: {
        if (w < 2) continue;
        g = pick(0, 1) ? Z(random_phase(rng, opt.pi4_phases), 2, 1) : X(random_phase(rng, opt.pi4_phases), 2, 1);
        span = 2;
        break;
      }
      case 8: {
        if (w < 2) continue;
        g = Sw();
        span = 2;
        break;
      }
      case 9: {
        if (!opt.self_loops) continue;
        g = spider_self_loop(Z(random_phase(rng, opt.pi4_phases), 1, 3), pick(0, 1) ? H() : I());
        break;
      }
    }
    if (span > w) continue;
    int at = pick(0, w - span);
    d = seq({d, par({I(at), g, I(w - span - at)})});
    used += cost;
  }
  return d;
}

}  // namespace zxw
