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

#pragma once

#include <cmath>
#include <stdexcept>

#include "zxw/numerics.hpp"

namespace zxw {

struct DegenerateDecomposition : std::domain_error {
  using std::domain_error::domain_error;
};

// Generalised phases: Z(l) = diag(1, l), X(l) = [[1+l, 1-l], [1-l, 1+l]].
struct GeneralTriple {
  Complex l1, l2, l3;
};

struct AngleTriple {
  double alpha = 0, beta = 0, gamma = 0;
};

inline Matrix general_z(Complex l) { return Matrix(2, 2, {1, 0, 0, l}); }
inline Matrix general_x(Complex l) { return Matrix(2, 2, {1.0 + l, 1.0 - l, 1.0 - l, 1.0 + l}); }

inline double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  if (a >= 2 * kPi) a -= 2 * kPi;
  return a;
}

inline double arg0(Complex z) { return std::abs(z) == 0 ? 0.0 : std::arg(z); }

// Returns (s1, s2, s3) with X(s3) Z(s2) X(s1) equal to Z(l3) X(l2) Z(l1) up to a nonzero scalar.
inline GeneralTriple color_swap_general(const GeneralTriple& t, double eps = 1e-12) {
  const Complex i(0, 1);
  Complex l1 = t.l1, l2 = t.l2, l3 = t.l3;
  Complex tau = (1.0 - l2) * (l1 + l3) + (1.0 + l2) * (1.0 + l1 * l3);
  Complex U = (1.0 + l2) * (l1 * l3 - 1.0);
  Complex V = (1.0 - l2) * (l1 - l3);
  Complex S = (1.0 - l2) * (l1 + l3) - (1.0 + l2) * (1.0 + l1 * l3);
  Complex T = tau * (U * U - V * V);
  if (std::abs(S) <= eps || std::abs(T) <= eps) throw DegenerateDecomposition("S or T vanishes");
  Complex st = std::sqrt(S / T), ts = std::sqrt(T / S);
  return {-i * (U + V) * st, (tau + i * ts) / (tau - i * ts), -i * (U - V) * st};
}

// Euler angles: Z(gamma) X(beta) Z(alpha) (alpha applied first) rewritten as X(g2) Z(b2) X(a2).
inline AngleTriple zxz_to_xzx(const AngleTriple& t) {
  const Complex i(0, 1);
  double a = t.alpha, b = t.beta, g = t.gamma;
  Complex z = std::cos(b / 2) * std::cos((a + g) / 2) + i * std::sin(b / 2) * std::cos((a - g) / 2);
  Complex z1 = std::cos(b / 2) * std::sin((a + g) / 2) - i * std::sin(b / 2) * std::sin((a - g) / 2);
  const double tiny = 1e-12;
  if (std::abs(z1) < tiny) {
    double az = arg0(z);
    return {wrap_angle(az), 0.0, wrap_angle(az)};
  }
  if (std::abs(z) < tiny) {
    double a1 = arg0(z1);
    return {wrap_angle(a1 + kPi / 2), kPi, wrap_angle(kPi / 2 - a1)};
  }
  double az = arg0(z), az1 = arg0(z1);
  double b2 = 2 * std::arg(Complex(std::abs(z / z1), 1.0));
  return {wrap_angle(az + az1), wrap_angle(b2), wrap_angle(az - az1)};
}

}  // namespace zxw
