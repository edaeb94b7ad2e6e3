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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxw {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-9;

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t checked_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r) || r > (std::size_t{1} << 40))
    throw DimensionOverflow("matrix dimension overflow");
  return r;
}

// Dense row-major matrix over an arbitrary scalar type.
template <class T>
struct BasicMatrix {
  std::size_t rows = 1, cols = 1;
  std::vector<T> a;

  BasicMatrix() : a(1, T{}) {}
  BasicMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(checked_mul(r, c), T{}) {}
  BasicMatrix(std::size_t r, std::size_t c, std::vector<T> v) : rows(r), cols(c), a(std::move(v)) {
    if (a.size() != checked_mul(r, c)) throw ShapeError("entry count does not match shape");
  }

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  bool operator==(const BasicMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

using Matrix = BasicMatrix<Complex>;

template <class T>
BasicMatrix<T> kron(const BasicMatrix<T>& x, const BasicMatrix<T>& y) {
  BasicMatrix<T> r(checked_mul(x.rows, y.rows), checked_mul(x.cols, y.cols));
  for (std::size_t i1 = 0; i1 < x.rows; ++i1)
    for (std::size_t j1 = 0; j1 < x.cols; ++j1) {
      const T& s = x(i1, j1);
      for (std::size_t i2 = 0; i2 < y.rows; ++i2)
        for (std::size_t j2 = 0; j2 < y.cols; ++j2)
          r(i1 * y.rows + i2, j1 * y.cols + j2) = s * y(i2, j2);
    }
  return r;
}

template <class T>
BasicMatrix<T> matmul(const BasicMatrix<T>& x, const BasicMatrix<T>& y) {
  if (x.cols != y.rows) throw ShapeError("matmul: inner dimensions differ");
  BasicMatrix<T> r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const T& s = x(i, k);
      if (s == T{}) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + s * y(k, j);
    }
  return r;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) { return matmul(x, y); }

inline Matrix operator*(Complex c, Matrix m) {
  for (auto& v : m.a) v *= c;
  return m;
}

inline Matrix adjoint(const Matrix& m) {
  Matrix r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

inline Matrix diag(const std::vector<Complex>& v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

inline double norm_inf(const Matrix& m) {
  double r = 0;
  for (const auto& v : m.a) r = std::max(r, std::abs(v));
  return r;
}

inline double max_distance(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw ShapeError("shape mismatch");
  double r = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i) r = std::max(r, std::abs(x.a[i] - y.a[i]));
  return r;
}

// Returns c with a ~= c*b, or nothing when the matrices are not proportional.
inline std::optional<Complex> scalar_equiv(const Matrix& x, const Matrix& y, double tol = kDefaultTol) {
  if (x.rows != y.rows || x.cols != y.cols) throw ShapeError("scalar_equiv: shape mismatch");
  std::size_t piv = 0;
  double best = -1;
  for (std::size_t i = 0; i < y.a.size(); ++i) {
    double v = std::abs(y.a[i]);
    if (v > best) best = v, piv = i;
  }
  double xn = norm_inf(x);
  if (best <= tol) {
    if (xn <= tol) return Complex{1, 0};
    return std::nullopt;
  }
  Complex c = x.a[piv] / y.a[piv];
  if (std::abs(c) <= tol) return std::nullopt;
  double bound = tol * std::max(1.0, xn);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (std::abs(x.a[i] - c * y.a[i]) > bound) return std::nullopt;
  return c;
}

inline std::string format_complex(Complex z) {
  auto clean = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", clean(z.real()), clean(z.imag()));
  return buf;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dyadic overflow");
  return r;
}

inline std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dyadic overflow");
  return r;
}

inline std::int64_t checked_shl(std::int64_t a, unsigned s) {
  if (s >= 62) {
    if (a == 0) return 0;
    throw std::overflow_error("dyadic overflow");
  }
  return checked_mul64(a, std::int64_t{1} << s);
}

// numerator / 2^exponent, kept canonical.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t n, unsigned e = 0) : num_(n), exp_(e) { canon(); }

  std::int64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  double value() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }
  bool is_zero() const { return num_ == 0; }

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
    unsigned e = std::max(x.exp_, y.exp_);
    return Dyadic(checked_add(checked_shl(x.num_, e - x.exp_), checked_shl(y.num_, e - y.exp_)), e);
  }
  friend Dyadic operator-(const Dyadic& x) { return Dyadic(checked_mul64(x.num_, -1), x.exp_); }
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
    return Dyadic(checked_mul64(x.num_, y.num_), x.exp_ + y.exp_);
  }
  bool operator==(const Dyadic& o) const = default;

  // Exact conversion from a double that happens to be dyadic with small exponent.
  static std::optional<Dyadic> from_double(double v, unsigned max_exp = 52) {
    for (unsigned e = 0; e <= max_exp; ++e) {
      double s = std::ldexp(v, static_cast<int>(e));
      if (std::abs(s) > 9.0e15) return std::nullopt;
      if (s == std::floor(s)) return Dyadic(static_cast<std::int64_t>(s), e);
    }
    return std::nullopt;
  }

  std::string str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
  }

 private:
  void canon() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ % 2) == 0) num_ /= 2, --exp_;
  }
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

// a0 + a1 w + a2 w^2 + a3 w^3 with w = e^{i pi/4}.
struct RingElement {
  std::array<Dyadic, 4> c{};

  RingElement() = default;
  RingElement(int v) { c[0] = Dyadic(v); }
  RingElement(Dyadic a0, Dyadic a1, Dyadic a2, Dyadic a3) : c{a0, a1, a2, a3} {}

  static RingElement omega_pow(int k) {
    k = ((k % 8) + 8) % 8;
    RingElement r;
    r.c[k % 4] = Dyadic(k >= 4 ? -1 : 1);
    return r;
  }
  static RingElement inv_sqrt2() { return {Dyadic(0), Dyadic(1, 1), Dyadic(0), Dyadic(-1, 1)}; }

  friend RingElement operator+(const RingElement& x, const RingElement& y) {
    RingElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
  }
  friend RingElement operator-(const RingElement& x) {
    RingElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = -x.c[i];
    return r;
  }
  friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }
  friend RingElement operator*(const RingElement& x, const RingElement& y) {
    RingElement r;
    for (int i = 0; i < 4; ++i) {
      if (x.c[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        Dyadic p = x.c[i] * y.c[j];
        if (i + j < 4)
          r.c[i + j] = r.c[i + j] + p;
        else
          r.c[i + j - 4] = r.c[i + j - 4] - p;
      }
    }
    return r;
  }
  bool operator==(const RingElement& o) const = default;

  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }

  std::string str() const {
    return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + "," + c[3].str() + ")";
  }
};

inline RingElement ring_mul(const RingElement& r, const RingElement& s) { return r * s; }

inline Complex ring_to_complex(const RingElement& r) {
  const double h = std::sqrt(2.0) / 2.0;
  const Complex w(h, h);
  return r.c[0].value() + r.c[1].value() * w + r.c[2].value() * Complex(0, 1) +
         r.c[3].value() * Complex(-h, h);
}

inline Matrix to_complex(const BasicMatrix<RingElement>& m) {
  Matrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = ring_to_complex(m.a[i]);
  return r;
}

}  // namespace zxw
