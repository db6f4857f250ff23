// Copyright 2026 The fswap Authors
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
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fswap {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2*pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

/// True when `a` is a multiple of 2*pi within `tol`.
inline bool angle_is_zero(double a, double tol = 1e-12) {
  double r = normalize_angle(a);
  return r < tol || kTwoPi - r < tol;
}

inline cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
  std::array<cplx, 4> m{cplx{1}, cplx{0}, cplx{0}, cplx{1}};

  cplx operator()(int r, int c) const { return m[2 * r + c]; }
  cplx& operator()(int r, int c) { return m[2 * r + c]; }

  static Mat2 identity() { return {}; }
  static Mat2 from(cplx a, cplx b, cplx c, cplx d) { return Mat2{{a, b, c, d}}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return from(a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]);
  }

  Mat2 adjoint() const {
    return from(std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3]));
  }
};

namespace gates {

/// Virtual Z: diag(1, e^{i a}).
inline Mat2 vz(double a) { return Mat2::from(1, 0, 0, expi(a)); }

/// Rotation exp(-i a X / 2).
inline Mat2 rx(double a) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  return Mat2::from(c, cplx{0, -s}, cplx{0, -s}, c);
}

/// Rotation exp(-i a (cos(t) X + sin(t) Z) / 2): an X rotation whose axis is
/// tilted by `t` toward Z.
inline Mat2 tilted_rx(double a, double t) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  const double nx = std::cos(t), nz = std::sin(t);
  return Mat2::from(cplx{c, -s * nz}, cplx{0, -s * nx}, cplx{0, -s * nx}, cplx{c, s * nz});
}

inline Mat2 x90() { return rx(kPi / 2); }

inline Mat2 hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return Mat2::from(r, r, r, -r);
}

inline Mat2 pauli_x() { return Mat2::from(0, 1, 1, 0); }
inline Mat2 pauli_y() { return Mat2::from(0, cplx{0, -1}, cplx{0, 1}, 0); }
inline Mat2 pauli_z() { return Mat2::from(1, 0, 0, -1); }

}  // namespace gates

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim) {
    Matrix r(dim);
    for (std::size_t i = 0; i < dim; ++i) r(i, i) = 1;
    return r;
  }

  std::size_t dim() const { return dim_; }
  cplx operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& mutable_data() { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = a.dim_;
    Matrix r(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{0}) continue;
        for (std::size_t j = 0; j < d; ++j) r.data_[i * d + j] += aik * b.data_[k * d + j];
      }
    return r;
  }

  friend Matrix operator*(cplx s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  Matrix adjoint() const {
    Matrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  cplx trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs_diff(const Matrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    double m = 0;
    for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
    return m;
  }

  bool is_unitary(double tol = 1e-9) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) < tol;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix r(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) r(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return r;
}

inline Matrix to_matrix(const Mat2& m) {
  Matrix r(2);
  r(0, 0) = m(0, 0);
  r(0, 1) = m(0, 1);
  r(1, 0) = m(1, 0);
  r(1, 1) = m(1, 1);
  return r;
}

/// Diagonal 4x4 controlled phase diag(1, 1, 1, e^{i phi}).
inline Matrix cphase_matrix(double phi) {
  Matrix r = Matrix::identity(4);
  r(3, 3) = expi(phi);
  return r;
}

// Qubit q of an n-qubit register is bit (n - 1 - q) of the basis index, so
// qubit 0 is the leftmost character of a bitstring.
inline std::size_t qubit_shift(int n, int q) { return static_cast<std::size_t>(n - 1 - q); }

/// Left-multiplies an n-qubit operator stored as columns in `m` by a
/// single-qubit gate on qubit q. Works for any number of columns.
inline void apply_1q_left(std::vector<cplx>& v, std::size_t cols, int n, int q, const Mat2& g) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t bit = std::size_t{1} << qubit_shift(n, q);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & bit) continue;
    const std::size_t r1 = r | bit;
    cplx* a = &v[r * cols];
    cplx* b = &v[r1 * cols];
    for (std::size_t c = 0; c < cols; ++c) {
      const cplx x0 = a[c], x1 = b[c];
      a[c] = g.m[0] * x0 + g.m[1] * x1;
      b[c] = g.m[2] * x0 + g.m[3] * x1;
    }
  }
}

/// Left-multiplies by diag(1,1,1,e^{i phi}) acting on qubits (a, b).
inline void apply_cphase_left(std::vector<cplx>& v, std::size_t cols, int n, int a, int b,
                              double phi) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t ba = std::size_t{1} << qubit_shift(n, a);
  const std::size_t bb = std::size_t{1} << qubit_shift(n, b);
  const cplx ph = expi(phi);
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & ba) && (r & bb)) {
      cplx* row = &v[r * cols];
      for (std::size_t c = 0; c < cols; ++c) row[c] *= ph;
    }
  }
}

/// Left-multiplies by an arbitrary 4x4 operator on qubits (a, b), with a as the
/// more significant local index.
inline void apply_2q_left(std::vector<cplx>& v, std::size_t cols, int n, int a, int b,
                          const Matrix& g) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t ba = std::size_t{1} << qubit_shift(n, a);
  const std::size_t bb = std::size_t{1} << qubit_shift(n, b);
  std::array<cplx, 4> x{};
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & ba) || (r & bb)) continue;
    const std::array<std::size_t, 4> idx{r, r | bb, r | ba, r | ba | bb};
    for (std::size_t c = 0; c < cols; ++c) {
      for (int k = 0; k < 4; ++k) x[k] = v[idx[k] * cols + c];
      for (int i = 0; i < 4; ++i) {
        cplx s = 0;
        for (int k = 0; k < 4; ++k) s += g(i, k) * x[k];
        v[idx[i] * cols + c] = s;
      }
    }
  }
}

/// Global-phase-invariant equality: | |tr(U^dag V)| - dim | < tol * dim.
inline bool unitary_equiv(const Matrix& u, const Matrix& v, double tol = 1e-9) {
  if (u.dim() != v.dim()) throw std::invalid_argument("unitary_equiv: dimension mismatch");
  cplx t = 0;
  const std::size_t d = u.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) t += std::conj(u(k, i)) * v(k, i);
  return std::abs(std::abs(t) - static_cast<double>(d)) < tol * static_cast<double>(d);
}

}  // namespace fswap
