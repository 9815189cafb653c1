// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QISING_TENSOR_HPP_
#define QISING_TENSOR_HPP_

// Fixed-size complex linear algebra for two-qubit games.
//
// Basis order for four-dimensional objects is |00>, |01>, |10>, |11>, where
// the left digit belongs to the first (row) player.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "qising/errors.hpp"

namespace qising {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

template <std::size_t N>
class StateVector {
 public:
  constexpr StateVector() = default;
  constexpr explicit StateVector(const std::array<Complex, N>& amps)
      : amps_(amps) {}

  static constexpr StateVector basis(std::size_t index) {
    StateVector v;
    v.amps_[index] = Complex{1.0, 0.0};
    return v;
  }

  constexpr Complex& operator[](std::size_t i) { return amps_[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return amps_[i]; }
  static constexpr std::size_t size() { return N; }

  double norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
  }

  // |amplitude|^2 per basis state.
  std::array<double, N> probabilities() const {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = std::norm(amps_[i]);
    return out;
  }

  bool all_finite() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Complex& a) {
      return std::isfinite(a.real()) && std::isfinite(a.imag());
    });
  }

 private:
  std::array<Complex, N> amps_{};
};

template <std::size_t N>
class Matrix {
 public:
  constexpr Matrix() = default;
  constexpr explicit Matrix(const std::array<std::array<Complex, N>, N>& rows)
      : m_(rows) {}

  static constexpr Matrix identity() {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i) out.m_[i][i] = Complex{1.0, 0.0};
    return out;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) {
    return m_[r][c];
  }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[r][c];
  }
  static constexpr std::size_t dim() { return N; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Complex acc{};
        for (std::size_t k = 0; k < N; ++k) acc += a.m_[i][k] * b.m_[k][j];
        out.m_[i][j] = acc;
      }
    return out;
  }

  friend Matrix operator*(Complex scale, const Matrix& a) {
    Matrix out = a;
    for (auto& row : out.m_)
      for (auto& e : row) e *= scale;
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.m_[i][j] -= b.m_[i][j];
    return out;
  }

  // Largest entrywise modulus.
  double max_abs() const {
    double best = 0.0;
    for (const auto& row : m_)
      for (const auto& e : row) best = std::max(best, std::abs(e));
    return best;
  }

 private:
  std::array<std::array<Complex, N>, N> m_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using StateVector4 = StateVector<4>;

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& m) {
  Matrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

// (A (x) B)_{(i,k),(j,l)} = A_ij * B_kl with the first factor as the high digit.
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Plain matrix-vector product. No renormalization.
template <std::size_t N>
StateVector<N> apply(const Matrix<N>& m, const StateVector<N>& v) {
  StateVector<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < N; ++k) acc += m(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

// apply() for operators that must be unitary; a norm drift beyond
// `drift_tol` means the operator was not unitary and is reported as a defect.
template <std::size_t N>
StateVector<N> apply_unitary(const Matrix<N>& m, const StateVector<N>& v,
                             double drift_tol = 1e-10) {
  StateVector<N> out = apply(m, v);
  if (std::abs(out.norm_squared() - v.norm_squared()) > drift_tol)
    throw ConsistencyError("apply_unitary: norm drift, operator is not unitary");
  return out;
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& m, double tol = kDefaultTolerance) {
  return (adjoint(m) * m - Matrix<N>::identity()).max_abs() <= tol;
}

template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b,
                  double tol = kDefaultTolerance) {
  return (a - b).max_abs() <= tol;
}

template <std::size_t N>
bool approx_equal(const StateVector<N>& a, const StateVector<N>& b,
                  double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < N; ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace qising

#endif  // QISING_TENSOR_HPP_
