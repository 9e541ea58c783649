// Copyright 2026 The esd Authors
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

// Reference computations used only by the tests. None of them call the
// library code they are checked against.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace esd::oracle {

using C = std::complex<double>;
using M4 = Eigen::Matrix<C, 4, 4>;
using M2 = Eigen::Matrix<C, 2, 2>;

/// Coefficients c0..c4 of det(lambda I - M) = sum c_k lambda^k, by
/// Faddeev-LeVerrier.
inline std::array<C, 5> characteristic_polynomial(const M4& m) {
  std::array<C, 5> c{};
  c[4] = 1.0;
  M4 mk = M4::Zero();
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + c[4 - k + 1] * M4::Identity();
    c[4 - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

/// Real parts of the polynomial roots by Durand-Kerner iteration, ascending.
inline std::array<double, 4> charpoly_eigenvalues(const M4& m) {
  const auto c = characteristic_polynomial(m);
  auto p = [&](C x) { return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]; };
  std::array<C, 4> roots{C(0.4, 0.9), C(0.4, 0.9) * C(0.4, 0.9),
                         C(0.4, 0.9) * C(0.4, 0.9) * C(0.4, 0.9),
                         C(0.4, 0.9) * C(0.4, 0.9) * C(0.4, 0.9) * C(0.4, 0.9)};
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (int i = 0; i < 4; ++i) {
      C denom = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const C step = p(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-16) break;
  }
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = roots[i].real();
  std::sort(out.begin(), out.end());
  return out;
}

/// Partial transpose on B written as a block operation: rho = sum_{ij} E_ij
/// (x) B_ij, result = sum_{ij} E_ij (x) B_ij^T.
inline M4 block_partial_transpose(const M4& rho) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = rho.block<2, 2>(2 * i, 2 * j).transpose();
  return out;
}

/// Smaller eigenvalue of [[p, v], [conj(v), q]].
inline double block_min_eigenvalue(double p, double q, C v) {
  return 0.5 * (p + q) - std::sqrt(0.25 * (p - q) * (p - q) + std::norm(v));
}

/// Haar-like unitary from a seeded Gaussian matrix by QR, phases fixed so the
/// R diagonal is positive.
inline M2 random_unitary(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  M2 g;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) g(j, k) = C(n(gen), n(gen));
  Eigen::HouseholderQR<M2> qr(g);
  M2 q = qr.householderQ();
  const M2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline M4 kron2(const M2& a, const M2& b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// Random Hermitian matrix with independent Gaussian entries.
inline M4 random_hermitian(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  M4 g;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) g(j, k) = C(n(gen), n(gen));
  return 0.5 * (g + g.adjoint());
}

}  // namespace esd::oracle
