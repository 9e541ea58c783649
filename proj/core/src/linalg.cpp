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

#include "esd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "esd/errors.hpp"

namespace esd {
namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffTolerance = 1e-14;

double off_diagonal_norm(const Matrix4& a) {
  double sum = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      if (j != k) sum += std::norm(a(j, k));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with a unitary rotation acting on rows/columns p and q.
// Writing a(p,q) = r e^{i phi}, the plane is the real symmetric problem
// [[app, r], [r, aqq]] conjugated by diag(1, e^{-i phi}).
void rotate(Matrix4& a, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns of the rotation: g(.,p) = (c, -s e^{-i phi}), g(.,q) = (s, c e^{-i phi}).
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);
  for (int k = 0; k < 4; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    const Complex new_kp = akp * c + akq * gqp;
    const Complex new_kq = akp * s + akq * gqq;
    a(k, p) = new_kp;
    a(p, k) = std::conj(new_kp);
    a(k, q) = new_kq;
    a(q, k) = std::conj(new_kq);
  }
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

double hermitian_asymmetry(const Matrix4& m) {
  double worst = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = j; k < 4; ++k)
      worst = std::max(worst, std::abs(m(j, k) - std::conj(m(k, j))));
  return worst;
}

std::array<double, 4> eigenvalues_hermitian(const Matrix4& m,
                                            double hermitian_tol) {
  const double asym = hermitian_asymmetry(m);
  if (!(asym <= hermitian_tol)) {
    std::ostringstream msg;
    msg << "matrix asymmetry " << asym << " exceeds " << hermitian_tol;
    throw Error(ErrorKind::NotHermitian, msg.str(), asym);
  }

  Matrix4 a = 0.5 * (m + m.adjoint());
  for (int j = 0; j < 4; ++j) a(j, j) = a(j, j).real();

  const double scale = a.norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || off <= kOffTolerance * scale) break;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 4; ++q) rotate(a, p, q);
  }

  std::array<double, 4> eig{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                            a(3, 3).real()};
  std::sort(eig.begin(), eig.end());
  return eig;
}

Matrix4 kron(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = lhs(i, j) * rhs(k, l);
  return out;
}

}  // namespace esd
