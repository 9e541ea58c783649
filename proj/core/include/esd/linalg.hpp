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

#include <array>
#include <complex>

#include <Eigen/Core>

namespace esd {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

/// Largest entrywise |M(j,k) - conj(M(k,j))|.
double hermitian_asymmetry(const Matrix4& m);

/// Ascending eigenvalues of a 4x4 Hermitian matrix by cyclic complex Jacobi
/// rotations. Sweeps stop once the off-diagonal Frobenius norm drops below
/// 1e-14 relative to the matrix norm, or after 50 sweeps.
///
/// Throws Error(NotHermitian) when the asymmetry exceeds `hermitian_tol`.
std::array<double, 4> eigenvalues_hermitian(const Matrix4& m,
                                            double hermitian_tol = 1e-9);

Matrix4 kron(const Matrix2& lhs, const Matrix2& rhs);

}  // namespace esd
