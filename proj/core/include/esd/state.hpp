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
#include <cstdint>

#include "esd/linalg.hpp"

// Two-qubit states in the product basis
//   |1> = |up,up>, |2> = |up,down>, |3> = |down,up>, |4> = |down,down>,
// stored 0-based, so index = 2 * (qubit A) + (qubit B) with up = 0.

namespace esd {

struct Tolerances {
  double trace = 1e-9;
  double psd = 1e-9;
  double ent = 1e-10;
  double death = 1e-10;

  /// Each tolerance must lie in (0, 1e-2]; throws Error(InvalidTolerance).
  void validate() const;
};

/// A validated 4x4 density matrix: exactly Hermitian, unit trace and positive
/// semidefinite within the tolerances it was built with.
class DensityMatrix {
 public:
  /// Skips validation. For values that are valid by construction, such as
  /// the embedding of an XState.
  static DensityMatrix assume_valid(const Matrix4& m) { return DensityMatrix(m); }

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  friend bool operator==(const DensityMatrix& lhs, const DensityMatrix& rhs) {
    return lhs.m_ == rhs.m_;
  }

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Symmetrizes asymmetries below tol.psd, then checks trace and positivity.
/// Throws Error with kind NonFinite, NotHermitian, TraceNotOne or NotPositive.
DensityMatrix make_density(const Matrix4& entries, const Tolerances& tol = {});

/// The X family: populations a, b, c, d on the diagonal, coherence w at
/// (1,4) and z at (2,3) (1-based).
class XState {
 public:
  static XState assume_valid(double a, double b, double c, double d, Complex w,
                             Complex z) {
    return XState(a, b, c, d, w, z);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  Complex w() const { return w_; }
  Complex z() const { return z_; }
  std::array<double, 4> populations() const { return {a_, b_, c_, d_}; }

  friend bool operator==(const XState&, const XState&) = default;

 private:
  XState(double a, double b, double c, double d, Complex w, Complex z)
      : a_(a), b_(b), c_(c), d_(d), w_(w), z_(z) {}
  double a_, b_, c_, d_;
  Complex w_, z_;
};

XState make_x(double a, double b, double c, double d, Complex w, Complex z,
              const Tolerances& tol = {});

DensityMatrix embed_x(const XState& x);

/// Largest magnitude among the entries outside the X pattern.
double off_x_magnitude(const Matrix4& m);

/// Throws Error(NotXForm) naming the largest off-pattern entry when it
/// reaches tol.psd.
XState project_x(const DensityMatrix& rho, const Tolerances& tol = {});

class QubitState {
 public:
  static QubitState assume_valid(const Matrix2& m) { return QubitState(m); }
  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

 private:
  explicit QubitState(const Matrix2& m) : m_(m) {}
  Matrix2 m_;
};

enum class Party { A, B };

QubitState reduce(const DensityMatrix& rho, Party party);

struct LocalCoherences {
  Complex a;  // rho13 + rho24
  Complex b;  // rho12 + rho34
};

LocalCoherences local_coherences(const DensityMatrix& rho);

DensityMatrix maximally_mixed();

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

XState bell(Bell kind);

/// a = d = (1 - 2b)/2, b = c, w = 0, z = (1 - 4b)/2. Positive only for
/// b in [1/6, 1/2]; throws Error(OutOfRange) elsewhere.
XState werner(double b, const Tolerances& tol = {});

/// Weights in the order Phi+, Phi-, Psi+, Psi-.
XState bell_mixture(const std::array<double, 4>& p, const Tolerances& tol = {});

/// Hilbert-Schmidt distributed state G G^dagger / tr(G G^dagger) with G a
/// 4x4 complex Ginibre matrix drawn from mt19937_64(seed).
DensityMatrix random_density(std::uint64_t seed);

/// Random X state: populations uniform on the simplex, each coherence
/// uniform on its positivity disc (|w| <= sqrt(ad), |z| <= sqrt(bc)).
XState random_x(std::uint64_t seed);

/// A 4x4 observable, exactly Hermitian.
class HermitianObservable {
 public:
  /// Symmetrizes asymmetries below hermitian_tol, else throws NotHermitian.
  static HermitianObservable make(const Matrix4& m, double hermitian_tol = 1e-9);
  const Matrix4& matrix() const { return m_; }

 private:
  explicit HermitianObservable(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

enum class Axis { X, Y, Z };

Matrix2 pauli(Axis axis);
/// S_k = sigma_k / 2 (hbar = 1).
Matrix2 spin(Axis axis);

HermitianObservable spin_product(Axis on_a, Axis on_b);
HermitianObservable bell_projector(Bell kind);
/// S_z on both qubits, S_z (x) 1 + 1 (x) S_z.
HermitianObservable total_spin_z();

/// Re tr(rho * obs); the imaginary part is roundoff for Hermitian inputs.
double expectation(const DensityMatrix& rho, const HermitianObservable& obs);

}  // namespace esd
