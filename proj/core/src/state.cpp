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

#include "esd/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "esd/errors.hpp"

namespace esd {
namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <typename Matrix>
void require_finite(const Matrix& m) {
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k)
      if (!finite(m(j, k))) {
        std::ostringstream msg;
        msg << "entry (" << j + 1 << "," << k + 1 << ") is not finite";
        throw Error(ErrorKind::NonFinite, msg.str());
      }
}

// (m + m^dagger) / 2 computed entry by entry so that the result is
// Hermitian bit for bit.
Matrix4 symmetrize(const Matrix4& m) {
  Matrix4 out;
  for (int j = 0; j < 4; ++j) {
    out(j, j) = m(j, j).real();
    for (int k = j + 1; k < 4; ++k) {
      const Complex v = 0.5 * (m(j, k) + std::conj(m(k, j)));
      out(j, k) = v;
      out(k, j) = std::conj(v);
    }
  }
  return out;
}

std::string describe(const char* what, double value, double bound) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " " << value << " (tolerance " << bound << ")";
  return msg.str();
}

constexpr std::array<std::pair<int, int>, 8> kOffXPattern{{
    {0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}};

}  // namespace

void Tolerances::validate() const {
  const std::array<std::pair<const char*, double>, 4> fields{
      {{"trace", trace}, {"psd", psd}, {"ent", ent}, {"death", death}}};
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0 && value <= 1e-2))
      throw Error(ErrorKind::InvalidTolerance,
                  describe(name, value, 1e-2), value);
  }
}

DensityMatrix make_density(const Matrix4& entries, const Tolerances& tol) {
  require_finite(entries);

  const double asym = hermitian_asymmetry(entries);
  if (!(asym < tol.psd))
    throw Error(ErrorKind::NotHermitian, describe("asymmetry", asym, tol.psd), asym);
  const Matrix4 m = symmetrize(entries);

  const double trace = m.trace().real();
  if (!(std::abs(trace - 1.0) <= tol.trace))
    throw Error(ErrorKind::TraceNotOne, describe("trace", trace, tol.trace), trace);

  const double min_eig = eigenvalues_hermitian(m)[0];
  if (min_eig < -tol.psd)
    throw Error(ErrorKind::NotPositive,
                describe("minimum eigenvalue", min_eig, tol.psd), min_eig);
  return DensityMatrix::assume_valid(m);
}

XState make_x(double a, double b, double c, double d, Complex w, Complex z,
              const Tolerances& tol) {
  for (double p : {a, b, c, d})
    if (!std::isfinite(p)) throw Error(ErrorKind::NonFinite, "population is not finite");
  if (!finite(w) || !finite(z)) throw Error(ErrorKind::NonFinite, "coherence is not finite");

  const double lowest = std::min({a, b, c, d});
  if (lowest < -tol.psd)
    throw Error(ErrorKind::NegativePopulation,
                describe("population", lowest, tol.psd), lowest);

  const double trace = a + b + c + d;
  if (!(std::abs(trace - 1.0) <= tol.trace))
    throw Error(ErrorKind::TraceNotOne, describe("trace", trace, tol.trace), trace);

  const double w_excess = std::norm(w) - a * d;
  if (w_excess > tol.psd)
    throw Error(ErrorKind::NotPositive,
                describe("|w|^2 - ad =", w_excess, tol.psd), w_excess);
  const double z_excess = std::norm(z) - b * c;
  if (z_excess > tol.psd)
    throw Error(ErrorKind::NotPositive,
                describe("|z|^2 - bc =", z_excess, tol.psd), z_excess);

  return XState::assume_valid(a, b, c, d, w, z);
}

DensityMatrix embed_x(const XState& x) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = x.a();
  m(1, 1) = x.b();
  m(2, 2) = x.c();
  m(3, 3) = x.d();
  m(0, 3) = x.w();
  m(3, 0) = std::conj(x.w());
  m(1, 2) = x.z();
  m(2, 1) = std::conj(x.z());
  return DensityMatrix::assume_valid(m);
}

double off_x_magnitude(const Matrix4& m) {
  double worst = 0.0;
  for (const auto& [j, k] : kOffXPattern) worst = std::max(worst, std::abs(m(j, k)));
  return worst;
}

XState project_x(const DensityMatrix& rho, const Tolerances& tol) {
  int worst_j = 0, worst_k = 0;
  double worst = 0.0;
  for (const auto& [j, k] : kOffXPattern) {
    const double mag = std::abs(rho(j, k));
    if (mag > worst) {
      worst = mag;
      worst_j = j;
      worst_k = k;
    }
  }
  if (!(worst < tol.psd)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entry (" << worst_j + 1 << "," << worst_k + 1 << ") has magnitude "
        << worst;
    throw Error(ErrorKind::NotXForm, msg.str(), worst);
  }
  return XState::assume_valid(rho(0, 0).real(), rho(1, 1).real(),
                              rho(2, 2).real(), rho(3, 3).real(), rho(0, 3),
                              rho(1, 2));
}

QubitState reduce(const DensityMatrix& rho, Party party) {
  Matrix2 r;
  if (party == Party::A) {
    r(0, 0) = rho(0, 0) + rho(1, 1);
    r(1, 1) = rho(2, 2) + rho(3, 3);
    r(0, 1) = rho(0, 2) + rho(1, 3);
  } else {
    r(0, 0) = rho(0, 0) + rho(2, 2);
    r(1, 1) = rho(1, 1) + rho(3, 3);
    r(0, 1) = rho(0, 1) + rho(2, 3);
  }
  r(1, 0) = std::conj(r(0, 1));
  return QubitState::assume_valid(r);
}

LocalCoherences local_coherences(const DensityMatrix& rho) {
  return {rho(0, 2) + rho(1, 3), rho(0, 1) + rho(2, 3)};
}

DensityMatrix maximally_mixed() {
  return DensityMatrix::assume_valid(Matrix4::Identity() * 0.25);
}

XState bell(Bell kind) {
  switch (kind) {
    case Bell::PhiPlus: return XState::assume_valid(0.5, 0, 0, 0.5, 0.5, 0);
    case Bell::PhiMinus: return XState::assume_valid(0.5, 0, 0, 0.5, -0.5, 0);
    case Bell::PsiPlus: return XState::assume_valid(0, 0.5, 0.5, 0, 0, 0.5);
    case Bell::PsiMinus: return XState::assume_valid(0, 0.5, 0.5, 0, 0, -0.5);
  }
  throw Error(ErrorKind::OutOfRange, "unknown Bell state");
}

XState werner(double b, const Tolerances& tol) {
  if (!(b >= 1.0 / 6.0 && b <= 0.5))
    throw Error(ErrorKind::OutOfRange, describe("werner parameter b =", b, 0.0), b);
  const double a = (1.0 - 2.0 * b) / 2.0;
  return make_x(a, b, b, a, 0.0, (1.0 - 4.0 * b) / 2.0, tol);
}

XState bell_mixture(const std::array<double, 4>& p, const Tolerances& tol) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0)
      throw Error(ErrorKind::BadDistribution, describe("weight", v, 0.0), v);
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= tol.trace))
    throw Error(ErrorKind::BadDistribution, describe("weights sum to", sum, tol.trace), sum);
  const double ad = (p[0] + p[1]) / 2.0;
  const double bc = (p[2] + p[3]) / 2.0;
  return make_x(ad, bc, bc, ad, (p[0] - p[1]) / 2.0, (p[2] - p[3]) / 2.0, tol);
}

DensityMatrix random_density(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Matrix4 g;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(j, k) = Complex(re, im);
    }
  const Matrix4 gg = g * g.adjoint();
  return make_density(symmetrize(gg / gg.trace().real()));
}

XState random_x(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::array<double, 4> pop;
  for (double& p : pop) p = expo(gen);
  const double total = pop[0] + pop[1] + pop[2] + pop[3];
  for (double& p : pop) p /= total;

  auto disc = [&](double radius) {
    const double r = radius * std::sqrt(unit(gen));
    const double phi = 2.0 * M_PI * unit(gen);
    return std::polar(r, phi);
  };
  const Complex w = disc(std::sqrt(pop[0] * pop[3]));
  const Complex z = disc(std::sqrt(pop[1] * pop[2]));
  return make_x(pop[0], pop[1], pop[2], pop[3], w, z);
}

HermitianObservable HermitianObservable::make(const Matrix4& m, double hermitian_tol) {
  require_finite(m);
  const double asym = hermitian_asymmetry(m);
  if (!(asym < hermitian_tol))
    throw Error(ErrorKind::NotHermitian, describe("asymmetry", asym, hermitian_tol), asym);
  return HermitianObservable(symmetrize(m));
}

Matrix2 pauli(Axis axis) {
  const Complex i(0.0, 1.0);
  Matrix2 s;
  switch (axis) {
    case Axis::X: s << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::Y: s << 0.0, -i, i, 0.0; break;
    case Axis::Z: s << 1.0, 0.0, 0.0, -1.0; break;
  }
  return s;
}

Matrix2 spin(Axis axis) { return 0.5 * pauli(axis); }

HermitianObservable spin_product(Axis on_a, Axis on_b) {
  return HermitianObservable::make(kron(spin(on_a), spin(on_b)));
}

HermitianObservable bell_projector(Bell kind) {
  return HermitianObservable::make(embed_x(bell(kind)).matrix());
}

HermitianObservable total_spin_z() {
  const Matrix2 id = Matrix2::Identity();
  return HermitianObservable::make(kron(spin(Axis::Z), id) + kron(id, spin(Axis::Z)));
}

double expectation(const DensityMatrix& rho, const HermitianObservable& obs) {
  return (rho.matrix() * obs.matrix()).trace().real();
}

}  // namespace esd
