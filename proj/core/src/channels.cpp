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

#include "esd/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "esd/entanglement.hpp"
#include "esd/errors.hpp"

namespace esd {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_rate(const char* name, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream msg;
    msg << name << " = " << value << " must be finite and >= 0";
    throw Error(ErrorKind::InvalidChannel, msg.str(), value);
  }
}

Matrix2 lowering() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;  // |down><up|
  return m;
}

Matrix4 on_a(const Matrix2& op) { return kron(op, Matrix2::Identity()); }
Matrix4 on_b(const Matrix2& op) { return kron(Matrix2::Identity(), op); }

void push(std::vector<Jump>& jumps, const Matrix4& op, double rate) {
  if (rate > 0.0) jumps.push_back({op, rate});
}

// Column-stochastic population map of one damped qubit over time t, on
// (excited, ground).
std::array<std::array<double, 2>, 2> qubit_population_map(double gamma, double nbar,
                                                          double t) {
  const double relax = gamma * (2.0 * nbar + 1.0);
  const double excited_eq = nbar / (2.0 * nbar + 1.0);
  const double keep = std::exp(-relax * t);
  const double lose = -std::expm1(-relax * t);
  return {{{excited_eq + (1.0 - excited_eq) * keep, excited_eq * lose},
           {(1.0 - excited_eq) * lose, (1.0 - excited_eq) + excited_eq * keep}}};
}

}  // namespace

ChannelSpec::ChannelSpec(IndependentDecay v) : v_(v) { validate(); }
ChannelSpec::ChannelSpec(IndependentDephasing v) : v_(v) { validate(); }
ChannelSpec::ChannelSpec(CollectiveDephasing v) : v_(v) { validate(); }
ChannelSpec::ChannelSpec(CustomChannel v) : v_(std::move(v)) { validate(); }

void ChannelSpec::validate() const {
  std::visit(Overloaded{
                 [](const IndependentDecay& c) {
                   require_rate("gamma_a", c.gamma_a);
                   require_rate("gamma_b", c.gamma_b);
                   require_rate("nbar", c.nbar);
                   if (c.gamma_a == 0.0 && c.gamma_b == 0.0)
                     throw Error(ErrorKind::InvalidChannel, "decay needs a positive rate");
                 },
                 [](const IndependentDephasing& c) {
                   require_rate("kappa_a", c.kappa_a);
                   require_rate("kappa_b", c.kappa_b);
                   if (c.kappa_a == 0.0 && c.kappa_b == 0.0)
                     throw Error(ErrorKind::InvalidChannel, "dephasing needs a positive rate");
                 },
                 [](const CollectiveDephasing& c) {
                   require_rate("kappa", c.kappa);
                   if (c.kappa == 0.0)
                     throw Error(ErrorKind::InvalidChannel, "collective dephasing needs kappa > 0");
                 },
                 [](const CustomChannel& c) {
                   bool any = false;
                   for (const Jump& j : c.jumps) {
                     require_rate("jump rate", j.rate);
                     for (int r = 0; r < 4; ++r)
                       for (int k = 0; k < 4; ++k)
                         if (!std::isfinite(j.op(r, k).real()) || !std::isfinite(j.op(r, k).imag()))
                           throw Error(ErrorKind::InvalidChannel, "jump operator is not finite");
                     any = any || j.rate > 0.0;
                   }
                   if (!any) throw Error(ErrorKind::InvalidChannel, "custom channel needs a positive rate");
                 },
             },
             v_);
}

std::vector<Jump> jump_operators(const ChannelSpec& ch) {
  std::vector<Jump> jumps;
  std::visit(Overloaded{
                 [&](const IndependentDecay& c) {
                   const Matrix2 down = lowering();
                   const Matrix2 up = down.adjoint();
                   push(jumps, on_a(down), c.gamma_a * (c.nbar + 1.0));
                   push(jumps, on_a(up), c.gamma_a * c.nbar);
                   push(jumps, on_b(down), c.gamma_b * (c.nbar + 1.0));
                   push(jumps, on_b(up), c.gamma_b * c.nbar);
                 },
                 [&](const IndependentDephasing& c) {
                   push(jumps, on_a(pauli(Axis::Z)), c.kappa_a / 2.0);
                   push(jumps, on_b(pauli(Axis::Z)), c.kappa_b / 2.0);
                 },
                 [&](const CollectiveDephasing& c) {
                   push(jumps, 0.5 * (on_a(pauli(Axis::Z)) + on_b(pauli(Axis::Z))), c.kappa);
                 },
                 [&](const CustomChannel& c) {
                   for (const Jump& j : c.jumps) push(jumps, j.op, j.rate);
                 },
             },
             ch.variant());
  return jumps;
}

double characteristic_rate(const ChannelSpec& ch) {
  return std::visit(
      Overloaded{
          [](const IndependentDecay& c) {
            return std::max(c.gamma_a, c.gamma_b) * (2.0 * c.nbar + 1.0);
          },
          [](const IndependentDephasing& c) { return std::max(c.kappa_a, c.kappa_b); },
          [](const CollectiveDephasing& c) { return c.kappa; },
          [](const CustomChannel& c) {
            double rate = 0.0;
            for (const Jump& j : c.jumps) rate = std::max(rate, j.rate * j.op.squaredNorm());
            return rate;
          },
      },
      ch.variant());
}

Lindbladian::Lindbladian(const ChannelSpec& ch) {
  for (const Jump& j : jump_operators(ch)) {
    const Matrix4 dag = j.op.adjoint();
    terms_.push_back({j.op, dag, 0.5 * j.rate * (dag * j.op), j.rate});
  }
}

Matrix4 Lindbladian::apply(const Matrix4& rho) const {
  Matrix4 out = Matrix4::Zero();
  for (const Term& t : terms_) {
    out.noalias() += t.rate * (t.op * rho * t.op_dag);
    out.noalias() -= t.half_number * rho;
    out.noalias() -= rho * t.half_number;
  }
  return out;
}

Matrix4 Lindbladian::evolve(Matrix4 rho, double t, double dt) const {
  auto step = [this](Matrix4& r, double h) {
    const Matrix4 k1 = apply(r);
    const Matrix4 k2 = apply(r + (0.5 * h) * k1);
    const Matrix4 k3 = apply(r + (0.5 * h) * k2);
    const Matrix4 k4 = apply(r + h * k3);
    r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  if (t <= 0.0) return rho;
  const auto full = static_cast<long long>(std::floor(t / dt));
  for (long long i = 0; i < full; ++i) step(rho, dt);
  const double rest = t - static_cast<double>(full) * dt;
  if (rest > 1e-15 * t) step(rho, rest);
  return rho;
}

Matrix4 generator(const ChannelSpec& ch, const DensityMatrix& rho) {
  return Lindbladian(ch).apply(rho.matrix());
}

DensityMatrix propagate_numeric(const DensityMatrix& rho0, const ChannelSpec& ch,
                                double t, double dt, const Tolerances& tol) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw Error(ErrorKind::OutOfRange, "propagation time must be >= 0", t);
  if (t == 0.0) return rho0;
  if (!(dt > 0.0 && dt <= t))
    throw Error(ErrorKind::OutOfRange, "step must satisfy 0 < dt <= t", dt);

  return settle_integrated(Lindbladian(ch).evolve(rho0.matrix(), t, dt), tol);
}

DensityMatrix settle_integrated(const Matrix4& integrated, const Tolerances& tol) {
  const double asym = hermitian_asymmetry(integrated);
  if (!(asym < tol.psd))
    throw Error(ErrorKind::StepTooLarge, "integrated state lost Hermiticity", asym);
  Matrix4 m = 0.5 * (integrated + integrated.adjoint());
  for (int j = 0; j < 4; ++j) m(j, j) = m(j, j).real();

  const double trace = m.trace().real();
  if (!(std::abs(trace - 1.0) < tol.trace))
    throw Error(ErrorKind::StepTooLarge, "trace drifted to " + std::to_string(trace), trace);
  m /= trace;

  const double min_eig = eigenvalues_hermitian(m)[0];
  if (min_eig < -tol.psd)
    throw Error(ErrorKind::StepTooLarge,
                "integrated state has eigenvalue " + std::to_string(min_eig), min_eig);
  return DensityMatrix::assume_valid(m);
}

XState propagate_x_closed(const XState& x, const ChannelSpec& ch, double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw Error(ErrorKind::OutOfRange, "propagation time must be >= 0", t);
  return std::visit(
      Overloaded{
          [&](const IndependentDecay& c) {
            const auto ma = qubit_population_map(c.gamma_a, c.nbar, t);
            const auto mb = qubit_population_map(c.gamma_b, c.nbar, t);
            const std::array<double, 4> old = x.populations();
            std::array<double, 4> pop{};
            for (int ia = 0; ia < 2; ++ia)
              for (int ib = 0; ib < 2; ++ib)
                for (int ja = 0; ja < 2; ++ja)
                  for (int jb = 0; jb < 2; ++jb)
                    pop[2 * ia + ib] += ma[ia][ja] * mb[ib][jb] * old[2 * ja + jb];
            const double relax = (c.gamma_a + c.gamma_b) * (2.0 * c.nbar + 1.0);
            const double coherence = std::exp(-0.5 * relax * t);
            return XState::assume_valid(pop[0], pop[1], pop[2], pop[3], x.w() * coherence,
                                        x.z() * coherence);
          },
          [&](const IndependentDephasing& c) {
            const double coherence = std::exp(-(c.kappa_a + c.kappa_b) * t);
            return XState::assume_valid(x.a(), x.b(), x.c(), x.d(), x.w() * coherence,
                                        x.z() * coherence);
          },
          [&](const CollectiveDephasing& c) {
            return XState::assume_valid(x.a(), x.b(), x.c(), x.d(),
                                        x.w() * std::exp(-2.0 * c.kappa * t), x.z());
          },
          [&](const CustomChannel&) -> XState {
            throw Error(ErrorKind::UnsupportedChannel,
                        "no closed form for custom channels; use propagate_numeric");
          },
      },
      ch.variant());
}

AsymptoticSet asymptotic_set(const ChannelSpec& ch) {
  return std::visit(
      Overloaded{
          [](const IndependentDecay& c) -> AsymptoticSet {
            if (c.gamma_a == 0.0 || c.gamma_b == 0.0)
              throw Error(ErrorKind::UnsupportedChannel,
                          "decay with an undamped qubit has no unique asymptote");
            const double e = c.nbar / (2.0 * c.nbar + 1.0);
            const double g = 1.0 - e;
            return SinglePoint{embed_x(XState::assume_valid(e * e, e * g, g * e, g * g, 0, 0))};
          },
          [](const IndependentDephasing& c) -> AsymptoticSet {
            if (c.kappa_a == 0.0 || c.kappa_b == 0.0)
              throw Error(ErrorKind::UnsupportedChannel,
                          "dephasing with an undamped qubit keeps local coherence");
            return XFamily{true, true, std::nullopt};
          },
          [](const CollectiveDephasing&) -> AsymptoticSet {
            return XFamily{true, false, std::nullopt};
          },
          [](const CustomChannel&) -> AsymptoticSet {
            throw Error(ErrorKind::UnsupportedChannel,
                        "supply the asymptotic set of a custom channel explicitly");
          },
      },
      ch.variant());
}

bool contains(const AsymptoticSet& set, const DensityMatrix& rho, double tol) {
  auto close = [tol](const DensityMatrix& lhs, const DensityMatrix& rhs) {
    return (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() <= tol;
  };
  return std::visit(
      Overloaded{
          [&](const SinglePoint& s) { return close(s.state, rho); },
          [&](const XFamily& f) {
            if (off_x_magnitude(rho.matrix()) > tol) return false;
            if (f.w_zero && std::abs(rho(0, 3)) > tol) return false;
            if (f.z_zero && std::abs(rho(1, 2)) > tol) return false;
            if (f.populations) {
              for (int k = 0; k < 4; ++k)
                if (std::abs(rho(k, k).real() - (*f.populations)[k]) > tol) return false;
            }
            return true;
          },
          [&](const ExplicitSamples& e) {
            return std::any_of(e.states.begin(), e.states.end(),
                               [&](const DensityMatrix& s) { return close(s, rho); });
          },
      },
      set);
}

}  // namespace esd
