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
#include <optional>
#include <variant>
#include <vector>

#include "esd/state.hpp"

namespace esd {

/// Independent thermal amplitude damping: sigma_- on each qubit at rate
/// gamma_i (nbar + 1) and sigma_+ at rate gamma_i nbar. nbar = 0 is zero
/// temperature.
struct IndependentDecay {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double nbar = 0.0;
};

/// sigma_z on each qubit at rate kappa_i / 2; a single-qubit coherence decays
/// as exp(-kappa_i t), so w and z decay as exp(-(kappa_a + kappa_b) t).
struct IndependentDephasing {
  double kappa_a = 0.0;
  double kappa_b = 0.0;
};

/// (sigma_z (x) 1 + 1 (x) sigma_z) / 2 at rate kappa. |2>, |3> span the
/// decoherence-free subspace; w decays as exp(-2 kappa t), z is frozen.
struct CollectiveDephasing {
  double kappa = 0.0;
};

struct Jump {
  Matrix4 op;
  double rate = 0.0;
};

struct CustomChannel {
  std::vector<Jump> jumps;
};

/// A reservoir. Construction validates: every rate finite and >= 0, at least
/// one positive, nbar >= 0. Throws Error(InvalidChannel).
class ChannelSpec {
 public:
  using Variant =
      std::variant<IndependentDecay, IndependentDephasing, CollectiveDephasing, CustomChannel>;

  ChannelSpec(IndependentDecay v);
  ChannelSpec(IndependentDephasing v);
  ChannelSpec(CollectiveDephasing v);
  ChannelSpec(CustomChannel v);

  const Variant& variant() const { return v_; }
  bool is_catalog() const { return !std::holds_alternative<CustomChannel>(v_); }

 private:
  void validate() const;
  Variant v_;
};

std::vector<Jump> jump_operators(const ChannelSpec& ch);

/// Fastest relaxation rate the channel imposes; the unit in which default
/// steps (1e-3 / rate) and horizons (50 / rate) are expressed.
double characteristic_rate(const ChannelSpec& ch);

/// sum_k rate_k (L rho L^dag - {L^dag L, rho} / 2); no Hamiltonian part.
Matrix4 generator(const ChannelSpec& ch, const DensityMatrix& rho);

/// Precomputed jump operators for repeated generator evaluations.
class Lindbladian {
 public:
  explicit Lindbladian(const ChannelSpec& ch);

  Matrix4 apply(const Matrix4& rho) const;
  /// Fixed-step classical RK4 from 0 to t, with a final partial step when dt
  /// does not divide t. No validation of the result.
  Matrix4 evolve(Matrix4 rho, double t, double dt) const;

 private:
  struct Term {
    Matrix4 op;
    Matrix4 op_dag;
    Matrix4 half_number;  // rate * L^dag L / 2
    double rate;
  };
  std::vector<Term> terms_;
};

/// Hermitizes an integrated matrix and renormalizes its trace when the drift
/// is below tol.trace. Throws Error(StepTooLarge) otherwise, or when an
/// eigenvalue falls below -tol.psd.
DensityMatrix settle_integrated(const Matrix4& m, const Tolerances& tol = {});

/// RK4 integration of the generator, then re-validation: Hermitized, trace
/// renormalized when its drift is below tol.trace. Throws Error(StepTooLarge)
/// when the result is not a state within tolerance, Error(OutOfRange) for
/// t < 0 or dt outside (0, t].
DensityMatrix propagate_numeric(const DensityMatrix& rho0, const ChannelSpec& ch,
                                double t, double dt, const Tolerances& tol = {});

/// Exact X-family solution for catalog channels; throws
/// Error(UnsupportedChannel) for custom channels.
XState propagate_x_closed(const XState& x, const ChannelSpec& ch, double t);

struct SinglePoint {
  DensityMatrix state;
};

/// X states constrained by w = 0 and/or z = 0 and optionally fixed
/// populations; free coherences range over their positivity discs.
struct XFamily {
  bool w_zero = false;
  bool z_zero = false;
  std::optional<std::array<double, 4>> populations;
};

struct ExplicitSamples {
  std::vector<DensityMatrix> states;
};

using AsymptoticSet = std::variant<SinglePoint, XFamily, ExplicitSamples>;

/// Catalog channels only. Decay and dephasing need both qubit rates
/// positive; otherwise the frozen qubit keeps arbitrary local coherence and
/// the set is not representable (Error(UnsupportedChannel)).
AsymptoticSet asymptotic_set(const ChannelSpec& ch);

/// Membership within `tol` entrywise. For ExplicitSamples a state is a member
/// when it matches one of the listed samples.
bool contains(const AsymptoticSet& set, const DensityMatrix& rho, double tol);

}  // namespace esd
