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
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "esd/channels.hpp"

namespace esd {

struct Diagnostics {
  double negativity = 0.0;
  double min_pt_eig = 0.0;
  double min_eig = 0.0;
  double trace = 1.0;
  std::optional<std::array<double, 4>> populations;  // X trajectories only
  double abs_w = 0.0;
  double abs_z = 0.0;
};

Diagnostics diagnose(const DensityMatrix& rho, bool x_form, const Tolerances& tol = {});

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<Diagnostics> diagnostics;
  bool x_form = false;

  std::size_t size() const { return times.size(); }
};

double default_dt(const ChannelSpec& ch);
double default_horizon(const ChannelSpec& ch);
/// Keeps about 2000 samples for a run of horizon / dt steps.
int default_sample_every(double horizon, double dt);

/// Samples every `sample_every` steps of size dt, plus the final time
/// `horizon`. X initial states under catalog channels use the closed form;
/// everything else is integrated with RK4 and re-validated at each sample.
Trajectory simulate(const DensityMatrix& rho0, const ChannelSpec& ch, double horizon,
                    double dt, int sample_every, const Tolerances& tol = {});

enum class DeathVerdict { FiniteDeath, AsymptoticDeath, PersistentEntanglement, NeverEntangled };

std::string_view to_string(DeathVerdict verdict);
DeathVerdict death_verdict_from_string(std::string_view text);

struct DeathReport {
  DeathVerdict verdict = DeathVerdict::NeverEntangled;
  std::optional<double> t_star;  // FiniteDeath only
  double horizon = 0.0;
  int crossings = 0;
  double epsilon_death = 0.0;
};

/// Scans negativity on a uniform grid (dt = 0 selects default_dt) up to
/// `horizon` and reports how entanglement ends.
///
/// A state is alive while negativity > tol.death. The last alive-to-dead
/// transition is bisected to 1e-9 / rate. It counts as a finite-time death
/// only when the minimum partial-transpose eigenvalue reaches zero
/// transversally; an exponential fade under the threshold is reported as
/// AsymptoticDeath. Entanglement alive at the horizon is classified by the
/// trend of negativity at 0, horizon / 2 and horizon. Throws
/// Error(Inconclusive) when that trend is not monotone.
DeathReport death_time(const XState& x0, const ChannelSpec& ch, double horizon,
                       const Tolerances& tol = {}, double dt = 0.0);

/// Number of entangled/separable label changes between consecutive samples,
/// a sample counting as entangled when min_pt_eig < -tol.death.
int crossing_count(const Trajectory& traj, const Tolerances& tol = {});

/// Same count, with each bracket re-evaluated by bisection through
/// `min_pt_at(t)`. Brackets whose endpoints the evaluator does not confirm
/// are dropped as grid noise. Returns the refined crossing times.
std::vector<double> refine_crossings(const Trajectory& traj,
                                     const std::function<double(double)>& min_pt_at,
                                     double resolution, const Tolerances& tol = {});

/// Propagates with a doubling horizon until the entrywise change over one
/// doubling is below 1e-10, then checks membership in asymptotic_set(ch)
/// within 1e-8. Throws Error(NoConvergence) after 40 doublings or when the
/// limit is not a member.
DensityMatrix estimate_asymptote(const DensityMatrix& rho0, const ChannelSpec& ch,
                                 const Tolerances& tol = {});

}  // namespace esd
