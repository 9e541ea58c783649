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

#include "esd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "esd/entanglement.hpp"
#include "esd/errors.hpp"

namespace esd {
namespace {

constexpr int kDefaultSamples = 2000;
constexpr double kDeathResolution = 1e-9;      // in units of 1 / rate
constexpr double kTransversalProbe = 1e-3;     // in units of 1 / rate
constexpr double kTransversalRatio = 0.75;
constexpr double kAsymptoteChange = 1e-10;
constexpr double kAsymptoteMembership = 1e-8;
constexpr int kMaxDoublings = 40;

long long step_count(double horizon, double dt) {
  return std::max(1LL, static_cast<long long>(std::ceil(horizon / dt - 1e-9)));
}

double grid_time(long long k, long long steps, double dt, double horizon) {
  return k >= steps ? horizon : static_cast<double>(k) * dt;
}

}  // namespace

Diagnostics diagnose(const DensityMatrix& rho, bool x_form, const Tolerances& tol) {
  Diagnostics d;
  const auto pt = partial_transpose_spectrum(rho);
  d.min_pt_eig = pt[0];
  for (double lambda : pt)
    if (lambda < -tol.ent) d.negativity -= lambda;
  d.min_eig = eigenvalues_hermitian(rho.matrix())[0];
  d.trace = rho.matrix().trace().real();
  if (x_form)
    d.populations = std::array<double, 4>{rho(0, 0).real(), rho(1, 1).real(),
                                          rho(2, 2).real(), rho(3, 3).real()};
  d.abs_w = std::abs(rho(0, 3));
  d.abs_z = std::abs(rho(1, 2));
  return d;
}

double default_dt(const ChannelSpec& ch) { return 1e-3 / characteristic_rate(ch); }
double default_horizon(const ChannelSpec& ch) { return 50.0 / characteristic_rate(ch); }

int default_sample_every(double horizon, double dt) {
  const long long steps = step_count(horizon, dt);
  return static_cast<int>(std::max(1LL, steps / kDefaultSamples));
}

Trajectory simulate(const DensityMatrix& rho0, const ChannelSpec& ch, double horizon,
                    double dt, int sample_every, const Tolerances& tol) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw Error(ErrorKind::OutOfRange, "horizon must be > 0", horizon);
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorKind::OutOfRange, "dt must be > 0", dt);
  if (sample_every < 1)
    throw Error(ErrorKind::OutOfRange, "sample_every must be >= 1", sample_every);

  const bool x_form = ch.is_catalog() && off_x_magnitude(rho0.matrix()) < tol.psd;
  const long long steps = step_count(horizon, dt);

  Trajectory traj;
  traj.x_form = x_form;
  auto record = [&](double t, const DensityMatrix& rho) {
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.diagnostics.push_back(diagnose(rho, x_form, tol));
  };

  if (x_form) {
    const XState x0 = project_x(rho0, tol);
    for (long long k = 0; k <= steps; ++k) {
      if (k % sample_every != 0 && k != steps) continue;
      const double t = grid_time(k, steps, dt, horizon);
      record(t, embed_x(propagate_x_closed(x0, ch, t)));
    }
    return traj;
  }

  const Lindbladian lindbladian(ch);
  record(0.0, rho0);
  Matrix4 current = rho0.matrix();
  double t_prev = 0.0;
  for (long long k = 1; k <= steps; ++k) {
    const double t = grid_time(k, steps, dt, horizon);
    current = lindbladian.evolve(current, t - t_prev, t - t_prev);
    t_prev = t;
    if (k % sample_every != 0 && k != steps) continue;
    const DensityMatrix settled = settle_integrated(current, tol);
    current = settled.matrix();
    record(t, settled);
  }
  return traj;
}

std::string_view to_string(DeathVerdict verdict) {
  switch (verdict) {
    case DeathVerdict::FiniteDeath: return "finite";
    case DeathVerdict::AsymptoticDeath: return "asymptotic";
    case DeathVerdict::PersistentEntanglement: return "persistent";
    case DeathVerdict::NeverEntangled: return "never_entangled";
  }
  return "unknown";
}

DeathVerdict death_verdict_from_string(std::string_view text) {
  if (text == "finite") return DeathVerdict::FiniteDeath;
  if (text == "asymptotic") return DeathVerdict::AsymptoticDeath;
  if (text == "persistent") return DeathVerdict::PersistentEntanglement;
  if (text == "never_entangled") return DeathVerdict::NeverEntangled;
  throw Error(ErrorKind::Parse, "unknown death verdict '" + std::string(text) + "'");
}

DeathReport death_time(const XState& x0, const ChannelSpec& ch, double horizon,
                       const Tolerances& tol, double dt) {
  if (!ch.is_catalog())
    throw Error(ErrorKind::UnsupportedChannel, "death_time needs a catalog channel");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw Error(ErrorKind::OutOfRange, "horizon must be > 0", horizon);
  const double rate = characteristic_rate(ch);
  if (dt == 0.0) dt = default_dt(ch);
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorKind::OutOfRange, "dt must be > 0", dt);

  auto min_pt_at = [&](double t) {
    return min_pt_eigenvalue(embed_x(propagate_x_closed(x0, ch, t)));
  };
  auto alive_at = [&](double t) { return min_pt_at(t) < -tol.death; };

  const long long steps = step_count(horizon, dt);
  std::vector<double> times(static_cast<std::size_t>(steps) + 1);
  std::vector<double> margins(times.size());
  for (long long k = 0; k <= steps; ++k) {
    times[k] = grid_time(k, steps, dt, horizon);
    margins[k] = min_pt_at(times[k]);
  }
  auto alive = [&](std::size_t k) { return margins[k] < -tol.death; };

  DeathReport report;
  report.horizon = horizon;
  report.epsilon_death = tol.death;

  std::size_t last_death = times.size();
  bool ever_alive = false;
  for (std::size_t k = 0; k < times.size(); ++k) {
    ever_alive = ever_alive || alive(k);
    if (k + 1 < times.size() && alive(k) != alive(k + 1)) {
      ++report.crossings;
      if (alive(k)) last_death = k;
    }
  }

  if (!ever_alive) {
    report.verdict = DeathVerdict::NeverEntangled;
    return report;
  }

  if (alive(times.size() - 1)) {
    const double n_end = -margins.back();
    const double n_mid = -min_pt_at(0.5 * horizon);
    const double n_start = -margins.front();
    if (n_end >= n_mid * (1.0 - 1e-9)) {
      report.verdict = DeathVerdict::PersistentEntanglement;
      return report;
    }
    if (n_mid < n_start) {
      // Aitken extrapolation of the three-point trend.
      const double d1 = n_mid - n_start;
      const double d2 = n_end - n_mid;
      const double denom = d2 - d1;
      const double limit = denom != 0.0 ? n_end - d2 * d2 / denom : n_end;
      report.verdict = limit < 0.5 * n_end ? DeathVerdict::AsymptoticDeath
                                           : DeathVerdict::PersistentEntanglement;
      return report;
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "negativity trend is not monotone: N(0)=" << n_start << ", N(h/2)=" << n_mid
        << ", N(h)=" << n_end << " at horizon " << horizon;
    throw Error(ErrorKind::Inconclusive, msg.str());
  }

  double lo = times[last_death];
  double hi = times[last_death + 1];
  const double resolution = kDeathResolution / rate;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (alive_at(mid) ? lo : hi) = mid;
  }
  const double t_star = hi;

  // A real crossing leaves the minimum partial-transpose eigenvalue linear
  // in (t_star - t); a fade under the threshold leaves it exponential.
  const double probe = std::min(kTransversalProbe / rate, 0.25 * t_star);
  bool transversal = true;
  if (probe > 0.0) {
    const double near = min_pt_at(t_star - probe);
    const double far = min_pt_at(t_star - 2.0 * probe);
    if (far < -tol.death) transversal = near / far < kTransversalRatio;
  }

  if (transversal) {
    report.verdict = DeathVerdict::FiniteDeath;
    report.t_star = t_star;
  } else {
    report.verdict = DeathVerdict::AsymptoticDeath;
    --report.crossings;
  }
  return report;
}

int crossing_count(const Trajectory& traj, const Tolerances& tol) {
  int count = 0;
  for (std::size_t k = 0; k + 1 < traj.diagnostics.size(); ++k) {
    const bool now = traj.diagnostics[k].min_pt_eig < -tol.death;
    const bool next = traj.diagnostics[k + 1].min_pt_eig < -tol.death;
    if (now != next) ++count;
  }
  return count;
}

std::vector<double> refine_crossings(const Trajectory& traj,
                                     const std::function<double(double)>& min_pt_at,
                                     double resolution, const Tolerances& tol) {
  auto alive = [&](double t) { return min_pt_at(t) < -tol.death; };
  std::vector<double> crossings;
  for (std::size_t k = 0; k + 1 < traj.diagnostics.size(); ++k) {
    const bool now = traj.diagnostics[k].min_pt_eig < -tol.death;
    const bool next = traj.diagnostics[k + 1].min_pt_eig < -tol.death;
    if (now == next) continue;
    double lo = traj.times[k];
    double hi = traj.times[k + 1];
    if (alive(lo) != now || alive(hi) != next) continue;
    while (hi - lo > resolution) {
      const double mid = 0.5 * (lo + hi);
      (alive(mid) == now ? lo : hi) = mid;
    }
    crossings.push_back(hi);
  }
  return crossings;
}

DensityMatrix estimate_asymptote(const DensityMatrix& rho0, const ChannelSpec& ch,
                                 const Tolerances& tol) {
  if (!ch.is_catalog())
    throw Error(ErrorKind::UnsupportedChannel, "estimate_asymptote needs a catalog channel");
  const AsymptoticSet set = asymptotic_set(ch);
  const double rate = characteristic_rate(ch);
  const bool x_form = off_x_magnitude(rho0.matrix()) < tol.psd;

  std::optional<XState> x0;
  if (x_form) x0 = project_x(rho0, tol);
  const double dt = default_dt(ch);
  auto advance = [&](const DensityMatrix& from, double from_t, double to_t) {
    if (x0) return embed_x(propagate_x_closed(*x0, ch, to_t));
    return propagate_numeric(from, ch, to_t - from_t, std::min(dt, to_t - from_t), tol);
  };

  double t = 1.0 / rate;
  DensityMatrix current = advance(rho0, 0.0, t);
  for (int doubling = 0; doubling < kMaxDoublings; ++doubling) {
    const DensityMatrix next = advance(current, t, 2.0 * t);
    const double change = (next.matrix() - current.matrix()).cwiseAbs().maxCoeff();
    current = next;
    t *= 2.0;
    if (change < kAsymptoteChange) {
      if (!contains(set, current, kAsymptoteMembership))
        throw Error(ErrorKind::NoConvergence,
                    "limit state is not a member of the channel's asymptotic set");
      return current;
    }
  }
  throw Error(ErrorKind::NoConvergence, "no convergence after 40 horizon doublings");
}

}  // namespace esd
