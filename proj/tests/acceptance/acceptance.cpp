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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "esd/classify.hpp"
#include "esd/dynamics.hpp"
#include "esd/entanglement.hpp"
#include "esd/io.hpp"
#include "oracles.hpp"

using namespace esd;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

const std::vector<ChannelSpec>& catalog() {
  static const std::vector<ChannelSpec> channels{
      IndependentDecay{1, 1, 0}, IndependentDecay{1, 0.5, 0.5}, IndependentDephasing{1, 1},
      IndependentDephasing{0.3, 1}, CollectiveDephasing{1}};
  return channels;
}

double pure_death_oracle(double a) {
  auto margin = [a](double t) {
    const double p = std::exp(-t);
    return a * (1 - a) * p * p - std::pow(a * p * (1 - p), 2);
  };
  double lo = 0.0, hi = 50.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome x_criterion_agreement() {
  int disagreements = 0;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) {
    const XState x = random_x(static_cast<std::uint64_t>(seed));
    const bool by_x = x_entangled(x).entangled;
    const bool by_pt = partial_transpose_spectrum(embed_x(x))[0] < -1e-10;
    if (by_x != by_pt) ++disagreements;
  }
  return {disagreements == 0, std::to_string(n - disagreements) + "/" + std::to_string(n) + " agree"};
}

Outcome closed_vs_numeric() {
  double worst = 0.0;
  for (const ChannelSpec& ch : catalog()) {
    const double rate = characteristic_rate(ch);
    const Lindbladian l(ch);
    for (int seed = 0; seed < 100; ++seed) {
      const XState x = random_x(1000 + static_cast<std::uint64_t>(seed));
      Matrix4 numeric = embed_x(x).matrix();
      double t = 0.0;
      for (int k = 1; k <= 50; ++k) {
        const double next = 0.1 * k / rate;
        numeric = l.evolve(numeric, next - t, 1e-3 / rate);
        t = next;
        const Matrix4 closed = embed_x(propagate_x_closed(x, ch, t)).matrix();
        worst = std::max(worst, (numeric - closed).cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst <= 1e-6, "max entrywise error " + num(worst)};
}

Outcome physicality() {
  double worst_trace = 0.0, worst_eig = 0.0;
  std::size_t samples = 0;
  for (const ChannelSpec& ch : catalog()) {
    const double rate = characteristic_rate(ch);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (const DensityMatrix& rho0 : {random_density(seed), embed_x(random_x(seed))}) {
        const Trajectory traj = simulate(rho0, ch, 10.0 / rate, 1e-3 / rate, 10);
        for (const Diagnostics& d : traj.diagnostics) {
          worst_trace = std::max(worst_trace, std::abs(d.trace - 1.0));
          worst_eig = std::min(worst_eig, d.min_eig);
          ++samples;
        }
      }
    }
  }
  return {worst_trace <= 1e-9 && worst_eig >= -1e-8,
          std::to_string(samples) + " samples, max |trace-1| " + num(worst_trace) +
              ", min eigenvalue " + num(worst_eig)};
}

Outcome pure_family_law() {
  bool law = true;
  for (int k = 1; k <= 19; ++k) {
    const double a = std::round(5.0 * k) / 100.0;
    const XState x = make_x(a, 0, 0, 1 - a, std::sqrt(a * (1 - a)), 0);
    const DeathReport r = death_time(x, IndependentDecay{1, 1, 0}, 50.0);
    law = law && ((r.verdict == DeathVerdict::FiniteDeath) == (a > 0.5));
  }
  const XState seven = make_x(0.7, 0, 0, 0.3, std::sqrt(0.21), 0);
  const DeathReport r = death_time(seven, IndependentDecay{1, 1, 0}, 50.0);
  const double formula = -std::log(1 - std::sqrt(3.0 / 7.0));
  const double oracle = pure_death_oracle(0.7);
  const double err = r.t_star ? std::max(std::abs(*r.t_star - oracle), std::abs(*r.t_star - formula)) : 1.0;
  return {law && err <= 1e-6, std::string(law ? "verdicts flip at a=0.5" : "verdict law broken") +
                                  ", t*(0.7) = " + (r.t_star ? num(*r.t_star) : "none") +
                                  " (error " + num(err) + ")"};
}

Outcome collective_death() {
  const double kappa = 1.0;
  const DeathReport r = death_time(make_x(0.3, 0.2, 0.2, 0.3, 0.28, 0), CollectiveDephasing{kappa}, 50.0);
  const double err = r.t_star ? std::abs(*r.t_star * 2.0 * kappa - std::log(1.4)) : 1.0;
  const DensityMatrix psi = embed_x(bell(Bell::PsiPlus));
  const double closed_drift =
      (embed_x(propagate_x_closed(bell(Bell::PsiPlus), CollectiveDephasing{kappa}, 50.0)).matrix() -
       psi.matrix()).cwiseAbs().maxCoeff();
  const double numeric_drift =
      (propagate_numeric(psi, CollectiveDephasing{kappa}, 50.0, 1e-3).matrix() - psi.matrix())
          .cwiseAbs().maxCoeff();
  const double drift = std::max(closed_drift, numeric_drift);
  return {err <= 1e-6 && drift <= 1e-9,
          "t*·Γc error " + num(err) + ", Ψ+ drift over 50 " + num(drift)};
}

Outcome werner_threshold() {
  // Bisection on the dense partial-transpose spectrum, not the X criterion.
  double lo = 1.0 / 6.0, hi = 0.5;
  const auto entangled = [](double b) {
    return oracle::charpoly_eigenvalues(
               oracle::block_partial_transpose(embed_x(werner(b)).matrix()))[0] < 0.0;
  };
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (entangled(mid) ? hi : lo) = mid;
  }
  const double err = std::abs(0.5 * (lo + hi) - 1.0 / 3.0);
  return {err <= 1e-9, "boundary at b = " + num(0.5 * (lo + hi)) + " (error " + num(err) + ")"};
}

Outcome bell_mixtures() {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::array<double, 4> p{};
      p[i] = p[j] = 0.5;
      worst = std::max(worst, negativity(embed_x(bell_mixture(p))));
    }
  return {worst <= 1e-12, "max negativity " + num(worst)};
}

Outcome scenario_table() {
  struct Row {
    ScenarioLabel got;
    ScenarioFamily family;
    ScenarioCase scenario;
  };
  const std::vector<Row> rows{
      {classify_channel(IndependentDecay{1, 1, 0}), ScenarioFamily::OneAsymptote, ScenarioCase::II},
      {classify_channel(IndependentDecay{1, 1, 0.5}), ScenarioFamily::OneAsymptote, ScenarioCase::I},
      {classify_channel(IndependentDephasing{1, 1}), ScenarioFamily::MultiAsymptote, ScenarioCase::II},
      {classify_channel(CollectiveDephasing{1}), ScenarioFamily::MultiAsymptote, ScenarioCase::IV},
      {classify_set(SinglePoint{embed_x(bell(Bell::PhiPlus))}), ScenarioFamily::OneAsymptote,
       ScenarioCase::III},
  };
  bool ok = true;
  std::string labels;
  for (const Row& r : rows) {
    ok = ok && r.got.family == r.family && r.got.scenario == r.scenario;
    labels += std::string(labels.empty() ? "" : " ") + std::string(to_string(r.got.family)) + "/" +
              std::string(to_string(r.got.scenario));
  }
  return {ok, labels};
}

Outcome death_is_the_rule() {
  const ChannelSpec ch = IndependentDecay{1, 1, 0.5};
  int tested = 0, finite = 0;
  for (std::uint64_t seed = 0; tested < 200; ++seed) {
    const XState x = random_x(50000 + seed);
    if (!x_entangled(x).entangled) continue;
    ++tested;
    if (death_time(x, ch, 50.0).verdict == DeathVerdict::FiniteDeath) ++finite;
  }
  return {finite == tested, std::to_string(finite) + "/" + std::to_string(tested) + " finite deaths"};
}

Outcome separable_measure() {
  const int n = 100000;
  int separable = 0;
  for (int seed = 0; seed < n; ++seed)
    if (!is_entangled_ppt(random_density(static_cast<std::uint64_t>(seed)))) ++separable;
  const double fraction = static_cast<double>(separable) / n;
  return {fraction > 0.05 && fraction < 0.6, "separable fraction " + num(fraction)};
}

Outcome crossing_counter() {
  std::mt19937_64 rng(20261018);
  std::bernoulli_distribution flip(0.25);
  std::uniform_real_distribution<double> magnitude(1e-6, 0.5);
  int exact = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Trajectory traj;
    bool alive = flip(rng);
    int expected = 0;
    for (int k = 0; k < 200; ++k) {
      if (k > 0 && flip(rng)) {
        alive = !alive;
        ++expected;
      }
      Diagnostics d;
      d.min_pt_eig = alive ? -magnitude(rng) : magnitude(rng);
      traj.times.push_back(0.01 * k);
      traj.states.push_back(maximally_mixed());
      traj.diagnostics.push_back(d);
    }
    if (crossing_count(traj) == expected) ++exact;
  }
  return {exact == 100, std::to_string(exact) + "/100 exact"};
}

std::string cli_output(std::vector<std::string> args) {
  args.insert(args.begin(), "esd");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

Outcome determinism() {
  const std::filesystem::path dir(ESD_TEST_TMPDIR);
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "set.json") << R"({"kind":"x_family","w_zero":true,"z_zero":false,"populations":null})";
  }
  const std::vector<std::vector<std::string>> runs{
      {"evolve", "--channel", "decay:1,0.7,0.3", "--state", format_state(random_density(5)), "--horizon", "2"},
      {"evolve", "--channel", "collective:1", "--state", "x:0.3,0.2,0.2,0.3,0.28,0,0,0", "--horizon", "5"},
      {"death-time", "--channel", "decay:1,1,0", "--state", "x:0.7,0,0,0.3,0.458257569495584,0,0,0"},
      {"classify", "--channel", "collective:1", "--seed", "42", "--samples", "200"},
      {"classify", "--set-file", (dir / "set.json").string(), "--seed", "3"},
      {"sweep", "--family", "pure-phi", "--channel", "decay:1,1,0.1", "--grid", "a=0.05:0.95:19", "--jobs", "4"},
  };
  int identical = 0;
  for (const auto& args : runs)
    if (cli_output(args) == cli_output(args)) ++identical;
  return {identical == static_cast<int>(runs.size()),
          std::to_string(identical) + "/" + std::to_string(runs.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"X-criterion/PPT agreement", x_criterion_agreement},
      {"closed-form vs numeric propagation", closed_vs_numeric},
      {"physicality along trajectories", physicality},
      {"zero-temperature pure-family sudden death law", pure_family_law},
      {"collective-dephasing death time and invariance", collective_death},
      {"Werner threshold", werner_threshold},
      {"equal Bell-pair mixtures are separable", bell_mixtures},
      {"scenario table", scenario_table},
      {"sudden death under an interior asymptote", death_is_the_rule},
      {"positive measure of separable states", separable_measure},
      {"crossing counter", crossing_counter},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
