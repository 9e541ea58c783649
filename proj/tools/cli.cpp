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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "esd/classify.hpp"
#include "esd/dynamics.hpp"
#include "esd/entanglement.hpp"
#include "esd/errors.hpp"
#include "esd/io.hpp"

namespace esd::cli {
namespace {

// Errors raised while turning config values into library objects are usage
// errors; anything thrown after that is a runtime failure.
template <typename F>
auto parsing(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(field + ": " + e.what());
  }
}

ChannelSpec channel_of(const RunConfig& config) {
  if (config.channel.empty()) throw UsageError("--channel is required");
  return parsing("--channel", [&] { return parse_channel(config.channel); });
}

DensityMatrix single_state(const RunConfig& config) {
  if (config.states.empty()) throw UsageError("--state is required");
  if (config.states.size() > 1) throw UsageError("--state given more than once");
  return parsing("--state", [&] { return parse_state(config.states.front(), config.tol); });
}

void check_tolerances(const RunConfig& config) {
  parsing("tolerances", [&] {
    config.tol.validate();
    return 0;
  });
}

double positive(const std::optional<double>& value, double fallback, const char* name) {
  const double v = value.value_or(fallback);
  if (!(v > 0.0) || !std::isfinite(v))
    throw UsageError(std::string(name) + " must be a positive number");
  return v;
}

double round_to_grid(double v) {
  std::ostringstream s;
  s.precision(15);
  s << v;
  return std::stod(s.str());
}

struct SweepRow {
  std::vector<double> params;
  std::string verdict;
  std::optional<double> t_star;
  std::optional<int> crossings;
};

constexpr std::array<const char*, 8> kXFields{"a", "b", "c", "d", "w_re", "w_im", "z_re", "z_im"};

}  // namespace

std::vector<double> GridAxis::values() const {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    if (count == 1) {
      out.push_back(start);
      break;
    }
    out.push_back(round_to_grid(start + (stop - start) * i / (count - 1)));
  }
  return out;
}

GridAxis parse_grid_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("grid axis '" + spec + "' must look like param=start:stop:n");
  GridAxis axis;
  axis.param = spec.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream rest(spec.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ':');) parts.push_back(part);
  if (parts.size() != 3)
    throw UsageError("grid axis '" + spec + "' must look like param=start:stop:n");
  parsing("--grid " + axis.param, [&] {
    axis.start = parse_double(parts[0], "start");
    axis.stop = parse_double(parts[1], "stop");
    const double n = parse_double(parts[2], "n");
    if (n != std::floor(n) || n < 0 || n > 1e7)
      throw Error(ErrorKind::Parse, "n must be a non-negative integer");
    axis.count = static_cast<int>(n);
    return 0;
  });
  return axis;
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("--config: " + std::string(e.what()));
  }
  try {
    if (j.contains("channel")) config.channel = j.at("channel").get<std::string>();
    if (j.contains("state")) {
      const auto& s = j.at("state");
      config.states = s.is_array() ? s.get<std::vector<std::string>>()
                                   : std::vector<std::string>{s.get<std::string>()};
    }
    if (j.contains("horizon")) config.horizon = j.at("horizon").get<double>();
    if (j.contains("dt")) config.dt = j.at("dt").get<double>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("eps_death")) config.tol.death = j.at("eps_death").get<double>();
    if (j.contains("eps_trace")) config.tol.trace = j.at("eps_trace").get<double>();
    if (j.contains("eps_psd")) config.tol.psd = j.at("eps_psd").get<double>();
    if (j.contains("eps_ent")) config.tol.ent = j.at("eps_ent").get<double>();
    if (j.contains("out")) config.out = j.at("out").get<std::string>();
    if (j.contains("jobs")) config.jobs = j.at("jobs").get<int>();
    if (j.contains("sample_every")) config.sample_every = j.at("sample_every").get<int>();
    if (j.contains("samples")) config.samples = j.at("samples").get<int>();
    if (j.contains("set_file")) config.set_file = j.at("set_file").get<std::string>();
    if (j.contains("family")) config.family = j.at("family").get<std::string>();
    if (j.contains("grid")) {
      config.grid.clear();
      for (const auto& g : j.at("grid")) config.grid.push_back(parse_grid_axis(g.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("--config: " + std::string(e.what()));
  }
}

int cmd_evolve(const RunConfig& config, std::ostream& out) {
  check_tolerances(config);
  const ChannelSpec ch = channel_of(config);
  const DensityMatrix rho0 = single_state(config);
  const double horizon = positive(config.horizon, default_horizon(ch), "--horizon");
  const double dt = positive(config.dt, default_dt(ch), "--dt");
  if (config.sample_every < 0) throw UsageError("--sample-every must be >= 0");
  const int every =
      config.sample_every > 0 ? config.sample_every : default_sample_every(horizon, dt);

  const Trajectory traj = simulate(rho0, ch, horizon, dt, every, config.tol);
  write_trajectory_csv(out, traj);
  return kExitOk;
}

int cmd_death_time(const RunConfig& config, std::ostream& out) {
  check_tolerances(config);
  const ChannelSpec ch = channel_of(config);
  const DensityMatrix rho0 = single_state(config);
  const XState x0 = parsing("--state", [&] { return project_x(rho0, config.tol); });
  const double horizon = positive(config.horizon, default_horizon(ch), "--horizon");
  const double dt = positive(config.dt, default_dt(ch), "--dt");

  const DeathReport report = death_time(x0, ch, horizon, config.tol, dt);
  out << death_report_json(report) << '\n';
  return kExitOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  check_tolerances(config);
  if (config.samples < 0) throw UsageError("--samples must be >= 0");
  if (!config.set_file.empty() && !config.channel.empty())
    throw UsageError("give either --channel or --set-file, not both");

  ScenarioLabel label;
  if (!config.set_file.empty()) {
    std::ifstream in(config.set_file);
    if (!in) throw UsageError("--set-file: cannot open '" + config.set_file + "'");
    std::stringstream text;
    text << in.rdbuf();
    const AsymptoticSet set =
        parsing("--set-file", [&] { return parse_set_json(text.str(), config.tol); });
    label = classify_set(set, config.tol, config.samples, config.seed);
  } else {
    label = classify_channel(channel_of(config), config.tol, config.samples, config.seed);
  }
  out << scenario_json(label) << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  check_tolerances(config);
  const ChannelSpec ch = channel_of(config);
  if (config.grid.empty()) throw UsageError("--grid is required");
  for (const GridAxis& axis : config.grid)
    if (axis.count < 1) throw UsageError("--grid " + axis.param + " is empty");
  const double horizon = positive(config.horizon, default_horizon(ch), "--horizon");
  const double dt = positive(config.dt, default_dt(ch), "--dt");

  // Each row is a full set of eight X parameters built from the family.
  std::array<double, 8> base{};
  std::vector<int> slots;
  if (config.family == "x") {
    const DensityMatrix rho0 = single_state(config);
    const XState x = parsing("--state", [&] { return project_x(rho0, config.tol); });
    base = {x.a(), x.b(), x.c(), x.d(), x.w().real(), x.w().imag(), x.z().real(), x.z().imag()};
    for (const GridAxis& axis : config.grid) {
      const auto it = std::find(kXFields.begin(), kXFields.end(), axis.param);
      if (it == kXFields.end())
        throw UsageError("--grid: unknown X parameter '" + axis.param + "'");
      slots.push_back(static_cast<int>(it - kXFields.begin()));
    }
  } else if (config.family == "pure-phi" || config.family == "pure-psi") {
    const std::string wanted = config.family == "pure-phi" ? "a" : "b";
    if (config.grid.size() != 1 || config.grid[0].param != wanted)
      throw UsageError("--family " + config.family + " sweeps exactly one parameter '" + wanted +
                       "'");
  } else {
    throw UsageError("--family must be x, pure-phi or pure-psi");
  }

  std::vector<std::vector<double>> axes;
  std::size_t rows = 1;
  for (const GridAxis& axis : config.grid) {
    axes.push_back(axis.values());
    rows *= axes.back().size();
  }

  auto evaluate = [&](std::size_t index) {
    SweepRow row;
    std::size_t rest = index;
    row.params.resize(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      row.params[k] = axes[k][rest % axes[k].size()];
      rest /= axes[k].size();
    }
    std::array<double, 8> p = base;
    if (config.family == "pure-phi") {
      const double a = row.params[0];
      p = {a, 0, 0, 1.0 - a, std::sqrt(a * (1.0 - a)), 0, 0, 0};
    } else if (config.family == "pure-psi") {
      const double b = row.params[0];
      p = {0, b, 1.0 - b, 0, 0, 0, std::sqrt(b * (1.0 - b)), 0};
    } else {
      for (std::size_t k = 0; k < slots.size(); ++k) p[slots[k]] = row.params[k];
    }
    try {
      const XState x = make_x(p[0], p[1], p[2], p[3], Complex(p[4], p[5]), Complex(p[6], p[7]),
                              config.tol);
      const DeathReport report = death_time(x, ch, horizon, config.tol, dt);
      row.verdict = std::string(to_string(report.verdict));
      row.t_star = report.t_star;
      row.crossings = report.crossings;
    } catch (const Error& e) {
      row.verdict = e.kind() == ErrorKind::Inconclusive ? "inconclusive" : "invalid";
    }
    return row;
  };

  std::vector<SweepRow> results(rows);
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs) : hardware;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) results[i] = evaluate(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(jobs, rows); ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const GridAxis& axis : config.grid) out << axis.param << ',';
  out << "verdict,t_star,crossings\n";
  for (const SweepRow& row : results) {
    for (double v : row.params) out << format_double(v) << ',';
    out << row.verdict << ',';
    if (row.t_star) out << format_double(*row.t_star);
    out << ',';
    if (row.crossings) out << *row.crossings;
    out << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement sudden death simulator and reservoir classifier", "esd"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  std::vector<std::string> grid_specs;
  std::optional<double> eps_death;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs, sample_every, samples;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--channel", flags.channel, "decay:ga,gb,nbar | dephase:ka,kb | collective:k | custom:<path>");
    sub->add_option("--state", flags.states, "x:a,b,c,d,w_re,w_im,z_re,z_im or dense:<16 re:im>");
    sub->add_option("--horizon", flags.horizon, "final time (default 50/rate)");
    sub->add_option("--dt", flags.dt, "time step (default 1e-3/rate)");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--eps-death", eps_death, "negativity threshold for death");
    sub->add_option("--out", flags.out, "output file (default stdout)");
    sub->add_option("--config", config_path, "JSON config; flags override its values");
    sub->add_option("--jobs", jobs, "worker threads (default: all processors)");
  };

  CLI::App* evolve = app.add_subcommand("evolve", "write a trajectory CSV");
  common(evolve);
  evolve->add_option("--sample-every", sample_every, "keep every n-th step");

  CLI::App* death = app.add_subcommand("death-time", "write a death report JSON");
  common(death);

  CLI::App* classify = app.add_subcommand("classify", "write a scenario label JSON");
  common(classify);
  classify->add_option("--set-file", flags.set_file, "asymptotic-set JSON instead of --channel");
  classify->add_option("--samples", samples, "random members drawn from X families");

  CLI::App* sweep = app.add_subcommand("sweep", "death reports over a parameter grid");
  common(sweep);
  sweep->add_option("--grid", grid_specs, "param=start:stop:n (repeatable)");
  sweep->add_option("--family", flags.family, "x (default), pure-phi or pure-psi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) apply_config_file(config_path, config);

    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    CLI::App* sub = app.get_subcommands().front();
    if (given(sub, "--channel")) config.channel = flags.channel;
    if (given(sub, "--state")) config.states = flags.states;
    if (given(sub, "--horizon")) config.horizon = flags.horizon;
    if (given(sub, "--dt")) config.dt = flags.dt;
    if (seed) config.seed = *seed;
    if (eps_death) config.tol.death = *eps_death;
    if (given(sub, "--out")) config.out = flags.out;
    if (jobs) config.jobs = *jobs;
    if (sample_every) config.sample_every = *sample_every;
    if (samples) config.samples = *samples;
    if (sub == classify && given(sub, "--set-file")) config.set_file = flags.set_file;
    if (sub == sweep && given(sub, "--family")) config.family = flags.family;
    if (sub == sweep && given(sub, "--grid")) {
      config.grid.clear();
      for (const std::string& g : grid_specs) config.grid.push_back(parse_grid_axis(g));
    }

    std::ostringstream buffer;
    int code = kExitOk;
    if (sub == evolve) code = cmd_evolve(config, buffer);
    else if (sub == death) code = cmd_death_time(config, buffer);
    else if (sub == classify) code = cmd_classify(config, buffer);
    else code = cmd_sweep(config, buffer);

    if (config.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw UsageError("--out: cannot open '" + config.out + "'");
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace esd::cli
