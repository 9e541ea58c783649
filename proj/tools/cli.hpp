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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "esd/state.hpp"

namespace esd::cli {

/// Bad command line or config values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// `param=start:stop:n`; n evenly spaced values from start to stop.
struct GridAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> values() const;
};

GridAxis parse_grid_axis(const std::string& spec);

struct RunConfig {
  std::string channel;
  std::vector<std::string> states;
  std::optional<double> horizon;
  std::optional<double> dt;
  Tolerances tol;
  std::uint64_t seed = 0;
  std::string out;  // empty writes to stdout
  int jobs = 0;     // 0 uses every hardware thread
  int sample_every = 0;
  int samples = 100;
  std::string set_file;
  std::vector<GridAxis> grid;
  std::string family = "x";
};

/// Overlays the keys of a JSON config file onto `config`.
void apply_config_file(const std::string& path, RunConfig& config);

int cmd_evolve(const RunConfig& config, std::ostream& out);
int cmd_death_time(const RunConfig& config, std::ostream& out);
int cmd_classify(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);

/// Full command line: parses flags, loads --config, dispatches, and maps
/// errors to exit codes (2 usage/parse, 3 runtime). Output goes to --out
/// when given, else to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace esd::cli
