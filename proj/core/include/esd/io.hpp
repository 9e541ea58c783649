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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esd/channels.hpp"
#include "esd/classify.hpp"
#include "esd/dynamics.hpp"

// Text formats shared by the command-line tool and data files.
//
//   state    x:a,b,c,d,w_re,w_im,z_re,z_im
//            dense:re:im,re:im,... (16 entries, row-major, basis |1>..|4>)
//   channel  decay:gamma_a,gamma_b,nbar | dephase:kappa_a,kappa_b |
//            collective:kappa | custom:<path>
//
// A custom-channel file holds one jump per line, "<rate> dense:<16 entries>";
// blank lines and lines starting with '#' are ignored.

namespace esd {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text, std::string_view field);

std::string format_x(const XState& x);
std::string format_dense(const Matrix4& m);
/// x: literal when every off-pattern entry is exactly zero, dense: otherwise.
std::string format_state(const DensityMatrix& rho);

/// The 16 entries of a dense: payload, without any validation.
Matrix4 parse_dense_entries(std::string_view payload);
XState parse_x_literal(std::string_view literal, const Tolerances& tol = {});
DensityMatrix parse_state(std::string_view literal, const Tolerances& tol = {});

CustomChannel read_custom_channel(std::istream& in);
ChannelSpec parse_channel(std::string_view literal);
/// Catalog channels only; custom channels have no inline literal.
std::string format_channel(const ChannelSpec& ch);

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t,negativity,min_pt_eig,min_eig,a,b,c,d,abs_w,abs_z";

struct TrajectoryRow {
  double t = 0.0;
  double negativity = 0.0;
  double min_pt_eig = 0.0;
  double min_eig = 0.0;
  std::optional<std::array<double, 4>> populations;
  double abs_w = 0.0;
  double abs_z = 0.0;

  friend bool operator==(const TrajectoryRow&, const TrajectoryRow&) = default;
};

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in);

std::string death_report_json(const DeathReport& report);
DeathReport parse_death_report_json(std::string_view text);

std::string scenario_json(const ScenarioLabel& label);
ScenarioLabel parse_scenario_json(std::string_view text, const Tolerances& tol = {});

/// Asymptotic-set files:
///   {"kind":"single","state":"<literal>"}
///   {"kind":"samples","states":["<literal>", ...]}
///   {"kind":"x_family","w_zero":true,"z_zero":false,"populations":null}
AsymptoticSet parse_set_json(std::string_view text, const Tolerances& tol = {});
std::string set_json(const AsymptoticSet& set);

}  // namespace esd
