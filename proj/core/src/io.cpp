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

#include "esd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "esd/errors.hpp"

namespace esd {
namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::vector<double> parse_list(std::string_view payload, std::size_t expected,
                               std::string_view what) {
  const auto parts = split(payload, ',');
  if (parts.size() != expected)
    parse_error(std::string(what) + " expects " + std::to_string(expected) +
                " comma-separated values, got " + std::to_string(parts.size()));
  std::vector<double> values;
  for (std::size_t i = 0; i < parts.size(); ++i)
    values.push_back(parse_double(parts[i], std::string(what) + " field " + std::to_string(i + 1)));
  return values;
}

Json to_json(const AsymptoticSet& set) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SinglePoint>) {
          return {{"kind", "single"}, {"state", format_state(s.state)}};
        } else if constexpr (std::is_same_v<T, ExplicitSamples>) {
          Json states = Json::array();
          for (const auto& rho : s.states) states.push_back(format_state(rho));
          return {{"kind", "samples"}, {"states", states}};
        } else {
          Json pops = nullptr;
          if (s.populations) pops = *s.populations;
          return {{"kind", "x_family"}, {"w_zero", s.w_zero}, {"z_zero", s.z_zero},
                  {"populations", pops}};
        }
      },
      set);
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

double parse_double(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size() || text.empty())
    parse_error(std::string(field) + ": '" + std::string(text) + "' is not a number");
  return value;
}

std::string format_x(const XState& x) {
  std::ostringstream out;
  out << "x:" << format_double(x.a()) << ',' << format_double(x.b()) << ','
      << format_double(x.c()) << ',' << format_double(x.d()) << ','
      << format_double(x.w().real()) << ',' << format_double(x.w().imag()) << ','
      << format_double(x.z().real()) << ',' << format_double(x.z().imag());
  return out.str();
}

std::string format_dense(const Matrix4& m) {
  std::ostringstream out;
  out << "dense:";
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      if (j + k > 0) out << ',';
      out << format_double(m(j, k).real()) << ':' << format_double(m(j, k).imag());
    }
  return out.str();
}

std::string format_state(const DensityMatrix& rho) {
  if (off_x_magnitude(rho.matrix()) == 0.0) {
    return format_x(XState::assume_valid(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
                                         rho(3, 3).real(), rho(0, 3), rho(1, 2)));
  }
  return format_dense(rho.matrix());
}

Matrix4 parse_dense_entries(std::string_view payload) {
  const auto parts = split(payload, ',');
  if (parts.size() != 16)
    parse_error("dense state expects 16 re:im entries, got " + std::to_string(parts.size()));
  Matrix4 m;
  for (int i = 0; i < 16; ++i) {
    const auto pair = split(parts[i], ':');
    if (pair.size() != 2)
      parse_error("dense entry " + std::to_string(i + 1) + " must be re:im");
    const std::string field = "dense entry " + std::to_string(i + 1);
    m(i / 4, i % 4) = Complex(parse_double(pair[0], field), parse_double(pair[1], field));
  }
  return m;
}

XState parse_x_literal(std::string_view literal, const Tolerances& tol) {
  literal = trim(literal);
  if (literal.substr(0, 2) != "x:") parse_error("X-state literal must start with 'x:'");
  const auto v = parse_list(literal.substr(2), 8, "x state");
  return make_x(v[0], v[1], v[2], v[3], Complex(v[4], v[5]), Complex(v[6], v[7]), tol);
}

DensityMatrix parse_state(std::string_view literal, const Tolerances& tol) {
  literal = trim(literal);
  if (literal.substr(0, 2) == "x:") return embed_x(parse_x_literal(literal, tol));
  if (literal.substr(0, 6) == "dense:")
    return make_density(parse_dense_entries(literal.substr(6)), tol);
  parse_error("state literal must start with 'x:' or 'dense:', got '" + std::string(literal) +
              "'");
}

CustomChannel read_custom_channel(std::istream& in) {
  CustomChannel ch;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto space = text.find_first_of(" \t");
    if (space == std::string_view::npos)
      parse_error("custom channel line " + std::to_string(line_no) +
                  ": expected '<rate> dense:<entries>'");
    const double rate =
        parse_double(text.substr(0, space), "custom channel line " + std::to_string(line_no));
    const auto op = trim(text.substr(space));
    if (op.substr(0, 6) != "dense:")
      parse_error("custom channel line " + std::to_string(line_no) +
                  ": jump operator must be a dense: literal");
    ch.jumps.push_back({parse_dense_entries(op.substr(6)), rate});
  }
  return ch;
}

ChannelSpec parse_channel(std::string_view literal) {
  literal = trim(literal);
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos)
    parse_error("channel literal '" + std::string(literal) + "' has no ':'");
  const auto kind = literal.substr(0, colon);
  const auto payload = literal.substr(colon + 1);
  if (kind == "decay") {
    const auto v = parse_list(payload, 3, "decay channel");
    return IndependentDecay{v[0], v[1], v[2]};
  }
  if (kind == "dephase") {
    const auto v = parse_list(payload, 2, "dephase channel");
    return IndependentDephasing{v[0], v[1]};
  }
  if (kind == "collective") {
    const auto v = parse_list(payload, 1, "collective channel");
    return CollectiveDephasing{v[0]};
  }
  if (kind == "custom") {
    std::ifstream in{std::string(payload)};
    if (!in) parse_error("cannot open custom channel file '" + std::string(payload) + "'");
    return read_custom_channel(in);
  }
  parse_error("unknown channel kind '" + std::string(kind) + "'");
}

std::string format_channel(const ChannelSpec& ch) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, IndependentDecay>)
          return "decay:" + format_double(c.gamma_a) + "," + format_double(c.gamma_b) + "," +
                 format_double(c.nbar);
        else if constexpr (std::is_same_v<T, IndependentDephasing>)
          return "dephase:" + format_double(c.kappa_a) + "," + format_double(c.kappa_b);
        else if constexpr (std::is_same_v<T, CollectiveDephasing>)
          return "collective:" + format_double(c.kappa);
        else
          throw Error(ErrorKind::UnsupportedChannel, "custom channels have no inline literal");
      },
      ch.variant());
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryCsvHeader << '\n';
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Diagnostics& d = traj.diagnostics[i];
    out << format_double(traj.times[i]) << ',' << format_double(d.negativity) << ','
        << format_double(d.min_pt_eig) << ',' << format_double(d.min_eig) << ',';
    for (int k = 0; k < 4; ++k) {
      if (d.populations) out << format_double((*d.populations)[k]);
      out << ',';
    }
    out << format_double(d.abs_w) << ',' << format_double(d.abs_z) << '\n';
  }
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kTrajectoryCsvHeader)
    parse_error("trajectory CSV header mismatch");
  std::vector<TrajectoryRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 10)
      parse_error("trajectory CSV line " + std::to_string(line_no) + " has " +
                  std::to_string(cells.size()) + " cells");
    const std::string where = "trajectory CSV line " + std::to_string(line_no);
    TrajectoryRow row;
    row.t = parse_double(cells[0], where);
    row.negativity = parse_double(cells[1], where);
    row.min_pt_eig = parse_double(cells[2], where);
    row.min_eig = parse_double(cells[3], where);
    const bool empty = cells[4].empty();
    for (int k = 5; k < 8; ++k)
      if (cells[k].empty() != empty) parse_error(where + ": populations must be all or none");
    if (!empty)
      row.populations = std::array<double, 4>{
          parse_double(cells[4], where), parse_double(cells[5], where),
          parse_double(cells[6], where), parse_double(cells[7], where)};
    row.abs_w = parse_double(cells[8], where);
    row.abs_z = parse_double(cells[9], where);
    rows.push_back(row);
  }
  return rows;
}

std::string death_report_json(const DeathReport& report) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["t_star"] = report.t_star ? Json(*report.t_star) : Json(nullptr);
  j["horizon"] = report.horizon;
  j["crossings"] = report.crossings;
  j["epsilon_death"] = report.epsilon_death;
  return j.dump();
}

DeathReport parse_death_report_json(std::string_view text) {
  const Json j = parse_json(text, "death report");
  try {
    DeathReport r;
    r.verdict = death_verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("t_star").is_null()) r.t_star = j.at("t_star").get<double>();
    r.horizon = j.at("horizon").get<double>();
    r.crossings = j.at("crossings").get<int>();
    r.epsilon_death = j.at("epsilon_death").get<double>();
    return r;
  } catch (const Json::exception& e) {
    parse_error(std::string("death report: ") + e.what());
  }
}

std::string scenario_json(const ScenarioLabel& label) {
  Json j;
  j["family"] = to_string(label.family);
  j["case"] = to_string(label.scenario);
  Json evidence = Json::array();
  for (const Evidence& e : label.evidence)
    evidence.push_back({{"state", format_state(e.state)},
                        {"label", to_string(e.label.region)},
                        {"margin", e.label.margin}});
  j["evidence"] = evidence;
  return j.dump();
}

ScenarioLabel parse_scenario_json(std::string_view text, const Tolerances& tol) {
  const Json j = parse_json(text, "scenario label");
  try {
    ScenarioLabel label;
    label.family = scenario_family_from_string(j.at("family").get<std::string>());
    label.scenario = scenario_case_from_string(j.at("case").get<std::string>());
    for (const Json& e : j.at("evidence")) {
      const DensityMatrix rho = parse_state(e.at("state").get<std::string>(), tol);
      RegionLabel where;
      where.region = region_from_string(e.at("label").get<std::string>());
      where.margin = e.at("margin").get<double>();
      where.rank_margin = eigenvalues_hermitian(rho.matrix())[0];
      label.evidence.push_back({rho, where});
    }
    return label;
  } catch (const Json::exception& e) {
    parse_error(std::string("scenario label: ") + e.what());
  }
}

AsymptoticSet parse_set_json(std::string_view text, const Tolerances& tol) {
  const Json j = parse_json(text, "asymptotic set");
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "single") return SinglePoint{parse_state(j.at("state").get<std::string>(), tol)};
    if (kind == "samples") {
      ExplicitSamples samples;
      for (const Json& s : j.at("states")) samples.states.push_back(parse_state(s.get<std::string>(), tol));
      return samples;
    }
    if (kind == "x_family") {
      XFamily family;
      family.w_zero = j.value("w_zero", false);
      family.z_zero = j.value("z_zero", false);
      if (j.contains("populations") && !j.at("populations").is_null()) {
        const auto p = j.at("populations").get<std::array<double, 4>>();
        // Validates the populations as the diagonal of a state.
        make_x(p[0], p[1], p[2], p[3], 0.0, 0.0, tol);
        family.populations = p;
      }
      return family;
    }
    parse_error("asymptotic set kind must be single, samples or x_family, got '" + kind + "'");
  } catch (const Json::exception& e) {
    parse_error(std::string("asymptotic set: ") + e.what());
  }
}

std::string set_json(const AsymptoticSet& set) { return to_json(set).dump(); }

}  // namespace esd
