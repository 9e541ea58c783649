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

#include "esd/classify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "esd/errors.hpp"

namespace esd {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Populations = std::array<double, 4>;

std::vector<Populations> extreme_populations() {
  std::vector<Populations> out;
  for (int j = 0; j < 4; ++j) {
    Populations p{};
    p[j] = 1.0;
    out.push_back(p);
  }
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      Populations p{};
      p[j] = p[k] = 0.5;
      out.push_back(p);
    }
  for (int skip = 3; skip >= 0; --skip) {
    Populations p;
    for (int j = 0; j < 4; ++j) p[j] = j == skip ? 0.0 : 1.0 / 3.0;
    out.push_back(p);
  }
  out.push_back({0.25, 0.25, 0.25, 0.25});
  return out;
}

// Zero plus the four extreme points of the disc |v| <= radius.
std::vector<Complex> coherence_choices(bool zeroed, double radius) {
  if (zeroed || radius == 0.0) return {0.0};
  return {0.0, radius, -radius, Complex(0.0, radius), Complex(0.0, -radius)};
}

DensityMatrix member(const Populations& p, Complex w, Complex z) {
  return embed_x(XState::assume_valid(p[0], p[1], p[2], p[3], w, z));
}

}  // namespace

ScenarioCase case_from_labels(const std::vector<Region>& labels) {
  if (labels.empty()) throw Error(ErrorKind::EmptySet, "no evidence to classify");
  const auto count = [&](Region r) { return std::count(labels.begin(), labels.end(), r); };
  const auto entangled = count(Region::Entangled);
  const auto boundary = count(Region::SeparableBoundary);
  const auto total = static_cast<long>(labels.size());
  if (entangled == total) return ScenarioCase::III;
  if (entangled > 0) return ScenarioCase::IV;
  return boundary > 0 ? ScenarioCase::II : ScenarioCase::I;
}

std::vector<DensityMatrix> sample_family(const XFamily& family, int n_random,
                                         std::uint64_t seed) {
  std::vector<Populations> bases;
  if (family.populations)
    bases.push_back(*family.populations);
  else
    bases = extreme_populations();

  std::vector<DensityMatrix> out;
  for (const Populations& p : bases)
    for (Complex w : coherence_choices(family.w_zero, std::sqrt(p[0] * p[3])))
      for (Complex z : coherence_choices(family.z_zero, std::sqrt(p[1] * p[2])))
        out.push_back(member(p, w, z));

  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disc = [&](double radius) {
    const double r = radius * std::sqrt(unit(gen));
    return std::polar(r, 2.0 * M_PI * unit(gen));
  };
  for (int i = 0; i < n_random; ++i) {
    Populations p;
    if (family.populations) {
      p = *family.populations;
    } else {
      for (double& v : p) v = expo(gen);
      const double total = p[0] + p[1] + p[2] + p[3];
      for (double& v : p) v /= total;
    }
    const Complex w = family.w_zero ? Complex(0.0) : disc(std::sqrt(p[0] * p[3]));
    const Complex z = family.z_zero ? Complex(0.0) : disc(std::sqrt(p[1] * p[2]));
    out.push_back(member(p, w, z));
  }
  return out;
}

ScenarioLabel classify_set(const AsymptoticSet& set, const Tolerances& tol, int n_samples,
                           std::uint64_t seed) {
  if (n_samples < 0) throw Error(ErrorKind::OutOfRange, "n_samples must be >= 0", n_samples);

  ScenarioLabel label;
  std::vector<DensityMatrix> members = std::visit(
      Overloaded{
          [&](const SinglePoint& s) {
            label.family = ScenarioFamily::OneAsymptote;
            return std::vector<DensityMatrix>{s.state};
          },
          [&](const XFamily& f) {
            label.family = ScenarioFamily::MultiAsymptote;
            return sample_family(f, n_samples, seed);
          },
          [&](const ExplicitSamples& e) {
            if (e.states.empty())
              throw Error(ErrorKind::EmptySet, "explicit asymptotic set has no states");
            label.family = e.states.size() == 1 ? ScenarioFamily::OneAsymptote
                                                : ScenarioFamily::MultiAsymptote;
            return e.states;
          },
      },
      set);

  std::vector<Region> regions;
  for (const DensityMatrix& rho : members) {
    const RegionLabel where = classify_position(rho, tol);
    regions.push_back(where.region);
    label.evidence.push_back({rho, where});
  }
  label.scenario = case_from_labels(regions);
  return label;
}

ScenarioLabel classify_channel(const ChannelSpec& ch, const Tolerances& tol, int n_samples,
                               std::uint64_t seed) {
  return classify_set(asymptotic_set(ch), tol, n_samples, seed);
}

std::string_view to_string(ScenarioFamily family) {
  return family == ScenarioFamily::OneAsymptote ? "one" : "multi";
}

std::string_view to_string(ScenarioCase scenario) {
  switch (scenario) {
    case ScenarioCase::I: return "i";
    case ScenarioCase::II: return "ii";
    case ScenarioCase::III: return "iii";
    case ScenarioCase::IV: return "iv";
  }
  return "?";
}

ScenarioFamily scenario_family_from_string(std::string_view text) {
  if (text == "one") return ScenarioFamily::OneAsymptote;
  if (text == "multi") return ScenarioFamily::MultiAsymptote;
  throw Error(ErrorKind::Parse, "unknown scenario family '" + std::string(text) + "'");
}

ScenarioCase scenario_case_from_string(std::string_view text) {
  if (text == "i") return ScenarioCase::I;
  if (text == "ii") return ScenarioCase::II;
  if (text == "iii") return ScenarioCase::III;
  if (text == "iv") return ScenarioCase::IV;
  throw Error(ErrorKind::Parse, "unknown scenario case '" + std::string(text) + "'");
}

}  // namespace esd
