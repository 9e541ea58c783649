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
#include <string>
#include <string_view>
#include <vector>

#include "esd/channels.hpp"
#include "esd/entanglement.hpp"

namespace esd {

enum class ScenarioFamily { OneAsymptote, MultiAsymptote };
enum class ScenarioCase { I, II, III, IV };

struct Evidence {
  DensityMatrix state;
  RegionLabel label;
};

/// Position of the asymptotic set R relative to the separable set S:
///   i   R inside the interior of S
///   ii  R inside S, touching its boundary
///   iii R inside the entangled set
///   iv  R holds both separable and entangled states (multi only)
struct ScenarioLabel {
  ScenarioFamily family = ScenarioFamily::OneAsymptote;
  ScenarioCase scenario = ScenarioCase::I;
  std::vector<Evidence> evidence;
};

/// Case from the evidence labels alone; throws Error(EmptySet) for no labels.
ScenarioCase case_from_labels(const std::vector<Region>& labels);

/// Deterministic members of an X family: population vertices, edge and face
/// centres and the centroid (or the fixed populations), each combined with
/// zero and extreme free coherences, followed by `n_random` seeded members
/// drawn uniformly from the family.
std::vector<DensityMatrix> sample_family(const XFamily& family, int n_random,
                                         std::uint64_t seed);

ScenarioLabel classify_set(const AsymptoticSet& set, const Tolerances& tol = {},
                           int n_samples = 100, std::uint64_t seed = 0);

/// classify_set(asymptotic_set(ch), ...). Custom channels throw
/// Error(UnsupportedChannel); pass their asymptotic set explicitly.
ScenarioLabel classify_channel(const ChannelSpec& ch, const Tolerances& tol = {},
                               int n_samples = 100, std::uint64_t seed = 0);

std::string_view to_string(ScenarioFamily family);  // "one" / "multi"
std::string_view to_string(ScenarioCase scenario);  // "i" ... "iv"
ScenarioFamily scenario_family_from_string(std::string_view text);
ScenarioCase scenario_case_from_string(std::string_view text);

}  // namespace esd
