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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "esd/classify.hpp"
#include "esd/errors.hpp"

using namespace esd;

namespace {

bool same(const ScenarioLabel& lhs, const ScenarioLabel& rhs) {
  if (lhs.family != rhs.family || lhs.scenario != rhs.scenario) return false;
  if (lhs.evidence.size() != rhs.evidence.size()) return false;
  for (std::size_t k = 0; k < lhs.evidence.size(); ++k) {
    if (!(lhs.evidence[k].state == rhs.evidence[k].state)) return false;
    if (lhs.evidence[k].label.region != rhs.evidence[k].label.region) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("case table") {
  using R = Region;
  CHECK(case_from_labels({R::SeparableInterior}) == ScenarioCase::I);
  CHECK(case_from_labels({R::SeparableInterior, R::SeparableBoundary}) == ScenarioCase::II);
  CHECK(case_from_labels({R::Entangled, R::Entangled}) == ScenarioCase::III);
  CHECK(case_from_labels({R::Entangled, R::SeparableBoundary}) == ScenarioCase::IV);
  CHECK(case_from_labels({R::SeparableInterior, R::Entangled}) == ScenarioCase::IV);
  CHECK_THROWS_AS(case_from_labels({}), Error);
}

TEST_CASE("single-point sets") {
  Matrix4 ground = Matrix4::Zero();
  ground(3, 3) = 1.0;
  const ScenarioLabel boundary = classify_set(SinglePoint{make_density(ground)});
  CHECK(boundary.family == ScenarioFamily::OneAsymptote);
  CHECK(boundary.scenario == ScenarioCase::II);
  REQUIRE(boundary.evidence.size() == 1);

  const ScenarioLabel entangled = classify_set(SinglePoint{embed_x(bell(Bell::PhiPlus))});
  CHECK(entangled.family == ScenarioFamily::OneAsymptote);
  CHECK(entangled.scenario == ScenarioCase::III);

  const ScenarioLabel interior = classify_set(SinglePoint{maximally_mixed()});
  CHECK(interior.scenario == ScenarioCase::I);
}

TEST_CASE("explicit samples") {
  const ScenarioLabel one = classify_set(ExplicitSamples{{maximally_mixed()}});
  CHECK(one.family == ScenarioFamily::OneAsymptote);
  const ScenarioLabel mixed =
      classify_set(ExplicitSamples{{maximally_mixed(), embed_x(bell(Bell::PsiMinus))}});
  CHECK(mixed.family == ScenarioFamily::MultiAsymptote);
  CHECK(mixed.scenario == ScenarioCase::IV);
  CHECK_THROWS_AS(classify_set(ExplicitSamples{}), Error);
}

TEST_CASE("catalog channels") {
  const ScenarioLabel cold = classify_channel(IndependentDecay{1, 1, 0});
  CHECK(cold.family == ScenarioFamily::OneAsymptote);
  CHECK(cold.scenario == ScenarioCase::II);

  const ScenarioLabel hot = classify_channel(IndependentDecay{1, 1, 0.5});
  CHECK(hot.family == ScenarioFamily::OneAsymptote);
  CHECK(hot.scenario == ScenarioCase::I);

  const ScenarioLabel tetra = classify_channel(IndependentDephasing{1, 1});
  CHECK(tetra.family == ScenarioFamily::MultiAsymptote);
  CHECK(tetra.scenario == ScenarioCase::II);
  bool saw_interior = false;
  for (const Evidence& e : tetra.evidence) {
    CHECK(e.label.region != Region::Entangled);
    saw_interior = saw_interior || e.label.region == Region::SeparableInterior;
  }
  CHECK(saw_interior);

  const ScenarioLabel dfs = classify_channel(CollectiveDephasing{1});
  CHECK(dfs.family == ScenarioFamily::MultiAsymptote);
  CHECK(dfs.scenario == ScenarioCase::IV);
  bool saw_entangled = false, saw_separable = false;
  for (const Evidence& e : dfs.evidence) {
    saw_entangled = saw_entangled || e.label.region == Region::Entangled;
    saw_separable = saw_separable || e.label.region != Region::Entangled;
  }
  CHECK(saw_entangled);
  CHECK(saw_separable);

  CHECK_THROWS_AS(classify_channel(CustomChannel{jump_operators(CollectiveDephasing{1})}), Error);
}

TEST_CASE("classification is deterministic and stable in the sample count") {
  const std::vector<ChannelSpec> channels{IndependentDecay{1, 1, 0}, IndependentDecay{1, 1, 0.5},
                                          IndependentDephasing{1, 1}, CollectiveDephasing{1}};
  for (const ChannelSpec& ch : channels) {
    CHECK(same(classify_channel(ch, {}, 100, 3), classify_channel(ch, {}, 100, 3)));
    const ScenarioCase reference = classify_channel(ch, {}, 10, 0).scenario;
    for (int n : {100, 1000}) CHECK(classify_channel(ch, {}, n, 0).scenario == reference);
  }
}

TEST_CASE("sampled family members and their midpoints stay in the family") {
  const std::vector<XFamily> families{
      {true, true, std::nullopt},
      {true, false, std::nullopt},
      {true, false, std::array<double, 4>{0, 0.5, 0.5, 0}},
  };
  std::mt19937_64 rng(2);
  for (const XFamily& f : families) {
    const AsymptoticSet set = f;
    const std::vector<DensityMatrix> members = sample_family(f, 100, 9);
    REQUIRE(members.size() > 100);
    for (const DensityMatrix& m : members) CHECK(contains(set, m, 1e-12));
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int k = 0; k < 200; ++k) {
      const Matrix4 mid = 0.5 * (members[pick(rng)].matrix() + members[pick(rng)].matrix());
      CHECK(contains(set, make_density(mid), 1e-12));
    }
  }
}

TEST_CASE("names round-trip") {
  for (ScenarioFamily f : {ScenarioFamily::OneAsymptote, ScenarioFamily::MultiAsymptote})
    CHECK(scenario_family_from_string(to_string(f)) == f);
  for (ScenarioCase c : {ScenarioCase::I, ScenarioCase::II, ScenarioCase::III, ScenarioCase::IV})
    CHECK(scenario_case_from_string(to_string(c)) == c);
  CHECK(to_string(ScenarioCase::IV) == "iv");
  CHECK_THROWS_AS(scenario_case_from_string("v"), Error);
}
