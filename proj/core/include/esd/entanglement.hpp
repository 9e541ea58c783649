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
#include <string_view>

#include "esd/state.hpp"

namespace esd {

/// Transpose on qubit B: entry (jk),(lm) moves to (jm),(lk).
Matrix4 partial_transpose(const Matrix4& m);
Matrix4 partial_transpose(const DensityMatrix& rho);

std::array<double, 4> partial_transpose_spectrum(const DensityMatrix& rho);

double min_pt_eigenvalue(const DensityMatrix& rho);

/// Sum of |lambda| over partial-transpose eigenvalues below -tol.ent, so that
/// negativity(rho) == 0 exactly when is_entangled_ppt(rho) is false.
double negativity(const DensityMatrix& rho, const Tolerances& tol = {});

bool is_entangled_ppt(const DensityMatrix& rho, const Tolerances& tol = {});

enum class CoherenceBlock { None, W, Z };

struct XVerdict {
  bool entangled = false;
  CoherenceBlock active_block = CoherenceBlock::None;
  double w_margin = 0.0;  // |w|^2 - bc
  double z_margin = 0.0;  // |z|^2 - ad
};

/// Closed-form X-state test: entangled iff |w|^2 > bc or |z|^2 > ad (by more
/// than tol.ent). Throws std::logic_error if both margins are positive,
/// which positivity of a valid XState rules out.
XVerdict x_entangled(const XState& x, const Tolerances& tol = {});

enum class Region { SeparableInterior, SeparableBoundary, Entangled };

struct RegionLabel {
  Region region = Region::SeparableBoundary;
  double margin = 0.0;       // minimum partial-transpose eigenvalue
  double rank_margin = 0.0;  // minimum eigenvalue of rho
};

/// Entangled below -tol.ent; interior when both the partial transpose and
/// rho itself have every eigenvalue above tol.ent; boundary otherwise.
/// Strict PPT with full rank is sufficient for the interior, not necessary.
RegionLabel classify_position(const DensityMatrix& rho, const Tolerances& tol = {});

/// "interior", "boundary" or "entangled".
std::string_view to_string(Region region);
Region region_from_string(std::string_view text);

}  // namespace esd
