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

#include "esd/entanglement.hpp"

#include <stdexcept>
#include <string>

#include "esd/errors.hpp"

namespace esd {

Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int n = 0; n < 2; ++n)
          out(2 * j + n, 2 * l + k) = m(2 * j + k, 2 * l + n);
  return out;
}

Matrix4 partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix());
}

std::array<double, 4> partial_transpose_spectrum(const DensityMatrix& rho) {
  return eigenvalues_hermitian(partial_transpose(rho));
}

double min_pt_eigenvalue(const DensityMatrix& rho) {
  return partial_transpose_spectrum(rho)[0];
}

double negativity(const DensityMatrix& rho, const Tolerances& tol) {
  double sum = 0.0;
  for (double lambda : partial_transpose_spectrum(rho))
    if (lambda < -tol.ent) sum -= lambda;
  return sum;
}

bool is_entangled_ppt(const DensityMatrix& rho, const Tolerances& tol) {
  return min_pt_eigenvalue(rho) < -tol.ent;
}

XVerdict x_entangled(const XState& x, const Tolerances& tol) {
  XVerdict v;
  v.w_margin = std::norm(x.w()) - x.b() * x.c();
  v.z_margin = std::norm(x.z()) - x.a() * x.d();
  const bool w_active = v.w_margin > tol.ent;
  const bool z_active = v.z_margin > tol.ent;
  if (w_active && z_active)
    throw std::logic_error("x_entangled: both coherence blocks report entanglement");
  v.entangled = w_active || z_active;
  v.active_block = w_active ? CoherenceBlock::W
                   : z_active ? CoherenceBlock::Z
                              : CoherenceBlock::None;
  return v;
}

RegionLabel classify_position(const DensityMatrix& rho, const Tolerances& tol) {
  RegionLabel label;
  label.margin = min_pt_eigenvalue(rho);
  label.rank_margin = eigenvalues_hermitian(rho.matrix())[0];
  if (label.margin < -tol.ent)
    label.region = Region::Entangled;
  else if (label.margin > tol.ent && label.rank_margin > tol.ent)
    label.region = Region::SeparableInterior;
  else
    label.region = Region::SeparableBoundary;
  return label;
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::SeparableInterior: return "interior";
    case Region::SeparableBoundary: return "boundary";
    case Region::Entangled: return "entangled";
  }
  return "unknown";
}

Region region_from_string(std::string_view text) {
  if (text == "interior") return Region::SeparableInterior;
  if (text == "boundary") return Region::SeparableBoundary;
  if (text == "entangled") return Region::Entangled;
  throw Error(ErrorKind::Parse, "unknown region label '" + std::string(text) + "'");
}

}  // namespace esd
