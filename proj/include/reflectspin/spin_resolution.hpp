// Copyright 2026 The reflectspin Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFLECTSPIN_SPIN_RESOLUTION_HPP
#define REFLECTSPIN_SPIN_RESOLUTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "reflectspin/coeff_matrix.hpp"
#include "reflectspin/spin_algebra.hpp"

namespace reflectspin {

inline constexpr double kBasisHealthTol = 1e-9;
inline constexpr double kSharpSpinTol = 1e-9;

// One spin-j block [j]_k occupying columns [first_column, first_column + 2j + 1)
// of the change of basis, m descending.
struct Multiplet {
  int twice_j;
  std::size_t k;  // 1-based within its j
  Index first_column;

  Index size() const { return twice_j + 1; }
};

struct MultipletLabeling {
  SiteList sites;
  std::vector<Multiplet> multiplets;
  // Real orthogonal; column first_column + t of a multiplet is psi_(j, j - t, k)
  // in the product basis.
  Eigen::MatrixXd V;

  // Multiplets per spin, keyed by 2j, descending.
  std::vector<std::pair<int, std::size_t>> counts() const;
};

// Highest-weight vectors span ker(S+) within the S3 = j eigenspace; lower
// members follow by S- and normalization (Condon-Shortley). Throws
// NumericalError when orthonormality or completeness degrade past 1e-9.
MultipletLabeling multiplet_basis(const SiteList& sites);

// Computed once per site list, then shared read-only.
const MultipletLabeling& cached_multiplet_basis(const SiteList& sites);

// Normalized state with coefficient matrix I / sqrt(D).
Vector canonical_xi(const MultipletLabeling& labeling);

struct SpinZeroProjection {
  // Unnormalized projection with unit overall constant.
  CoefficientMatrix c0;
  double norm = 0.0;
};

// Coefficient matrix of the spin-zero component of psi_c. Blocks with
// j = j', m = m' get (1 / (2j + 1)) sum_m c_(j,m,k)(j,m,k'); everything else 0.
SpinZeroProjection project_spin_zero(const CoefficientMatrix& c, const MultipletLabeling& labeling);

struct SpinResolvedState {
  double s3_expectation = 0.0;
  double s_squared_expectation = 0.0;
  double s_squared_variance = 0.0;
  // Present when <S^2> = j(j+1) and its variance are within 1e-9.
  std::optional<int> sharp_twice_spin;
};

// Total spin of the doubled system; psi has dimension sites.dim()^2.
SpinResolvedState total_spin(const Vector& psi, const SiteList& sites);

// S^2_tot psi for the doubled system without forming D^2 x D^2 matrices.
Vector apply_total_spin_squared(const Vector& psi, const SiteList& sites);

}  // namespace reflectspin

#endif  // REFLECTSPIN_SPIN_RESOLUTION_HPP
