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

#ifndef REFLECTSPIN_GROUND_STATE_HPP
#define REFLECTSPIN_GROUND_STATE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "reflectspin/coeff_matrix.hpp"
#include "reflectspin/model_builder.hpp"

namespace reflectspin {

inline constexpr double kDefaultDegeneracyTol = 1e-9;
inline constexpr double kGroundResidualTol = 1e-8;

struct GroundSpace {
  double E0 = 0.0;
  // Orthonormal basis of the lowest eigenspace.
  std::vector<Vector> vectors;
  // Full spectrum, ascending.
  Eigen::VectorXd spectrum;

  std::size_t multiplicity() const { return vectors.size(); }
};

// Dense Hermitian eigendecomposition. Eigenvalues within
// degeneracy_tol * max(1, |E0|) of E0 belong to the ground space.
GroundSpace solve(const Operator& H, double degeneracy_tol = kDefaultDegeneracyTol);

// Lowest eigenvalue only.
double ground_energy(const Operator& H);

// |H psi - E psi| / max(1, |E|).
double energy_residual(const Operator& H, const Vector& psi, double E);

struct PositiveGroundState {
  CoefficientMatrix c_L;
  Vector state;
  double residual = 0.0;
  double trace = 0.0;
  double min_eig = 0.0;
};

// Search the ground space for a ground state with psd coefficient matrix:
// symmetrize, take c_L = sqrt(cc^dagger), renormalize. Tries every basis
// vector, then 16 fixed pseudo-random combinations. Throws
// VerificationFailure carrying the best residual on failure.
PositiveGroundState find_positive_ground_state(const AssembledSystem& sys,
                                               const GroundSpace& ground);

// <Xi|psi_c> = tr(c).
Complex singlet_overlap(const CoefficientMatrix& c);

// Right-copy realization I (x) S_B^{(a)} and left S_B^{(a)} (x) I summed.
Operator crossing_pair_operator(const AssembledSystem& sys, std::size_t crossing, Component a);

// H(b) = H - b (S3_B + S3_B') + b^2/2.
Operator perturbed_hamiltonian(const AssembledSystem& sys, std::size_t crossing, double b);
Operator perturbed_hamiltonian(const AssembledSystem& sys, const CrossingSet& B, double b);

struct PerturbationReport {
  std::vector<double> b_values;
  std::vector<double> E_b;
  double E0 = 0.0;
  double min_margin = 0.0;
  // False when neither h = h_tilde nor h = h^T holds; the bound is then
  // informational.
  bool within_hypothesis = true;
};

// n uniform points on [lo, hi]; n == 1 gives {lo}.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);
// 21 points on [-2, 2].
std::vector<double> default_b_grid();

PerturbationReport verify_eb_bound(const AssembledSystem& sys, std::size_t crossing,
                                   std::span<const double> b_grid);
PerturbationReport verify_eb_bound(const AssembledSystem& sys, std::size_t crossing,
                                   std::span<const double> b_grid, double E0);

// <psi0| sum_{i in B} j_i (s_i^(a) + s_i'^(a)) |psi0>.
double ice_rule_expectation(const Vector& psi0, const AssembledSystem& sys,
                            std::size_t crossing, Component a);

// Largest |<psi|O|psi>| over unit vectors psi of the ground space, i.e. the
// spectral norm of the crossing operator compressed to the ground space.
double ice_rule_residual(const GroundSpace& ground, const AssembledSystem& sys,
                         std::size_t crossing, Component a);

}  // namespace reflectspin

#endif  // REFLECTSPIN_GROUND_STATE_HPP
