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

#include "reflectspin/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "reflectspin/errors.hpp"

namespace reflectspin {

namespace {

constexpr double kSolveHermiticityTol = 1e-10;
constexpr int kCombinationCount = 16;
constexpr std::uint64_t kCombinationSeed = 0x5eed2a11u;

void require_hermitian(const Operator& H) {
  if (!H.is_hermitian(kSolveHermiticityTol)) {
    std::ostringstream msg;
    msg << "Hamiltonian is not Hermitian (|H - H^dagger| = " << H.hermiticity_defect() << ")";
    throw InvalidInput(msg.str());
  }
}

Matrix hermitian_part(const Operator& H) {
  return 0.5 * (H.matrix() + H.matrix().adjoint());
}

void check_info(Eigen::ComputationInfo info) {
  if (info != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
}

}  // namespace

GroundSpace solve(const Operator& H, double degeneracy_tol) {
  require_hermitian(H);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(H));
  check_info(es.info());
  GroundSpace out;
  out.spectrum = es.eigenvalues();
  out.E0 = out.spectrum(0);
  const double cut = out.E0 + degeneracy_tol * std::max(1.0, std::abs(out.E0));
  for (Index i = 0; i < out.spectrum.size() && out.spectrum(i) <= cut; ++i) {
    out.vectors.push_back(es.eigenvectors().col(i));
  }
  return out;
}

double ground_energy(const Operator& H) {
  require_hermitian(H);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(H), Eigen::EigenvaluesOnly);
  check_info(es.info());
  return es.eigenvalues()(0);
}

double energy_residual(const Operator& H, const Vector& psi, double E) {
  return (H.matrix() * psi - E * psi).norm() / std::max(1.0, std::abs(E));
}

namespace {

// Candidate states: the ground basis vectors then fixed random combinations.
std::vector<Vector> candidate_states(const GroundSpace& ground) {
  std::vector<Vector> out = ground.vectors;
  if (ground.multiplicity() > 1) {
    std::mt19937_64 rng(kCombinationSeed);
    std::normal_distribution<double> gauss;
    for (int n = 0; n < kCombinationCount; ++n) {
      Vector v = Vector::Zero(ground.vectors.front().size());
      for (const auto& g : ground.vectors) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += Complex(re, im) * g;
      }
      out.push_back(v.normalized());
    }
  }
  return out;
}

}  // namespace

PositiveGroundState find_positive_ground_state(const AssembledSystem& sys,
                                               const GroundSpace& ground) {
  if (ground.vectors.empty()) throw InvalidInput("ground space is empty");
  double best = std::numeric_limits<double>::infinity();
  for (const Vector& psi : candidate_states(ground)) {
    const CoefficientMatrix c = state_to_coeff(psi, sys.U);
    for (Parity parity : {Parity::Symmetric, Parity::Antisymmetric}) {
      const auto sym = symmetrize(c, parity);
      if (!sym) continue;
      Matrix c_l = positive_part(*sym).c_L;
      const double n = c_l.norm();
      if (n <= kVanishTol) continue;
      PositiveGroundState cand;
      cand.c_L = CoefficientMatrix{c_l / n};
      cand.state = coeff_to_state(cand.c_L, sys.U);
      cand.residual = energy_residual(sys.H_full, cand.state, ground.E0);
      cand.trace = cand.c_L.c.trace().real();
      cand.min_eig = min_hermitian_eigenvalue(cand.c_L.c);
      best = std::min(best, cand.residual);
      if (cand.residual <= kGroundResidualTol && cand.trace > 0.0) return cand;
    }
  }
  std::ostringstream msg;
  msg << "no positive semidefinite ground state found; best residual " << best;
  throw VerificationFailure(msg.str(), best);
}

Complex singlet_overlap(const CoefficientMatrix& c) { return c.c.trace(); }

Operator crossing_pair_operator(const AssembledSystem& sys, std::size_t crossing, Component a) {
  if (crossing >= sys.crossings.size()) {
    throw InvalidInput("crossing set index " + std::to_string(crossing) + " out of range");
  }
  const Operator s = crossing_operator(sys.crossings[crossing], a, sys.sites);
  const Matrix id = Matrix::Identity(s.dim(), s.dim());
  return Operator(kron(s.matrix(), id) + kron(id, s.matrix()));
}

Operator perturbed_hamiltonian(const AssembledSystem& sys, std::size_t crossing, double b) {
  const Operator pair = crossing_pair_operator(sys, crossing, Component::Z);
  const Index n = sys.H_full.dim();
  return Operator(sys.H_full.matrix() - b * pair.matrix() +
                  (0.5 * b * b) * Matrix::Identity(n, n));
}

Operator perturbed_hamiltonian(const AssembledSystem& sys, const CrossingSet& B, double b) {
  const auto it = std::find(sys.crossings.begin(), sys.crossings.end(), B);
  if (it == sys.crossings.end()) throw InvalidInput("crossing set is not part of the system");
  return perturbed_hamiltonian(sys, static_cast<std::size_t>(it - sys.crossings.begin()), b);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw InvalidInput("grid needs at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> default_b_grid() { return uniform_grid(-2.0, 2.0, 21); }

PerturbationReport verify_eb_bound(const AssembledSystem& sys, std::size_t crossing,
                                   std::span<const double> b_grid) {
  return verify_eb_bound(sys, crossing, b_grid, ground_energy(sys.H_full));
}

PerturbationReport verify_eb_bound(const AssembledSystem& sys, std::size_t crossing,
                                   std::span<const double> b_grid, double E0) {
  PerturbationReport out;
  out.E0 = E0;
  out.within_hypothesis = sys.flags.h_equals_h_tilde || sys.flags.h_real_symmetric;
  out.min_margin = std::numeric_limits<double>::infinity();
  for (double b : b_grid) {
    // b = 0 is H itself; reuse E0 so the margin is exactly zero.
    const double eb = b == 0.0 ? E0 : ground_energy(perturbed_hamiltonian(sys, crossing, b));
    out.b_values.push_back(b);
    out.E_b.push_back(eb);
    out.min_margin = std::min(out.min_margin, eb - E0);
  }
  return out;
}

double ice_rule_expectation(const Vector& psi0, const AssembledSystem& sys,
                            std::size_t crossing, Component a) {
  const Operator pair = crossing_pair_operator(sys, crossing, a);
  return psi0.dot(pair.matrix() * psi0).real();
}

double ice_rule_residual(const GroundSpace& ground, const AssembledSystem& sys,
                         std::size_t crossing, Component a) {
  const Operator pair = crossing_pair_operator(sys, crossing, a);
  const auto k = static_cast<Index>(ground.multiplicity());
  Matrix compressed(k, k);
  for (Index r = 0; r < k; ++r) {
    const Vector applied = pair.matrix() * ground.vectors[r];
    for (Index col = 0; col < k; ++col) compressed(col, r) = ground.vectors[col].dot(applied);
  }
  compressed = (0.5 * (compressed + compressed.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(compressed, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace reflectspin
