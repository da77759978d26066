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

#ifndef REFLECTSPIN_COEFF_MATRIX_HPP
#define REFLECTSPIN_COEFF_MATRIX_HPP

#include <optional>

#include "reflectspin/model_builder.hpp"
#include "reflectspin/operator.hpp"

namespace reflectspin {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kVanishTol = 1e-12;

// Coefficients c_{ab} of psi = sum c_{ab} psi_a (x) U psi_b, where psi_a are
// the product S3 eigenstates. tr(c c^dagger) = <psi|psi>.
struct CoefficientMatrix {
  Matrix c;

  Index dim() const { return c.rows(); }
  double norm_squared() const { return c.squaredNorm(); }
  CoefficientMatrix normalized() const;
};

// c = d U, d the D x D reshape of psi with the left factor as row index.
CoefficientMatrix state_to_coeff(const Vector& psi, const Operator& U);
// Inverse of state_to_coeff: d = c U^T.
Vector coeff_to_state(const CoefficientMatrix& c, const Operator& U);

// Row-major reshape helpers between D^2 vectors and D x D matrices.
Matrix reshape_state(const Vector& psi, Index d);
Vector flatten_state(const Matrix& d);

// tr(cc^dagger h) + tr((c^dagger c)^T h) - sum_A sum_a tr(c^dagger S c S^dagger).
// Throws ConsistencyError if the imaginary part exceeds 1e-10.
double energy_expression(const CoefficientMatrix& c, const AssembledSystem& sys);

// Direct <psi|H_full|psi> for the state built from c.
double direct_expectation(const CoefficientMatrix& c, const AssembledSystem& sys);

enum class Parity { Symmetric, Antisymmetric };

// (c + c^T) or (c - c^T), renormalized; nullopt if it vanishes.
std::optional<CoefficientMatrix> symmetrize(const CoefficientMatrix& c, Parity parity);

// c = u c_R, c_L = sqrt(c c^dagger) = u c_R u^dagger, c_R = sqrt(c^dagger c).
struct PolarFactors {
  Matrix u;
  Matrix c_R;
  Matrix c_L;
};

// Computed from a full SVD c = W S V^dagger: c_L = W S W^dagger,
// c_R = V S V^dagger, u = W V^dagger. For singular c the kernel directions
// are paired in singular-value index order. Throws NumericalError if the
// polar identities fail at 1e-10.
PolarFactors positive_part(const CoefficientMatrix& c);

struct TraceInequality {
  double lhs;
  double rhs;

  bool holds(double tol = 1e-10) const { return lhs <= rhs + tol * std::max(1.0, rhs); }
};

// lhs = |tr(c^dagger M c N^dagger)|,
// rhs = (tr(c_L M c_L M^dagger) + tr(c_R N c_R N^dagger)) / 2.
TraceInequality trace_inequality_margin(const Matrix& c, const Matrix& M, const Matrix& N);

// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const Matrix& m);

}  // namespace reflectspin

#endif  // REFLECTSPIN_COEFF_MATRIX_HPP
