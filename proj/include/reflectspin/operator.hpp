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

#ifndef REFLECTSPIN_OPERATOR_HPP
#define REFLECTSPIN_OPERATOR_HPP

#include <Eigen/Dense>
#include <complex>

namespace reflectspin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Dense complex square matrix acting on a Hilbert space of dimension dim().
// Hermiticity is a property of particular instances, not of the type.
class Operator {
 public:
  Operator() = default;
  // Throws InvalidInput when the matrix is not square, empty or has
  // non-finite entries.
  explicit Operator(Matrix entries);

  static Operator identity(Index dim);
  static Operator zero(Index dim);

  Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  bool is_hermitian(double tol) const;
  // Frobenius norm of A - A^dagger.
  double hermiticity_defect() const;

 private:
  Matrix entries_;
};

// Kronecker product a (x) b with a as the most significant factor.
Matrix kron(const Matrix& a, const Matrix& b);

// Largest absolute entry; 0 for empty matrices.
double max_abs(const Matrix& m);

}  // namespace reflectspin

#endif  // REFLECTSPIN_OPERATOR_HPP
