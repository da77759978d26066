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

#include "reflectspin/coeff_matrix.hpp"

#include <cmath>
#include <sstream>

#include "reflectspin/errors.hpp"

namespace reflectspin {

namespace {

constexpr double kPolarTol = 1e-10;
constexpr double kImaginaryTol = 1e-10;

void require_unit(double norm_squared, const char* what) {
  if (std::abs(norm_squared - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << what << ": expected unit norm, got squared norm " << norm_squared;
    throw InvalidInput(msg.str());
  }
}

}  // namespace

CoefficientMatrix CoefficientMatrix::normalized() const {
  const double n = c.norm();
  if (n <= kVanishTol) throw InvalidInput("cannot normalize a vanishing coefficient matrix");
  return {c / n};
}

Matrix reshape_state(const Vector& psi, Index d) {
  if (psi.size() != d * d) {
    throw InvalidInput("state of size " + std::to_string(psi.size()) +
                       " does not match subsystem dimension " + std::to_string(d) +
                       " (expected " + std::to_string(d * d) + ")");
  }
  Matrix out(d, d);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) out(a, b) = psi(a * d + b);
  }
  return out;
}

Vector flatten_state(const Matrix& d) {
  Vector out(d.rows() * d.cols());
  for (Index a = 0; a < d.rows(); ++a) {
    for (Index b = 0; b < d.cols(); ++b) out(a * d.cols() + b) = d(a, b);
  }
  return out;
}

CoefficientMatrix state_to_coeff(const Vector& psi, const Operator& U) {
  require_unit(psi.squaredNorm(), "state_to_coeff");
  return {reshape_state(psi, U.dim()) * U.matrix()};
}

Vector coeff_to_state(const CoefficientMatrix& c, const Operator& U) {
  require_unit(c.norm_squared(), "coeff_to_state");
  if (c.dim() != U.dim()) throw InvalidInput("coefficient matrix and U dimensions differ");
  return flatten_state(c.c * U.matrix().transpose());
}

double energy_expression(const CoefficientMatrix& c, const AssembledSystem& sys) {
  require_unit(c.norm_squared(), "energy_expression");
  if (c.dim() != sys.subsystem_dim()) throw InvalidInput("coefficient matrix dimension mismatch");
  const Matrix& h = sys.h.matrix();
  const Matrix cc = c.c * c.c.adjoint();
  const Matrix ctc = c.c.adjoint() * c.c;
  Complex e = (cc * h).trace() + (ctc.transpose() * h).trace();
  for (const auto& ops : sys.crossing_ops) {
    for (const auto& s : ops) {
      e -= (c.c.adjoint() * s.matrix() * c.c * s.matrix().adjoint()).trace();
    }
  }
  if (std::abs(e.imag()) > kImaginaryTol) {
    std::ostringstream msg;
    msg << "energy expression has imaginary part " << e.imag()
        << "; basis or sign convention mismatch";
    throw ConsistencyError(msg.str());
  }
  return e.real();
}

double direct_expectation(const CoefficientMatrix& c, const AssembledSystem& sys) {
  const Vector psi = coeff_to_state(c, sys.U);
  return psi.dot(sys.H_full.matrix() * psi).real();
}

std::optional<CoefficientMatrix> symmetrize(const CoefficientMatrix& c, Parity parity) {
  require_unit(c.norm_squared(), "symmetrize");
  Matrix m = parity == Parity::Symmetric ? Matrix(c.c + c.c.transpose())
                                         : Matrix(c.c - c.c.transpose());
  const double n = m.norm();
  if (n <= kVanishTol) return std::nullopt;
  return CoefficientMatrix{m / n};
}

PolarFactors positive_part(const CoefficientMatrix& c) {
  if (!c.c.allFinite()) throw InvalidInput("positive_part: coefficient matrix has non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(c.c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix& w = svd.matrixU();
  const Matrix& v = svd.matrixV();
  const Eigen::VectorXd& s = svd.singularValues();
  const Matrix sig = s.cast<Complex>().asDiagonal();

  PolarFactors out;
  out.c_L = w * sig * w.adjoint();
  out.c_R = v * sig * v.adjoint();
  out.u = w * v.adjoint();
  // Exact Hermiticity.
  out.c_L = 0.5 * (out.c_L + out.c_L.adjoint()).eval();
  out.c_R = 0.5 * (out.c_R + out.c_R.adjoint()).eval();

  const double scale = std::max(1.0, c.c.norm());
  const double d_polar = (c.c - out.u * out.c_R).norm() / scale;
  const double d_conj = (out.u * out.c_R * out.u.adjoint() - out.c_L).norm() / scale;
  const double d_unit =
      (out.u.adjoint() * out.u - Matrix::Identity(c.dim(), c.dim())).norm();
  if (d_polar > kPolarTol || d_conj > kPolarTol || d_unit > kPolarTol) {
    std::ostringstream msg;
    msg << "polar decomposition lost accuracy: |c - u c_R| = " << d_polar
        << ", |u c_R u^dagger - c_L| = " << d_conj << ", |u^dagger u - I| = " << d_unit
        << ", singular value range [" << s.minCoeff() << ", " << s.maxCoeff() << "]";
    throw NumericalError(msg.str());
  }
  return out;
}

TraceInequality trace_inequality_margin(const Matrix& c, const Matrix& M, const Matrix& N) {
  const Index d = c.rows();
  if (c.cols() != d || M.rows() != d || M.cols() != d || N.rows() != d || N.cols() != d) {
    throw InvalidInput("trace inequality needs square matrices of one dimension");
  }
  const PolarFactors p = positive_part(CoefficientMatrix{c});
  TraceInequality out;
  out.lhs = std::abs((c.adjoint() * M * c * N.adjoint()).trace());
  out.rhs = 0.5 * ((p.c_L * M * p.c_L * M.adjoint()).trace().real() +
                   (p.c_R * N * p.c_R * N.adjoint()).trace().real());
  return out;
}

double min_hermitian_eigenvalue(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace reflectspin
