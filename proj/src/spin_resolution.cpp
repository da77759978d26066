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

#include "reflectspin/spin_resolution.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "reflectspin/errors.hpp"

namespace reflectspin {

std::vector<std::pair<int, std::size_t>> MultipletLabeling::counts() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& m : multiplets) {
    if (out.empty() || out.back().first != m.twice_j) out.emplace_back(m.twice_j, 0);
    ++out.back().second;
  }
  return out;
}

namespace {

// Flip sign so the first entry with magnitude above 1e-12 is positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

// Orthonormal basis of {x restricted to `cols` : B x = 0}, B = S+(rows, cols).
Eigen::MatrixXd highest_weight_block(const Eigen::MatrixXd& s_plus, const std::vector<Index>& rows,
                                     const std::vector<Index>& cols) {
  const auto n_in = static_cast<Index>(cols.size());
  const auto n_out = static_cast<Index>(rows.size());
  if (n_out == 0) return Eigen::MatrixXd::Identity(n_in, n_in);
  Eigen::MatrixXd bt(n_in, n_out);
  for (Index r = 0; r < n_out; ++r) {
    for (Index c = 0; c < n_in; ++c) bt(c, r) = s_plus(rows[r], cols[c]);
  }
  // Column-pivoted QR of B^T: the trailing columns of Q span ker(B).
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(bt);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n_in, n_in);
  Eigen::MatrixXd kernel = q.rightCols(n_in - n_out);
  for (Index c = 0; c < kernel.cols(); ++c) fix_sign(kernel.col(c));
  return kernel;
}

}  // namespace

MultipletLabeling multiplet_basis(const SiteList& sites) {
  const Index d = sites.dim();
  const TotalSpinOps ops = total_spin_ops(sites);
  const Eigen::MatrixXd s3 = ops.s3.matrix().real();
  const Eigen::MatrixXd sp = ops.s_plus.matrix().real();
  const Eigen::MatrixXd sm = sp.transpose();

  int twice_jmax = 0;
  for (const auto& s : sites.spins()) twice_jmax += s.twice_s();
  std::map<int, std::vector<Index>, std::greater<>> by_m;
  for (Index i = 0; i < d; ++i) by_m[static_cast<int>(std::lround(2.0 * s3(i, i)))].push_back(i);

  MultipletLabeling out;
  out.sites = sites;
  out.V = Eigen::MatrixXd::Zero(d, d);
  Index column = 0;
  for (int twice_j = twice_jmax; twice_j >= 0; twice_j -= 2) {
    const auto& cols = by_m[twice_j];
    const auto& rows = by_m[twice_j + 2];
    if (cols.size() < rows.size()) {
      throw NumericalError("S3 sector sizes are not unimodal; site list is inconsistent");
    }
    const Eigen::MatrixXd kernel = highest_weight_block(sp, rows, cols);
    const double j = 0.5 * twice_j;
    for (Index k = 0; k < kernel.cols(); ++k) {
      if (column + twice_j + 1 > d) throw NumericalError("multiplet basis overflowed the space");
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      for (std::size_t c = 0; c < cols.size(); ++c) v(cols[c]) = kernel(static_cast<Index>(c), k);
      const double leak = (sp * v).norm();
      if (leak > kBasisHealthTol) {
        std::ostringstream msg;
        msg << "highest-weight vector for 2j = " << twice_j << " has |S+ v| = " << leak;
        throw NumericalError(msg.str());
      }
      out.multiplets.push_back({twice_j, static_cast<std::size_t>(k + 1), column});
      out.V.col(column) = v;
      for (int t = 1; t <= twice_j; ++t) {
        const double m = j - (t - 1);
        v = sm * v / std::sqrt(j * (j + 1.0) - m * (m - 1.0));
        out.V.col(column + t) = v;
      }
      column += twice_j + 1;
    }
  }
  if (column != d) {
    throw NumericalError("multiplet decomposition covers " + std::to_string(column) + " of " +
                         std::to_string(d) + " dimensions");
  }
  const double defect =
      (out.V.transpose() * out.V - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kBasisHealthTol) {
    std::ostringstream msg;
    msg << "multiplet basis lost orthonormality: max |V^T V - I| = " << defect;
    throw NumericalError(msg.str());
  }
  return out;
}

const MultipletLabeling& cached_multiplet_basis(const SiteList& sites) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<const MultipletLabeling>> cache;
  std::vector<int> key;
  for (const auto& s : sites.spins()) key.push_back(s.twice_s());
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<const MultipletLabeling>(multiplet_basis(sites));
  return *slot;
}

Vector canonical_xi(const MultipletLabeling& labeling) {
  const Index d = labeling.sites.dim();
  const CoefficientMatrix c{Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d))};
  return coeff_to_state(c, tilde_unitary(labeling.sites));
}

SpinZeroProjection project_spin_zero(const CoefficientMatrix& c,
                                     const MultipletLabeling& labeling) {
  const Index d = labeling.V.rows();
  if (c.dim() != d) throw InvalidInput("coefficient matrix does not match the multiplet basis");
  const Matrix v = labeling.V.cast<Complex>();
  const Matrix in_basis = v.transpose() * c.c * v;
  Matrix projected = Matrix::Zero(d, d);
  for (const auto& p : labeling.multiplets) {
    for (const auto& q : labeling.multiplets) {
      if (p.twice_j != q.twice_j) continue;
      Complex avg = 0.0;
      for (Index t = 0; t < p.size(); ++t) avg += in_basis(p.first_column + t, q.first_column + t);
      avg /= static_cast<double>(p.size());
      for (Index t = 0; t < p.size(); ++t) projected(p.first_column + t, q.first_column + t) = avg;
    }
  }
  SpinZeroProjection out;
  out.c0 = CoefficientMatrix{v * projected * v.transpose()};
  out.norm = out.c0.c.norm();
  return out;
}

namespace {

// (O (x) I + I (x) O) acting on the reshaped state d.
Matrix apply_doubled(const Matrix& o, const Matrix& d) { return o * d + d * o.transpose(); }

}  // namespace

Vector apply_total_spin_squared(const Vector& psi, const SiteList& sites) {
  const Index d = sites.dim();
  const Matrix state = reshape_state(psi, d);
  Matrix out = Matrix::Zero(d, d);
  for (Component a : {Component::X, Component::Y, Component::Z}) {
    const Matrix s = total_component(sites, a).matrix();
    out += apply_doubled(s, apply_doubled(s, state));
  }
  return flatten_state(out);
}

SpinResolvedState total_spin(const Vector& psi, const SiteList& sites) {
  const Index d = sites.dim();
  const Matrix state = reshape_state(psi, d);
  SpinResolvedState out;
  const Matrix s3 = total_component(sites, Component::Z).matrix();
  out.s3_expectation = psi.dot(flatten_state(apply_doubled(s3, state))).real();
  const Vector s2psi = apply_total_spin_squared(psi, sites);
  out.s_squared_expectation = std::max(0.0, psi.dot(s2psi).real());
  out.s_squared_variance =
      std::max(0.0, s2psi.squaredNorm() - out.s_squared_expectation * out.s_squared_expectation);
  const double j = 0.5 * (std::sqrt(1.0 + 4.0 * out.s_squared_expectation) - 1.0);
  const int twice_j = static_cast<int>(std::lround(2.0 * j));
  const double jj = 0.5 * twice_j;
  if (std::abs(jj * (jj + 1.0) - out.s_squared_expectation) <= kSharpSpinTol &&
      out.s_squared_variance <= kSharpSpinTol) {
    out.sharp_twice_spin = twice_j;
  }
  return out;
}

}  // namespace reflectspin
