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

#include "reflectspin/spin_algebra.hpp"

#include <cmath>
#include <utility>

#include "reflectspin/errors.hpp"

namespace reflectspin {

SpinValue::SpinValue(int twice_s) : twice_s_(twice_s) {
  if (twice_s < 1) {
    throw InvalidInput("spin must satisfy 2s >= 1, got 2s = " + std::to_string(twice_s));
  }
}

SiteList::SiteList(std::vector<SpinValue> spins) : spins_(std::move(spins)) {
  if (spins_.empty()) throw InvalidInput("site list must contain at least one site");
}

SiteList SiteList::from_twice_s(std::initializer_list<int> twice_s) {
  return from_twice_s(std::vector<int>(twice_s));
}

SiteList SiteList::from_twice_s(const std::vector<int>& twice_s) {
  std::vector<SpinValue> spins;
  spins.reserve(twice_s.size());
  for (int t : twice_s) spins.emplace_back(t);
  return SiteList(std::move(spins));
}

Index SiteList::dim() const {
  Index d = 1;
  for (const auto& s : spins_) d *= s.site_dim();
  return d;
}

std::string to_string(Component a) {
  switch (a) {
    case Component::X: return "1";
    case Component::Y: return "2";
    case Component::Z: return "3";
    case Component::Plus: return "+";
    case Component::Minus: return "-";
  }
  return "?";
}

Component component_from_string(const std::string& name) {
  if (name == "1" || name == "x") return Component::X;
  if (name == "2" || name == "y") return Component::Y;
  if (name == "3" || name == "z") return Component::Z;
  if (name == "+") return Component::Plus;
  if (name == "-") return Component::Minus;
  throw InvalidInput("unknown spin component '" + name + "' (expected 1, 2, 3, + or -)");
}

SpinMatrices spin_matrices(SpinValue s) {
  const Index d = s.site_dim();
  const double sv = s.value();
  Matrix s3 = Matrix::Zero(d, d);
  Matrix sp = Matrix::Zero(d, d);
  for (Index r = 0; r < d; ++r) {
    const double m = sv - static_cast<double>(r);
    s3(r, r) = m;
    // <m+1| s+ |m> sits at (r-1, r).
    if (r > 0) sp(r - 1, r) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  Matrix sm = sp.adjoint();
  return {Operator(std::move(s3)), Operator(std::move(sp)), Operator(std::move(sm))};
}

Operator site_component(SpinValue s, Component a) {
  const auto mats = spin_matrices(s);
  switch (a) {
    case Component::X:
      return Operator(0.5 * (mats.s_plus.matrix() + mats.s_minus.matrix()));
    case Component::Y:
      return Operator(Complex(0.0, -0.5) * (mats.s_plus.matrix() - mats.s_minus.matrix()));
    case Component::Z: return mats.s3;
    case Component::Plus: return mats.s_plus;
    case Component::Minus: return mats.s_minus;
  }
  throw InvalidInput("unknown spin component");
}

Operator embed(const Operator& site_op, std::size_t site, const SiteList& sites) {
  if (site >= sites.size()) {
    throw InvalidInput("site index " + std::to_string(site) + " out of range for " +
                       std::to_string(sites.size()) + " sites");
  }
  if (site_op.dim() != sites[site].site_dim()) {
    throw InvalidInput("site operator has dimension " + std::to_string(site_op.dim()) +
                       " but site " + std::to_string(site) + " has dimension " +
                       std::to_string(sites[site].site_dim()));
  }
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Index d = sites[i].site_dim();
    out = kron(out, i == site ? site_op.matrix() : Matrix::Identity(d, d));
  }
  return Operator(std::move(out));
}

Operator tilde_unitary(const SiteList& sites) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& s : sites.spins()) {
    const Index d = s.site_dim();
    Matrix u = Matrix::Zero(d, d);
    for (Index col = 0; col < d; ++col) {
      // column index col carries m = s - col; s - m = col.
      u(d - 1 - col, col) = (col % 2 == 0) ? 1.0 : -1.0;
    }
    out = kron(out, u);
  }
  return Operator(std::move(out));
}

Operator total_component(const SiteList& sites, Component a) {
  Matrix sum = Matrix::Zero(sites.dim(), sites.dim());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    sum += embed(site_component(sites[i], a), i, sites).matrix();
  }
  return Operator(std::move(sum));
}

TotalSpinOps total_spin_ops(const SiteList& sites) {
  Operator s3 = total_component(sites, Component::Z);
  Operator sp = total_component(sites, Component::Plus);
  // S^2 = S3^2 + S3 + S- S+
  Matrix s2 = s3.matrix() * s3.matrix() + s3.matrix() + sp.matrix().adjoint() * sp.matrix();
  return {std::move(s3), std::move(sp), Operator(std::move(s2))};
}

}  // namespace reflectspin
