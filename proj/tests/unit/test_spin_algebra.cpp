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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reflectspin/errors.hpp"
#include "reflectspin/model_builder.hpp"
#include "reflectspin/spin_algebra.hpp"

using namespace reflectspin;

namespace {

double op_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

const std::vector<std::vector<int>> kSiteLists = {{1}, {2}, {1, 1}, {1, 2}, {3}, {1, 1, 1}, {2, 1, 3}};

}  // namespace

TEST_CASE("spin-1/2 matrices") {
  const auto m = spin_matrices(SpinValue(1));
  Matrix s3(2, 2), sp(2, 2);
  s3 << 0.5, 0, 0, -0.5;
  sp << 0, 1, 0, 0;
  CHECK(max_abs(m.s3.matrix() - s3) == 0.0);
  CHECK(max_abs(m.s_plus.matrix() - sp) == 0.0);
  CHECK(max_abs(m.s_minus.matrix() - sp.adjoint()) == 0.0);
}

TEST_CASE("spin-1 matrices") {
  const auto m = spin_matrices(SpinValue(2));
  CHECK(m.s3.matrix().diagonal().real() == Eigen::Vector3d(1, 0, -1));
  CHECK(m.s_plus.matrix()(0, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.s_plus.matrix()(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.s_plus.matrix()(0, 2) == Complex(0.0));
}

TEST_CASE("ladder commutator and agreement with the component oracle") {
  for (int t = 1; t <= 7; ++t) {
    const auto m = spin_matrices(SpinValue(t));
    const Matrix comm = m.s_plus.matrix() * m.s_minus.matrix() - m.s_minus.matrix() * m.s_plus.matrix();
    CHECK(max_abs(comm - 2.0 * m.s3.matrix()) < 1e-14);
    const auto ref = oracle::spin(t);
    CHECK(max_abs(site_component(SpinValue(t), Component::X).matrix() - ref[0]) < 1e-14);
    CHECK(max_abs(site_component(SpinValue(t), Component::Y).matrix() - ref[1]) < 1e-14);
    CHECK(max_abs(site_component(SpinValue(t), Component::Z).matrix() - ref[2]) < 1e-14);
  }
}

TEST_CASE("embedding places the factor by site, site 0 most significant") {
  const auto sites = SiteList::from_twice_s({1, 1});
  const Operator s3 = spin_matrices(SpinValue(1)).s3;
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(max_abs(embed(s3, 1, sites).matrix() - kron(id, s3.matrix())) == 0.0);
  CHECK(max_abs(embed(s3, 0, sites).matrix() - kron(s3.matrix(), id)) == 0.0);
  const Matrix expected_site0 = Eigen::Vector4cd(0.5, 0.5, -0.5, -0.5).asDiagonal();
  CHECK(max_abs(embed(s3, 0, sites).matrix() - expected_site0) == 0.0);
}

TEST_CASE("embedded operators on distinct sites commute; embedding keeps Hermiticity and norm") {
  for (const auto& list : kSiteLists) {
    const auto sites = SiteList::from_twice_s(list);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const Operator x = site_component(sites[i], Component::X);
      const Operator ei = embed(x, i, sites);
      CHECK(ei.is_hermitian(0.0));
      CHECK(op_norm(ei.matrix()) == doctest::Approx(op_norm(x.matrix())).epsilon(1e-12));
      for (std::size_t k = i + 1; k < sites.size(); ++k) {
        const Operator ek = embed(site_component(sites[k], Component::Y), k, sites);
        CHECK(max_abs(ei.matrix() * ek.matrix() - ek.matrix() * ei.matrix()) == 0.0);
      }
    }
  }
}

TEST_CASE("embed rejects mismatched dimensions and sites") {
  const auto sites = SiteList::from_twice_s({1, 2});
  CHECK_THROWS_AS(embed(spin_matrices(SpinValue(1)).s3, 1, sites), InvalidInput);
  CHECK_THROWS_AS(embed(spin_matrices(SpinValue(1)).s3, 2, sites), InvalidInput);
  CHECK_THROWS_AS(SpinValue(0), InvalidInput);
  CHECK_THROWS_AS(SiteList(std::vector<SpinValue>{}), InvalidInput);
}

TEST_CASE("tilde rotation for one spin-1/2") {
  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK(max_abs(tilde_unitary(SiteList::from_twice_s({1})).matrix() - expected) == 0.0);
}

TEST_CASE("tilde rotation is real orthogonal and flips S3 and the ladders") {
  for (const auto& list : kSiteLists) {
    const auto sites = SiteList::from_twice_s(list);
    const Matrix u = tilde_unitary(sites).matrix();
    const Index d = sites.dim();
    const auto ops = total_spin_ops(sites);
    const Matrix sm = ops.s_plus.matrix().adjoint();
    CHECK(max_abs(u.imag()) == 0.0);
    CHECK(max_abs(u * u.transpose() - Matrix::Identity(d, d)) == 0.0);
    CHECK(max_abs(u * ops.s3.matrix() * u.transpose() + ops.s3.matrix()) < 1e-14);
    CHECK(max_abs(u * ops.s_plus.matrix() * u.transpose() + sm) < 1e-14);
    CHECK(max_abs(u * sm * u.transpose() + ops.s_plus.matrix()) < 1e-14);
  }
}

TEST_CASE("rotated crossing operators satisfy (U S U^T)^T = -S^dagger") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (const auto& list : kSiteLists) {
    const auto sites = SiteList::from_twice_s(list);
    CrossingSet set;
    for (std::size_t i = 0; i < sites.size(); ++i) set.members.push_back({i, coeff(rng)});
    const Matrix u = tilde_unitary(sites).matrix();
    for (Component a : {Component::X, Component::Y, Component::Z}) {
      const Matrix s = crossing_operator(set, a, sites).matrix();
      CHECK(max_abs((u * s * u.transpose()).transpose() + s.adjoint()) < 1e-13);
    }
  }
}

TEST_CASE("total spin operators") {
  const auto two = total_spin_ops(SiteList::from_twice_s({1, 1}));
  const Eigen::VectorXd ev = oracle::spectrum(two.s_squared.matrix());
  CHECK(ev(0) == doctest::Approx(0.0));
  for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(2.0));

  for (const auto& list : kSiteLists) {
    const auto ops = total_spin_ops(SiteList::from_twice_s(list));
    const Matrix& s2 = ops.s_squared.matrix();
    CHECK(max_abs(s2 * ops.s3.matrix() - ops.s3.matrix() * s2) < 1e-12);
  }

  const auto one = total_spin_ops(SiteList::from_twice_s({2}));
  CHECK(max_abs(one.s_squared.matrix() - 2.0 * Matrix::Identity(3, 3)) < 1e-14);
}
