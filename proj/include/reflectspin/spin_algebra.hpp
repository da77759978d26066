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

#ifndef REFLECTSPIN_SPIN_ALGEBRA_HPP
#define REFLECTSPIN_SPIN_ALGEBRA_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "reflectspin/operator.hpp"

namespace reflectspin {

// Intrinsic spin s stored as 2s so half-integers stay exact.
class SpinValue {
 public:
  // Throws InvalidInput for twice_s < 1.
  explicit SpinValue(int twice_s);

  int twice_s() const { return twice_s_; }
  double value() const { return 0.5 * twice_s_; }
  Index site_dim() const { return twice_s_ + 1; }

  friend bool operator==(SpinValue, SpinValue) = default;

 private:
  int twice_s_;
};

// Sites of one subsystem in canonical tensor order: site 0 is the most
// significant factor, and each site uses descending m.
class SiteList {
 public:
  SiteList() = default;
  explicit SiteList(std::vector<SpinValue> spins);
  static SiteList from_twice_s(std::initializer_list<int> twice_s);
  static SiteList from_twice_s(const std::vector<int>& twice_s);

  std::size_t size() const { return spins_.size(); }
  const SpinValue& operator[](std::size_t i) const { return spins_[i]; }
  const std::vector<SpinValue>& spins() const { return spins_; }
  // Product of the site dimensions.
  Index dim() const;

  friend bool operator==(const SiteList&, const SiteList&) = default;

 private:
  std::vector<SpinValue> spins_;
};

// Spin components: X, Y, Z are the 1, 2, 3 axes.
enum class Component { X, Y, Z, Plus, Minus };

std::string to_string(Component a);
// Inverse of to_string; also accepts "1", "2", "3".
Component component_from_string(const std::string& name);

struct SpinMatrices {
  Operator s3;
  Operator s_plus;
  Operator s_minus;
};

// Condon-Shortley matrices in the descending-m basis.
SpinMatrices spin_matrices(SpinValue s);

// Single-site matrix of the requested component.
Operator site_component(SpinValue s, Component a);

// I (x) ... (x) site_op (x) ... (x) I with site_op at position `site`.
Operator embed(const Operator& site_op, std::size_t site, const SiteList& sites);

// pi rotation about the 2-axis, tensored over sites:
// |s,m> -> (-1)^(s-m) |s,-m>. Real signed permutation.
Operator tilde_unitary(const SiteList& sites);

struct TotalSpinOps {
  Operator s3;
  Operator s_plus;
  Operator s_squared;
};

TotalSpinOps total_spin_ops(const SiteList& sites);

// Sum over sites of embed(site_component(s_i, a), i).
Operator total_component(const SiteList& sites, Component a);

}  // namespace reflectspin

#endif  // REFLECTSPIN_SPIN_ALGEBRA_HPP
