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

#ifndef REFLECTSPIN_MODEL_BUILDER_HPP
#define REFLECTSPIN_MODEL_BUILDER_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflectspin/operator.hpp"
#include "reflectspin/spin_algebra.hpp"

namespace reflectspin {

inline constexpr Index kDefaultDimensionCap = 4096;
inline constexpr double kInputHermiticityTol = 1e-12;
inline constexpr double kFlagTol = 1e-10;

struct SiteComponent {
  std::size_t site;
  Component component;
};

// coefficient * product of single-site components, applied in listed order.
struct CouplingTerm {
  std::vector<SiteComponent> factors;
  Complex coefficient{1.0, 0.0};

  std::string describe() const;
};

// coefficient * (s_i . s_k), expanded into its three component products.
std::vector<CouplingTerm> heisenberg_bond(std::size_t i, std::size_t k, double coupling);

struct CrossingMember {
  std::size_t site;
  double j;
};

// One crossing bond S_A . S_A' with S_A = sum_i j_i s_i.
struct CrossingSet {
  std::vector<CrossingMember> members;

  friend bool operator==(const CrossingSet& a, const CrossingSet& b);
};

struct SystemSpec {
  SiteList sites;
  std::vector<CouplingTerm> left_terms;
  // Used instead of (not in addition to) left_terms when present.
  std::optional<Matrix> explicit_h;
  std::vector<CrossingSet> crossings;
  // Terms on the doubled system, sites 0..n-1 left and n..2n-1 right,
  // added to H_full without mirroring. Only used to build deliberately
  // asymmetric models.
  std::vector<CouplingTerm> asymmetric_terms;
  Index dimension_cap = kDefaultDimensionCap;
};

struct SystemFlags {
  bool h_equals_h_tilde = false;
  bool h_real_symmetric = false;
  bool spin_rotation_invariant = false;
};

struct AssembledSystem {
  SiteList sites;
  std::vector<CrossingSet> crossings;
  Operator h;
  Operator h_tilde;
  // crossing_ops[A][a] is S_A^{(a)} for a = 1, 2, 3.
  std::vector<std::array<Operator, 3>> crossing_ops;
  Operator U;
  Operator H_full;
  SystemFlags flags;

  Index subsystem_dim() const { return h.dim(); }
};

// Throws CapacityError when D^2 exceeds the cap. Does not allocate.
void check_capacity(const SiteList& sites, Index dimension_cap);

// Checks every SystemSpec invariant without forming H_full. Throws
// CapacityError or ValidationError.
void validate_spec(const SystemSpec& spec);

// Matrix of a list of terms on `sites`.
Operator build_terms(const std::vector<CouplingTerm>& terms, const SiteList& sites);

// S_A^{(a)} = sum_{i in A} j_i s_i^{(a)}.
Operator crossing_operator(const CrossingSet& set, Component a, const SiteList& sites);

// H_full = h (x) I + I (x) U h U^T + sum_A sum_a S_A^(a) (x) S_A^(a), in the
// plain product basis on both factors.
AssembledSystem assemble(const SystemSpec& spec);

// Frobenius norm of W H W^dagger - H with W = SWAP (U (x) U).
double reflection_deviation(const Operator& H_full, const Operator& U);
bool reflection_check(const AssembledSystem& sys);

// SWAP on two equal tensor factors of dimension d.
Matrix swap_operator(Index d);

}  // namespace reflectspin

#endif  // REFLECTSPIN_MODEL_BUILDER_HPP
