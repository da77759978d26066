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

#include "reflectspin/model_builder.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "reflectspin/errors.hpp"

namespace reflectspin {

namespace {

double scale_of(const Matrix& m) { return std::max(1.0, m.norm()); }

bool commutes(const Matrix& a, const Matrix& b, double tol) {
  return (a * b - b * a).norm() <= tol * std::max(scale_of(a), scale_of(b));
}

constexpr std::array<Component, 3> kAxes{Component::X, Component::Y, Component::Z};

}  // namespace

std::string CouplingTerm::describe() const {
  std::ostringstream out;
  out << "(" << coefficient.real();
  if (coefficient.imag() != 0.0) out << (coefficient.imag() < 0 ? "-" : "+") << std::abs(coefficient.imag()) << "i";
  out << ")";
  for (const auto& f : factors) out << " s" << f.site << "^" << to_string(f.component);
  return out.str();
}

std::vector<CouplingTerm> heisenberg_bond(std::size_t i, std::size_t k, double coupling) {
  std::vector<CouplingTerm> terms;
  for (Component a : kAxes) terms.push_back({{{i, a}, {k, a}}, Complex(coupling, 0.0)});
  return terms;
}

bool operator==(const CrossingSet& a, const CrossingSet& b) {
  if (a.members.size() != b.members.size()) return false;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (a.members[i].site != b.members[i].site || a.members[i].j != b.members[i].j) return false;
  }
  return true;
}

void check_capacity(const SiteList& sites, Index dimension_cap) {
  // Overflow-safe accumulation of D^2.
  long double full = 1.0L;
  for (const auto& s : sites.spins()) full *= static_cast<long double>(s.site_dim()) * s.site_dim();
  if (full > static_cast<long double>(dimension_cap)) {
    std::ostringstream msg;
    msg << "full dimension " << static_cast<double>(full) << " exceeds dimension cap "
        << dimension_cap;
    throw CapacityError(msg.str());
  }
}

Operator build_terms(const std::vector<CouplingTerm>& terms, const SiteList& sites) {
  const Index d = sites.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& term : terms) {
    Matrix prod = Matrix::Identity(d, d);
    for (const auto& f : term.factors) {
      if (f.site >= sites.size()) {
        throw ValidationError("term " + term.describe() + " references site " +
                              std::to_string(f.site) + " but the system has " +
                              std::to_string(sites.size()) + " sites");
      }
      prod = prod * embed(site_component(sites[f.site], f.component), f.site, sites).matrix();
    }
    sum += term.coefficient * prod;
  }
  return Operator(std::move(sum));
}

Operator crossing_operator(const CrossingSet& set, Component a, const SiteList& sites) {
  Matrix sum = Matrix::Zero(sites.dim(), sites.dim());
  for (const auto& m : set.members) {
    sum += m.j * embed(site_component(sites[m.site], a), m.site, sites).matrix();
  }
  return Operator(std::move(sum));
}

namespace {

void validate_crossings(const SystemSpec& spec) {
  if (spec.crossings.empty()) throw ValidationError("system needs at least one crossing set");
  for (std::size_t c = 0; c < spec.crossings.size(); ++c) {
    const auto& set = spec.crossings[c];
    if (set.members.empty()) {
      throw ValidationError("crossing set " + std::to_string(c) + " has no members");
    }
    std::set<std::size_t> seen;
    for (const auto& m : set.members) {
      if (m.site >= spec.sites.size()) {
        throw ValidationError("crossing set " + std::to_string(c) + " references site " +
                              std::to_string(m.site) + " out of range");
      }
      if (!seen.insert(m.site).second) {
        throw ValidationError("crossing set " + std::to_string(c) + " lists site " +
                              std::to_string(m.site) + " twice");
      }
      if (!std::isfinite(m.j)) {
        throw ValidationError("crossing set " + std::to_string(c) +
                              " has a non-finite coefficient; j_i must be finite real numbers");
      }
    }
  }
}

Operator validated_h(const SystemSpec& spec) {
  const Index d = spec.sites.dim();
  if (spec.explicit_h) {
    const Matrix& m = *spec.explicit_h;
    if (m.rows() != d || m.cols() != d) {
      throw ValidationError("explicit h has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(d) + "x" +
                            std::to_string(d));
    }
    Operator h(m);
    if (!h.is_hermitian(kInputHermiticityTol)) {
      throw ValidationError("explicit h is not Hermitian (max |h - h^dagger| = " +
                            std::to_string(max_abs(m - m.adjoint())) + ")");
    }
    return h;
  }
  Operator h = build_terms(spec.left_terms, spec.sites);
  if (!h.is_hermitian(kInputHermiticityTol)) {
    std::ostringstream msg;
    msg << "left Hamiltonian h is not Hermitian (max |h - h^dagger| = "
        << max_abs(h.matrix() - h.matrix().adjoint()) << "); non-Hermitian terms:";
    for (std::size_t t = 0; t < spec.left_terms.size(); ++t) {
      Operator single = build_terms({spec.left_terms[t]}, spec.sites);
      if (!single.is_hermitian(kInputHermiticityTol)) {
        msg << " #" << t << " " << spec.left_terms[t].describe() << ";";
      }
    }
    throw ValidationError(msg.str());
  }
  return h;
}

}  // namespace

void validate_spec(const SystemSpec& spec) {
  check_capacity(spec.sites, spec.dimension_cap);
  validate_crossings(spec);
  (void)validated_h(spec);
  for (const auto& t : spec.asymmetric_terms) {
    for (const auto& f : t.factors) {
      if (f.site >= 2 * spec.sites.size()) {
        throw ValidationError("asymmetric term " + t.describe() + " references site " +
                              std::to_string(f.site) + " outside the doubled system");
      }
    }
  }
}

AssembledSystem assemble(const SystemSpec& spec) {
  check_capacity(spec.sites, spec.dimension_cap);
  validate_crossings(spec);

  AssembledSystem sys;
  sys.sites = spec.sites;
  sys.crossings = spec.crossings;
  sys.h = validated_h(spec);
  sys.U = tilde_unitary(spec.sites);

  const Matrix& u = sys.U.matrix();
  const Matrix& h = sys.h.matrix();
  sys.h_tilde = Operator(u * h * u.transpose());

  const Index d = spec.sites.dim();
  const Matrix id = Matrix::Identity(d, d);
  Matrix full = kron(h, id) + kron(id, sys.h_tilde.matrix());
  for (const auto& set : spec.crossings) {
    std::array<Operator, 3> ops{crossing_operator(set, Component::X, spec.sites),
                                crossing_operator(set, Component::Y, spec.sites),
                                crossing_operator(set, Component::Z, spec.sites)};
    for (const auto& op : ops) full += kron(op.matrix(), op.matrix());
    sys.crossing_ops.push_back(std::move(ops));
  }

  if (!spec.asymmetric_terms.empty()) {
    std::vector<SpinValue> doubled = spec.sites.spins();
    doubled.insert(doubled.end(), spec.sites.spins().begin(), spec.sites.spins().end());
    Operator extra = build_terms(spec.asymmetric_terms, SiteList(std::move(doubled)));
    if (!extra.is_hermitian(kInputHermiticityTol)) {
      throw ValidationError("asymmetric terms do not sum to a Hermitian operator");
    }
    full += extra.matrix();
  }
  sys.H_full = Operator(std::move(full));

  sys.flags.h_equals_h_tilde = (h - sys.h_tilde.matrix()).norm() <= kFlagTol * scale_of(h);
  sys.flags.h_real_symmetric = (h - h.transpose()).norm() <= kFlagTol * scale_of(h);

  bool invariant = true;
  for (Component a : kAxes) {
    const Matrix s = total_component(spec.sites, a).matrix();
    const Matrix total = kron(s, id) + kron(id, s);
    invariant = invariant && commutes(sys.H_full.matrix(), total, kFlagTol);
  }
  sys.flags.spin_rotation_invariant = invariant;
  return sys;
}

Matrix swap_operator(Index d) {
  Matrix p = Matrix::Zero(d * d, d * d);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) p(b * d + a, a * d + b) = 1.0;
  }
  return p;
}

double reflection_deviation(const Operator& H_full, const Operator& U) {
  const Index d = U.dim();
  if (H_full.dim() != d * d) {
    throw InvalidInput("reflection check needs H of dimension U.dim()^2");
  }
  const Matrix w = swap_operator(d) * kron(U.matrix(), U.matrix());
  const Matrix& h = H_full.matrix();
  return (w * h * w.adjoint() - h).norm();
}

bool reflection_check(const AssembledSystem& sys) {
  return reflection_deviation(sys.H_full, sys.U) <= kFlagTol * scale_of(sys.H_full.matrix());
}

}  // namespace reflectspin
