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

#include "reflectspin/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "reflectspin/coeff_matrix.hpp"
#include "reflectspin/errors.hpp"
#include "reflectspin/ground_state.hpp"
#include "reflectspin/spin_resolution.hpp"

namespace reflectspin {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Informational: return "informational";
    case CheckStatus::ExpectedFailure: return "expected_failure";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
  for (CheckStatus c : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped,
                        CheckStatus::Informational, CheckStatus::ExpectedFailure}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInput("unknown check status '" + s + "'");
}

bool ModelReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& m : models) {
    n += static_cast<std::size_t>(std::count_if(
        m.checks.begin(), m.checks.end(), [s](const CheckResult& c) { return c.status == s; }));
  }
  return n;
}

std::vector<std::string> VerificationReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& m : models) {
    for (const auto& c : m.checks) {
      if (c.status == CheckStatus::Fail) out.push_back(m.name + "/" + c.name);
    }
  }
  return out;
}

int VerificationReport::exit_code() const { return count(CheckStatus::Fail) == 0 ? 0 : 1; }

namespace {

constexpr double kEnergyIdentityTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kIceTol = 1e-9;
constexpr double kEbTol = 1e-9;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

class Recorder {
 public:
  explicit Recorder(ModelReport& report) : report_(report) {}

  void record(const std::string& name, double evidence, const std::string& relation,
              double threshold, bool asserted, const std::string& detail = {}) {
    bool ok = false;
    if (relation == "<=") ok = evidence <= threshold;
    else if (relation == ">=") ok = evidence >= threshold;
    else if (relation == ">") ok = evidence > threshold;
    CheckResult c{name, asserted ? (ok ? CheckStatus::Pass : CheckStatus::Fail)
                                 : CheckStatus::Informational,
                  evidence, threshold, relation, detail};
    if (!std::isfinite(evidence)) {
      c.evidence.reset();
      if (asserted) c.status = CheckStatus::Fail;
    }
    report_.checks.push_back(std::move(c));
  }

  void status(const std::string& name, CheckStatus s, const std::string& detail,
              std::optional<double> evidence = std::nullopt) {
    report_.checks.push_back({name, s, evidence, std::nullopt, "", detail});
  }

  void fail(const std::string& name, const std::exception& e) {
    status(name, CheckStatus::Fail, e.what());
  }

  void skip(std::initializer_list<const char*> names, const std::string& why) {
    for (const char* n : names) status(n, CheckStatus::Skipped, why);
  }

 private:
  ModelReport& report_;
};

CoefficientMatrix random_coefficients(std::mt19937_64& rng, Index d, std::size_t sample) {
  std::normal_distribution<double> gauss;
  auto draw = [&] { return Complex(gauss(rng), gauss(rng)); };
  Matrix c(d, d);
  if (sample % 4 == 3) {
    // Rank one.
    Vector x(d), y(d);
    for (Index i = 0; i < d; ++i) x(i) = draw();
    for (Index i = 0; i < d; ++i) y(i) = draw();
    c = x * y.transpose();
  } else {
    for (Index i = 0; i < d; ++i) {
      for (Index k = 0; k < d; ++k) c(i, k) = draw();
    }
  }
  return CoefficientMatrix{c}.normalized();
}

}  // namespace

ModelReport run_verification(const ModelFile& model, const RunOptions& options) {
  ModelReport report;
  report.name = model.name;
  Recorder rec(report);

  const double degeneracy_tol =
      options.degeneracy_tol.value_or(model.options.degeneracy_tol.value_or(kDefaultDegeneracyTol));
  const std::vector<double> grid =
      options.b_grid.value_or(model.options.b_grid.value_or(default_b_grid()));
  SystemSpec spec = model.spec;
  if (options.dimension_cap) spec.dimension_cap = *options.dimension_cap;

  AssembledSystem sys;
  try {
    sys = assemble(spec);
  } catch (const std::exception& e) {
    rec.fail("assemble", e);
    return report;
  }
  rec.record("assemble.hermitian", sys.H_full.hermiticity_defect(), "<=", kFlagTol, true);
  report.flags = sys.flags;

  const double h_scale = std::max(1.0, sys.H_full.matrix().norm());
  const auto downstream = {"ground_space", "energy_identity", "energy_transpose_invariance",
                           "positive_ground_state", "singlet_overlap", "spin_zero_projection",
                           "ice_rule", "eb_bound", "variational_chain"};

  // Reflection symmetry gates every theorem check.
  {
    const double dev = reflection_deviation(sys.H_full, sys.U);
    const bool symmetric = reflection_check(sys);
    report.reflection_symmetric = symmetric;
    report.reflection_deviation = dev;
    CheckResult c{"reflection_check", CheckStatus::Pass, dev, kFlagTol * h_scale, "<=", ""};
    if (symmetric != model.expect_reflection_symmetric) {
      c.status = CheckStatus::Fail;
      c.detail = symmetric ? "model declares broken reflection symmetry but H_full is symmetric"
                           : "H_full is not reflection symmetric";
    } else if (!symmetric) {
      c.status = CheckStatus::ExpectedFailure;
      c.detail = "H_full is not reflection symmetric, as the model declares";
    }
    report.checks.push_back(c);
    if (!symmetric) {
      rec.skip(downstream, "reflection symmetry broken");
      return report;
    }
  }

  GroundSpace ground;
  try {
    ground = solve(sys.H_full, degeneracy_tol);
  } catch (const std::exception& e) {
    rec.fail("ground_space", e);
    rec.skip({"energy_identity", "energy_transpose_invariance", "positive_ground_state",
              "singlet_overlap", "spin_zero_projection", "ice_rule", "eb_bound",
              "variational_chain"},
             "no ground space");
    return report;
  }
  report.E0 = ground.E0;
  report.multiplicity = ground.multiplicity();
  {
    const double spectral = std::max(std::abs(ground.spectrum(0)),
                                     std::abs(ground.spectrum(ground.spectrum.size() - 1)));
    double worst = 0.0;
    for (const auto& v : ground.vectors) {
      worst = std::max(worst, (sys.H_full.matrix() * v - ground.E0 * v).norm());
    }
    rec.record("ground_space", worst, "<=", 1e-8 * std::max(1.0, spectral), true,
               "max |H psi - E0 psi| over the ground basis");
  }

  try {
    std::mt19937_64 rng(options.seed ^ fnv1a(model.name));
    double dev = 0.0, tdev = 0.0;
    for (std::size_t s = 0; s < options.energy_samples; ++s) {
      const CoefficientMatrix c = random_coefficients(rng, sys.subsystem_dim(), s);
      const double e = energy_expression(c, sys);
      dev = std::max(dev, std::abs(e - direct_expectation(c, sys)));
      tdev = std::max(tdev, std::abs(e - energy_expression(CoefficientMatrix{c.c.transpose()}, sys)));
    }
    report.energy_max_deviation = dev;
    report.energy_transpose_max_deviation = tdev;
    const std::string n = std::to_string(options.energy_samples) + " random coefficient matrices";
    rec.record("energy_identity", dev, "<=", kEnergyIdentityTol, true, n);
    rec.record("energy_transpose_invariance", tdev, "<=", kEnergyIdentityTol, true, n);
  } catch (const std::exception& e) {
    rec.fail("energy_identity", e);
  }

  // Replacing c by c_L keeps the h terms only when tr(c_R^2 h) = tr(c_L^2 h),
  // which holds for real h. Complex h admits unique ground states with no
  // psd coefficient matrix, so those results are informational.
  const bool positivity = sys.flags.h_real_symmetric;
  const std::string pos_note = positivity ? "" : "outside hypothesis: h is not real";
  std::optional<PositiveGroundState> positive;
  try {
    positive = find_positive_ground_state(sys, ground);
    report.pgs_residual = positive->residual;
    report.pgs_trace = positive->trace;
    report.pgs_min_eig = positive->min_eig;
    rec.record("positive_ground_state.residual", positive->residual, "<=", kGroundResidualTol,
               positivity, pos_note);
    rec.record("positive_ground_state.psd", positive->min_eig, ">=", -kPsdTol, positivity,
               "minimum eigenvalue of c_L");
    rec.record("positive_ground_state.trace", positive->trace, ">", 0.0, positivity, pos_note);
  } catch (const VerificationFailure& e) {
    report.pgs_residual = e.best_residual();
    rec.status("positive_ground_state.residual",
               positivity ? CheckStatus::Fail : CheckStatus::Informational,
               positivity ? std::string(e.what()) : pos_note + "; " + e.what(), e.best_residual());
  } catch (const std::exception& e) {
    rec.fail("positive_ground_state.residual", e);
  }

  if (positive) {
    const double overlap = singlet_overlap(positive->c_L).real();
    report.singlet_overlap = overlap;
    rec.record("singlet_overlap", overlap, ">", 0.0, positivity,
               positivity ? "tr c_L = <Xi|psi>" : pos_note);
  } else {
    rec.skip({"singlet_overlap"}, "no positive ground state");
  }

  if (!sys.flags.spin_rotation_invariant) {
    rec.skip({"spin_zero_projection"}, "H_full is not spin-rotation invariant");
  } else if (!positive) {
    rec.skip({"spin_zero_projection"}, "no positive ground state");
  } else {
    try {
      const MultipletLabeling& labeling = cached_multiplet_basis(sys.sites);
      const SpinZeroProjection proj = project_spin_zero(positive->c_L, labeling);
      if (proj.norm <= kVanishTol) {
        rec.status("spin_zero_projection.sharp_spin", CheckStatus::Fail,
                   "spin-zero projection of c_L vanishes", proj.norm);
      } else {
        const CoefficientMatrix c0 = proj.c0.normalized();
        const Vector psi0 = coeff_to_state(c0, sys.U);
        const SpinResolvedState spin = total_spin(psi0, sys.sites);
        if (spin.sharp_twice_spin) report.sharp_spin = 0.5 * *spin.sharp_twice_spin;
        const double spread = std::max(spin.s_squared_expectation, spin.s_squared_variance);
        rec.record("spin_zero_projection.sharp_spin", spread, "<=", kSharpSpinTol, positivity,
                   "max(<S^2>, Var S^2) of the normalized projection");
        rec.record("spin_zero_projection.residual",
                   energy_residual(sys.H_full, psi0, ground.E0), "<=", kGroundResidualTol,
                   positivity, pos_note);
        rec.record("spin_zero_projection.psd", min_hermitian_eigenvalue(c0.c), ">=", -kPsdTol,
                   positivity, "minimum eigenvalue of c^0");
      }
    } catch (const std::exception& e) {
      rec.fail("spin_zero_projection.sharp_spin", e);
    }
  }

  const bool hypotheses = sys.flags.h_equals_h_tilde || sys.flags.h_real_symmetric;
  const std::string hyp_note = hypotheses ? "" : "outside hypothesis: h != h_tilde and h != h^T";
  for (std::size_t a_idx = 0; a_idx < sys.crossings.size(); ++a_idx) {
    for (int comp : {1, 2, 3}) {
      const Component a = comp == 1 ? Component::X : comp == 2 ? Component::Y : Component::Z;
      const std::string name = "ice_rule[" + std::to_string(a_idx) + "]." + std::to_string(comp);
      try {
        const double res = ice_rule_residual(ground, sys, a_idx, a);
        report.ice_rule.push_back({a_idx, comp, res});
        const bool asserted = hypotheses && (comp != 2 || sys.flags.spin_rotation_invariant);
        std::string note = hyp_note;
        if (hypotheses && !asserted) note = "component 2 needs spin-rotation invariance";
        rec.record(name, res, "<=", kIceTol, asserted, note);
      } catch (const std::exception& e) {
        rec.fail(name, e);
      }
    }
  }

  double overall = std::numeric_limits<double>::infinity();
  const double eb_threshold = -kEbTol * std::max(1.0, std::abs(ground.E0));
  for (std::size_t a_idx = 0; a_idx < sys.crossings.size(); ++a_idx) {
    const std::string suffix = "[" + std::to_string(a_idx) + "]";
    try {
      const PerturbationReport pr = verify_eb_bound(sys, a_idx, grid, ground.E0);
      overall = std::min(overall, pr.min_margin);
      report.eb_bound.push_back({a_idx, pr.min_margin, pr.within_hypothesis, pr.b_values, pr.E_b});
      rec.record("eb_bound" + suffix, pr.min_margin, ">=", eb_threshold, pr.within_hypothesis,
                 hyp_note);

      // <psi0|H(b)|psi0> >= E_b >= E0 = <psi0|H|psi0> for every ground vector.
      const Operator pair = crossing_pair_operator(sys, a_idx, Component::Z);
      double slack = std::numeric_limits<double>::infinity();
      for (const auto& v : ground.vectors) {
        const double e = v.dot(sys.H_full.matrix() * v).real();
        const double p = v.dot(pair.matrix() * v).real();
        for (std::size_t i = 0; i < pr.b_values.size(); ++i) {
          const double b = pr.b_values[i];
          const double hb = e - b * p + 0.5 * b * b;
          slack = std::min({slack, hb - pr.E_b[i], pr.E_b[i] - e});
        }
      }
      rec.record("variational_chain" + suffix, slack, ">=", eb_threshold, pr.within_hypothesis,
                 hyp_note);
    } catch (const std::exception& e) {
      rec.fail("eb_bound" + suffix, e);
    }
  }
  if (std::isfinite(overall)) report.eb_min_margin = overall;
  return report;
}

VerificationReport run_corpus(const std::vector<std::filesystem::path>& paths,
                              const RunOptions& options) {
  VerificationReport out;
  out.models.resize(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      try {
        const ModelFile model = load_model(paths[i], options.dimension_cap);
        out.models[i] = run_verification(model, options);
      } catch (const std::exception& e) {
        ModelReport r;
        r.name = paths[i].stem().string();
        r.checks.push_back({"load_model", CheckStatus::Fail, std::nullopt, std::nullopt, "", e.what()});
        out.models[i] = std::move(r);
      }
    }
  };
  unsigned n = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, paths.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace reflectspin
