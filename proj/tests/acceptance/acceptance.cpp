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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Models come from the top level of the
// regression corpus.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reflectspin/coeff_matrix.hpp"
#include "reflectspin/ground_state.hpp"
#include "reflectspin/model_io.hpp"
#include "reflectspin/report.hpp"
#include "reflectspin/spin_resolution.hpp"
#include "reflectspin/verification.hpp"

using namespace reflectspin;

namespace {

struct Loaded {
  ModelFile file;
  AssembledSystem sys;
};

std::vector<Loaded> load_corpus() {
  std::vector<Loaded> out;
  for (const auto& p : model_paths(CORPUS_DIR)) {
    ModelFile f = load_model(p);
    AssembledSystem sys = assemble(f.spec);
    out.push_back({std::move(f), std::move(sys)});
  }
  return out;
}

// Models the reflection-positivity theorems apply to.
bool eligible(const Loaded& m) { return reflection_check(m.sys); }

std::vector<int> twice_spins(const SiteList& sites) {
  std::vector<int> out;
  for (const auto& s : sites.spins()) out.push_back(s.twice_s());
  return out;
}

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {}

  void require(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
  }
  void worst(double value) { worst_ = std::max(worst_, value); }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool finish(double seconds, double budget) {
    if (budget > 0 && seconds >= budget) {
      require(false, "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(budget) + " s");
    }
    std::ostringstream line;
    line << (pass_ ? "PASS" : "FAIL") << "  " << label_ << "  [" << seconds << " s";
    if (worst_ >= 0) line << ", worst " << worst_;
    line << "]";
    if (!notes_.empty()) line << "  " << notes_;
    if (!pass_) line << "  <- " << first_failure_;
    std::printf("%s\n", line.str().c_str());
    return pass_;
  }

 private:
  std::string label_;
  bool pass_ = true;
  double worst_ = -1;
  std::string first_failure_;
  std::string notes_;
};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CoefficientMatrix random_c(std::mt19937_64& rng, Index d) {
  return CoefficientMatrix{oracle::random_matrix(rng, d, d)}.normalized();
}

bool criterion_energy_identity(const std::vector<Loaded>& corpus) {
  Criterion c("1 energy expression matches direct expectation (>=100 samples/model, tol 1e-10, <10 s)");
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  int checked = 0;
  for (const auto& m : corpus) {
    // The identity relies on the right copy being the reflected left copy.
    if (!eligible(m)) continue;
    ++checked;
    for (int n = 0; n < 100; ++n) {
      Matrix cm = oracle::random_matrix(rng, m.sys.subsystem_dim(), m.sys.subsystem_dim());
      if (n % 4 == 3) cm = cm.col(0) * cm.row(1);
      const CoefficientMatrix cc = CoefficientMatrix{cm}.normalized();
      // Independent route: full state, full Hamiltonian.
      const Vector psi = coeff_to_state(cc, m.sys.U);
      const double direct = psi.dot(m.sys.H_full.matrix() * psi).real();
      const double dev = std::abs(energy_expression(cc, m.sys) - direct);
      c.worst(dev);
      c.require(dev <= 1e-10, m.file.name + ": deviation " + std::to_string(dev));
    }
  }
  c.note(std::to_string(checked) + " models");
  return c.finish(elapsed(t0), 10.0);
}

bool criterion_trace_inequality() {
  Criterion c("2 trace inequality on 1000 random triples, dims 2-8, equality case to 1e-12 (<5 s)");
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(202);
  int singular = 0;
  for (int n = 0; n < 1000; ++n) {
    const Index d = 2 + n % 7;
    Matrix cm = oracle::random_matrix(rng, d, d);
    if (n % 3 == 1) {
      cm = oracle::random_matrix(rng, d, 1) * oracle::random_matrix(rng, 1, d);
      ++singular;
    } else if (n % 3 == 2) {
      cm = oracle::random_matrix(rng, d, d - 1) * oracle::random_matrix(rng, d - 1, d);
      ++singular;
    }
    const Matrix mm = oracle::random_matrix(rng, d, d);
    const Matrix nn = oracle::random_matrix(rng, d, d);
    const TraceInequality t = trace_inequality_margin(cm, mm, nn);
    // Left side recomputed directly.
    const double lhs = std::abs((cm.adjoint() * mm * cm * nn.adjoint()).trace());
    c.require(std::abs(lhs - t.lhs) <= 1e-10 * std::max(1.0, lhs), "lhs mismatch");
    c.require(t.lhs <= t.rhs + 1e-10 * std::max(1.0, t.rhs), "violated at sample " + std::to_string(n));
  }
  double eq = 0.0;
  for (Index d = 2; d <= 8; ++d) {
    const Matrix h = oracle::random_hermitian(rng, d) / double(d);
    const TraceInequality t = trace_inequality_margin(Matrix::Identity(d, d), h, h);
    eq = std::max(eq, std::abs(t.lhs - t.rhs));
  }
  c.worst(eq);
  c.require(eq <= 1e-12, "equality case gap " + std::to_string(eq));
  c.note(std::to_string(singular) + " singular inputs");
  return c.finish(elapsed(t0), 5.0);
}

bool criterion_positive_ground_state(const std::vector<Loaded>& corpus) {
  Criterion c("3 positive ground state (min eig >= -1e-10, tr > 0, residual <= 1e-8; one pair E0 = -3/4 to 1e-12)");
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const auto& m : corpus) {
    if (!eligible(m)) continue;
    const GroundSpace g = solve(m.sys.H_full);
    const PositiveGroundState p = find_positive_ground_state(m.sys, g);
    c.worst(p.residual);
    c.require(p.min_eig >= -1e-10, m.file.name + ": min eig " + std::to_string(p.min_eig));
    c.require(p.trace > 0.0, m.file.name + ": trace not positive");
    c.require(p.residual <= 1e-8, m.file.name + ": residual " + std::to_string(p.residual));
    ++checked;
  }
  // Oracle for the single pair: the 4x4 matrix built from Pauli algebra.
  const Matrix h4 = oracle::doubled_hamiltonian({1}, {}, {{{0, 1.0}}});
  const double e_oracle = oracle::spectrum(h4)(0);
  for (const auto& m : corpus) {
    if (m.file.name != "one_pair") continue;
    const double e = solve(m.sys.H_full).E0;
    c.require(std::abs(e + 0.75) <= 1e-12 && std::abs(e_oracle + 0.75) <= 1e-12, "one_pair E0 " + std::to_string(e));
  }
  c.note(std::to_string(checked) + " models");
  return c.finish(elapsed(t0), 0);
}

bool criterion_spin_zero(const std::vector<Loaded>& corpus) {
  Criterion c("4 spin-zero projection (sharp spin 0, residual <= 1e-8, oracle 1e-9, psd preserved)");
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(404);
  int checked = 0;
  for (const auto& m : corpus) {
    if (!eligible(m) || !m.sys.flags.spin_rotation_invariant) continue;
    ++checked;
    const MultipletLabeling& lab = cached_multiplet_basis(m.sys.sites);
    const GroundSpace g = solve(m.sys.H_full);
    const PositiveGroundState p = find_positive_ground_state(m.sys, g);
    const SpinZeroProjection proj = project_spin_zero(p.c_L, lab);
    c.require(proj.norm > 1e-12, m.file.name + ": projection vanished");
    const CoefficientMatrix c0 = proj.c0.normalized();
    const Vector psi0 = coeff_to_state(c0, m.sys.U);
    const SpinResolvedState s = total_spin(psi0, m.sys.sites);
    c.require(s.s_squared_variance <= 1e-9 && s.sharp_twice_spin && *s.sharp_twice_spin == 0,
              m.file.name + ": spin not sharp zero");
    const double res = energy_residual(m.sys.H_full, psi0, g.E0);
    c.worst(res);
    c.require(res <= 1e-8, m.file.name + ": residual " + std::to_string(res));

    const Matrix p0 = oracle::spin_zero_projector(twice_spins(m.sys.sites));
    const Index d = m.sys.subsystem_dim();
    for (int n = 0; n < 100; ++n) {
      const CoefficientMatrix cr = random_c(rng, d);
      const SpinZeroProjection pr = project_spin_zero(cr, lab);
      // Raw projected matrix mapped back to a state without normalizing.
      const Vector got = flatten_state(pr.c0.c * m.sys.U.matrix().transpose());
      const double dev = (got - p0 * coeff_to_state(cr, m.sys.U)).cwiseAbs().maxCoeff();
      c.require(dev <= 1e-9, m.file.name + ": oracle deviation " + std::to_string(dev));

      const Matrix psd = oracle::random_psd(rng, d, 1 + n % d);
      const double mn = min_hermitian_eigenvalue(project_spin_zero(CoefficientMatrix{psd}, lab).c0.c);
      c.require(mn >= -1e-10 * std::max(1.0, psd.norm()), m.file.name + ": psd lost, min eig " + std::to_string(mn));
    }
  }
  c.note(std::to_string(checked) + " models");
  return c.finish(elapsed(t0), 0);
}

bool criterion_ice_rule(const std::vector<Loaded>& corpus) {
  Criterion c("5 ice rule on every ground vector and crossing set (|<S_A^a (x) I + I (x) S_A^a>| <= 1e-9)");
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const auto& m : corpus) {
    if (!eligible(m)) continue;
    if (!m.sys.flags.h_equals_h_tilde && !m.sys.flags.h_real_symmetric) continue;
    ++checked;
    const GroundSpace g = solve(m.sys.H_full);
    std::vector<Component> comps{Component::X, Component::Z};
    if (m.sys.flags.spin_rotation_invariant) comps.push_back(Component::Y);
    for (std::size_t a = 0; a < m.sys.crossings.size(); ++a) {
      for (Component comp : comps) {
        for (const Vector& v : g.vectors) {
          const double e = std::abs(ice_rule_expectation(v, m.sys, a, comp));
          c.worst(e);
          c.require(e <= 1e-9, m.file.name + ": expectation " + std::to_string(e));
        }
        // Operator form covers every vector in the ground space at once.
        const double r = ice_rule_residual(g, m.sys, a, comp);
        c.worst(r);
        c.require(r <= 1e-9, m.file.name + ": ground-space residual " + std::to_string(r));
      }
    }
  }
  c.note(std::to_string(checked) + " models");
  return c.finish(elapsed(t0), 0);
}

bool criterion_eb_bound(const std::vector<Loaded>& corpus) {
  Criterion c("6 E_b - E0 >= -1e-9 max(1,|E0|) on a 21-point grid in [-2,2]; one pair E_{b=1} = -1/4 to 1e-12");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> grid = uniform_grid(-2.0, 2.0, 21);
  double worst_violation = 0.0;
  int checked = 0;
  for (const auto& m : corpus) {
    if (!eligible(m)) continue;
    ++checked;
    for (std::size_t a = 0; a < m.sys.crossings.size(); ++a) {
      const PerturbationReport r = verify_eb_bound(m.sys, a, grid);
      const double thr = -1e-9 * std::max(1.0, std::abs(r.E0));
      worst_violation = std::min(worst_violation, r.min_margin);
      c.require(r.E_b.size() == 21, "grid size");
      c.require(r.min_margin >= thr, m.file.name + ": margin " + std::to_string(r.min_margin));
    }
  }
  const Matrix h4 = oracle::doubled_hamiltonian({1}, {}, {{{0, 1.0}}});
  const Matrix sz = oracle::site_op({1, 1}, 0, 2) + oracle::site_op({1, 1}, 1, 2);
  const double e_oracle = oracle::spectrum(h4 - sz + 0.5 * Matrix::Identity(4, 4))(0);
  for (const auto& m : corpus) {
    if (m.file.name != "one_pair") continue;
    const double e = ground_energy(perturbed_hamiltonian(m.sys, 0, 1.0));
    c.require(std::abs(e + 0.25) <= 1e-12 && std::abs(e_oracle + 0.25) <= 1e-12,
              "one_pair E_b(1) " + std::to_string(e));
  }
  c.note(std::to_string(checked) + " models, most negative margin " + std::to_string(worst_violation));
  return c.finish(elapsed(t0), 0);
}

bool criterion_multiplets() {
  Criterion c("7 multiplet counts match Clebsch-Gordan; tilde phase identity to 1e-10 on every column");
  const auto t0 = std::chrono::steady_clock::now();
  using Counts = std::vector<std::pair<int, std::size_t>>;
  const std::vector<std::pair<std::vector<int>, Counts>> cases{
      {{1, 1}, {{0, 1}, {2, 1}}},
      {{1, 1, 1}, {{1, 2}, {3, 1}}},
      {{2}, {{2, 1}}},
  };
  for (const auto& [spins, expected] : cases) {
    const SiteList sites = SiteList::from_twice_s(spins);
    const MultipletLabeling lab = multiplet_basis(sites);
    Counts got = lab.counts();
    std::sort(got.begin(), got.end());
    c.require(got == expected, "counts differ");
    const Matrix v = lab.V.cast<Complex>();
    const Matrix uv = tilde_unitary(sites).matrix() * v;
    for (const Multiplet& mu : lab.multiplets) {
      for (Index r = 0; r < mu.size(); ++r) {
        // Column r has m = j - r; its partner m' = -m sits at column size-1-r.
        // (-1)^(j-m) = (-1)^r.
        const double phase = r % 2 == 0 ? 1.0 : -1.0;
        const Vector want = phase * v.col(mu.first_column + mu.size() - 1 - r);
        const double dev = (uv.col(mu.first_column + r) - want).cwiseAbs().maxCoeff();
        c.worst(dev);
        c.require(dev <= 1e-10, "phase identity deviation " + std::to_string(dev));
      }
    }
  }
  return c.finish(elapsed(t0), 0);
}

bool criterion_end_to_end() {
  Criterion c("8 full corpus end to end (exit 0, < 60 s), asymmetric model fails reflection_check");
  const auto t0 = std::chrono::steady_clock::now();
  const auto paths = model_paths(CORPUS_DIR);
  Index largest = 0;
  for (const auto& p : paths) {
    const ModelFile f = load_model(p);
    largest = std::max(largest, f.spec.sites.dim() * f.spec.sites.dim());
  }
  c.require(largest <= 4096, "largest model exceeds 4096");
  const VerificationReport report = run_corpus(paths, RunOptions{});
  c.require(report.exit_code() == 0, summary_line(report));
  bool negative_seen = false;
  for (const auto& m : report.models) {
    if (!m.reflection_symmetric || *m.reflection_symmetric) continue;
    for (const auto& ch : m.checks) {
      if (ch.name == "reflection_check" && ch.status == CheckStatus::ExpectedFailure) negative_seen = true;
    }
  }
  c.require(negative_seen, "no model failed reflection_check as declared");
#ifdef REFLECTSPIN_CLI
  const std::string cmd = std::string("\"") + REFLECTSPIN_CLI + "\" verify \"" + CORPUS_DIR + "\" > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  c.require(rc == 0, "cli exit status " + std::to_string(rc));
  c.note("cli exit 0");
#endif
  c.note(std::to_string(report.models.size()) + " models, largest full dim " + std::to_string(largest));
  return c.finish(elapsed(t0), 60.0);
}

}  // namespace

int main() {
  try {
    const std::vector<Loaded> corpus = load_corpus();
    std::vector<std::function<bool()>> criteria{
        [&] { return criterion_energy_identity(corpus); },
        [] { return criterion_trace_inequality(); },
        [&] { return criterion_positive_ground_state(corpus); },
        [&] { return criterion_spin_zero(corpus); },
        [&] { return criterion_ice_rule(corpus); },
        [&] { return criterion_eb_bound(corpus); },
        [] { return criterion_multiplets(); },
        [] { return criterion_end_to_end(); },
    };
    int failed = 0;
    for (auto& f : criteria) {
      try {
        if (!f()) ++failed;
      } catch (const std::exception& e) {
        std::printf("FAIL  criterion raised: %s\n", e.what());
        ++failed;
      }
    }
    std::printf("%s: %d of %zu criteria passed\n", failed ? "FAIL" : "PASS",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::printf("FAIL  could not load corpus: %s\n", e.what());
    return 1;
  }
}
