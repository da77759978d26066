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

#ifndef REFLECTSPIN_VERIFICATION_HPP
#define REFLECTSPIN_VERIFICATION_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "reflectspin/model_builder.hpp"
#include "reflectspin/model_io.hpp"

namespace reflectspin {

enum class CheckStatus {
  Pass,
  Fail,
  // Not run because an earlier stage failed or the check does not apply.
  Skipped,
  // Ran outside the hypotheses of the statement it checks; never fails.
  Informational,
  // Failed exactly as the model file declares it must.
  ExpectedFailure,
};

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  // Residual, margin or deviation backing the verdict.
  std::optional<double> evidence;
  std::optional<double> threshold;
  // How evidence compares to threshold for a pass: "<=", ">=" or ">".
  std::string relation;
  std::string detail;
};

struct IceRuleEntry {
  std::size_t crossing;
  int component;
  double residual;
};

struct EbEntry {
  std::size_t crossing;
  double min_margin;
  bool within_hypothesis;
  std::vector<double> b_values;
  std::vector<double> E_b;
};

struct ModelReport {
  std::string name;
  std::optional<SystemFlags> flags;
  std::optional<bool> reflection_symmetric;
  std::optional<double> reflection_deviation;
  std::optional<double> E0;
  std::optional<std::size_t> multiplicity;
  // positive_ground_state
  std::optional<double> pgs_residual;
  std::optional<double> pgs_trace;
  std::optional<double> pgs_min_eig;
  // singlet
  std::optional<double> singlet_overlap;
  std::optional<double> sharp_spin;
  std::vector<IceRuleEntry> ice_rule;
  std::optional<double> eb_min_margin;
  std::vector<EbEntry> eb_bound;
  std::optional<double> energy_max_deviation;
  std::optional<double> energy_transpose_max_deviation;
  std::vector<CheckResult> checks;

  bool failed() const;
};

struct VerificationReport {
  std::vector<ModelReport> models;

  std::size_t count(CheckStatus s) const;
  // "model/check" for every failed check.
  std::vector<std::string> failed_checks() const;
  // 0 iff every executed check passed.
  int exit_code() const;
};

struct RunOptions {
  std::optional<double> degeneracy_tol;
  std::optional<std::vector<double>> b_grid;
  std::optional<Index> dimension_cap;
  std::uint64_t seed = 20260101;
  std::size_t energy_samples = 100;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// The full pipeline on one model. Module errors become failed checks.
ModelReport run_verification(const ModelFile& model, const RunOptions& options);

// Loads and verifies every model; load errors also become failed checks.
// Models run in parallel; the report keeps input order.
VerificationReport run_corpus(const std::vector<std::filesystem::path>& paths,
                              const RunOptions& options);

}  // namespace reflectspin

#endif  // REFLECTSPIN_VERIFICATION_HPP
