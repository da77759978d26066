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

// reflectspin verify <model.json|corpus-dir> [options]

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "reflectspin/errors.hpp"
#include "reflectspin/model_io.hpp"
#include "reflectspin/report.hpp"
#include "reflectspin/verification.hpp"

int main(int argc, char** argv) {
  using namespace reflectspin;
  CLI::App app{"Exact-diagonalization checks for reflection-symmetric spin systems"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "Run the verification pipeline on models");
  std::string input;
  std::string report_path;
  std::string csv_path;
  std::optional<double> degeneracy_tol;
  std::string b_grid;
  std::optional<long long> dimension_cap;
  std::uint64_t seed = RunOptions{}.seed;
  unsigned workers = 0;
  verify->add_option("input", input, "Model JSON file or directory of model files")->required();
  verify->add_option("--report", report_path, "Write the JSON report here");
  verify->add_option("--csv", csv_path, "Write a CSV summary here");
  verify->add_option("--degeneracy-tol", degeneracy_tol, "Relative ground-space degeneracy tolerance")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--b-grid", b_grid, "Perturbation grid lo:hi:n (default -2:2:21)");
  verify->add_option("--dimension-cap", dimension_cap, "Largest allowed full dimension D^2")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--workers", workers, "Parallel model workers (0 = hardware threads)");

  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions options;
    options.degeneracy_tol = degeneracy_tol;
    if (!b_grid.empty()) options.b_grid = parse_b_grid(b_grid);
    if (dimension_cap) options.dimension_cap = static_cast<Index>(*dimension_cap);
    options.seed = seed;
    options.workers = workers;

    const VerificationReport report = run_corpus(model_paths(input), options);
    if (!report_path.empty()) emit_report(report, ReportFormat::Json, report_path);
    if (!csv_path.empty()) emit_report(report, ReportFormat::Csv, csv_path);
    if (report_path.empty() && csv_path.empty()) std::cout << report_json_text(report);
    std::cerr << summary_line(report) << '\n';
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
