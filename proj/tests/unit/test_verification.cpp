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

#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "reflectspin/model_io.hpp"
#include "reflectspin/report.hpp"
#include "reflectspin/verification.hpp"

using namespace reflectspin;

namespace {

std::filesystem::path corpus(const std::string& name) {
  return std::filesystem::path(CORPUS_DIR) / (name + ".json");
}

const CheckResult* find(const ModelReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

RunOptions quick() {
  RunOptions o;
  o.energy_samples = 20;
  return o;
}

}  // namespace

TEST_CASE("single pair passes every check") {
  const ModelReport r = run_verification(load_model(corpus("one_pair")), quick());
  CHECK_FALSE(r.failed());
  REQUIRE(r.E0);
  CHECK(*r.E0 == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(*r.multiplicity == 1);
  CHECK(*r.reflection_symmetric);
  CHECK(*r.singlet_overlap == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  const CheckResult* c = find(r, "reflection_check");
  REQUIRE(c);
  CHECK(c->status == CheckStatus::Pass);
  CHECK(r.ice_rule.size() == 3);
}

TEST_CASE("frustrated systems pass for both signs of the bond") {
  for (const char* name : {"frustrated_2p2_af", "frustrated_2p2_ferro"}) {
    CAPTURE(name);
    const ModelReport r = run_verification(load_model(corpus(name)), quick());
    CHECK_FALSE(r.failed());
    CHECK(*r.pgs_min_eig >= -1e-10);
    CHECK(*r.eb_min_margin >= -1e-9);
  }
}

TEST_CASE("broken reflection symmetry") {
  ModelFile m = load_model(corpus("asymmetric_negative"));
  ModelReport r = run_verification(m, quick());
  CHECK_FALSE(r.failed());
  CHECK(find(r, "reflection_check")->status == CheckStatus::ExpectedFailure);
  CHECK(find(r, "ground_space")->status == CheckStatus::Skipped);

  m.expect_reflection_symmetric = true;
  r = run_verification(m, quick());
  CHECK(r.failed());
  CHECK(find(r, "reflection_check")->status == CheckStatus::Fail);
  VerificationReport vr;
  vr.models.push_back(r);
  CHECK(vr.exit_code() == 1);
  CHECK(vr.failed_checks() == std::vector<std::string>{"asymmetric_negative/reflection_check"});
  CHECK(summary_line(vr).find("reflection_check") != std::string::npos);
}

TEST_CASE("corpus run, report round trip and determinism") {
  const auto paths = model_paths(CORPUS_DIR);
  RunOptions o = quick();
  o.workers = 3;
  const VerificationReport a = run_corpus(paths, o);
  CHECK(a.exit_code() == 0);
  CHECK(a.count(CheckStatus::Fail) == 0);
  CHECK(a.models.size() == paths.size());

  o.workers = 1;
  const VerificationReport b = run_corpus(paths, o);
  CHECK(report_json_text(a) == report_json_text(b));
  CHECK(report_csv_text(a) == report_csv_text(b));

  const VerificationReport back = report_from_json(report_to_json(a));
  CHECK(report_json_text(back) == report_json_text(a));

  const std::string csv = report_csv_text(a);
  CHECK(csv.rfind("model,check,status,evidence,relation,threshold,detail\n", 0) == 0);
  CHECK(summary_line(a).rfind("OK:", 0) == 0);
}

TEST_CASE("a load failure is reported, not thrown") {
  const VerificationReport r = run_corpus({std::filesystem::path(CORPUS_DIR) / "missing.json"}, quick());
  CHECK(r.exit_code() == 1);
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0].checks.at(0).name == "load_model");
}

TEST_CASE("check status strings") {
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped, CheckStatus::Informational,
                        CheckStatus::ExpectedFailure})
    CHECK(check_status_from_string(to_string(s)) == s);
}
