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

#include "reflectspin/report.hpp"

#include <fstream>
#include <sstream>

#include "reflectspin/errors.hpp"

namespace reflectspin {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

json check_json(const CheckResult& c) {
  return {{"name", c.name},
          {"status", to_string(c.status)},
          {"evidence", opt(c.evidence)},
          {"threshold", opt(c.threshold)},
          {"relation", c.relation},
          {"detail", c.detail}};
}

json model_json(const ModelReport& m) {
  json j;
  j["name"] = m.name;
  if (m.flags) {
    j["flags"] = {{"h_equals_h_tilde", m.flags->h_equals_h_tilde},
                  {"h_real_symmetric", m.flags->h_real_symmetric},
                  {"spin_rotation_invariant", m.flags->spin_rotation_invariant}};
  } else {
    j["flags"] = nullptr;
  }
  j["reflection"] = {{"symmetric", opt(m.reflection_symmetric)},
                     {"deviation", opt(m.reflection_deviation)}};
  j["E0"] = opt(m.E0);
  j["multiplicity"] = opt(m.multiplicity);
  j["positive_ground_state"] = {{"residual", opt(m.pgs_residual)},
                                {"trace", opt(m.pgs_trace)},
                                {"min_eig", opt(m.pgs_min_eig)}};
  j["singlet"] = {{"overlap", opt(m.singlet_overlap)}, {"sharp_spin", opt(m.sharp_spin)}};
  json ice = json::array();
  for (const auto& e : m.ice_rule) {
    ice.push_back({{"crossing", e.crossing}, {"component", e.component}, {"residual", e.residual}});
  }
  j["ice_rule"] = ice;
  json per = json::array();
  for (const auto& e : m.eb_bound) {
    per.push_back({{"crossing", e.crossing},
                   {"min_margin", e.min_margin},
                   {"within_hypothesis", e.within_hypothesis},
                   {"b_values", e.b_values},
                   {"E_b", e.E_b}});
  }
  j["eb_bound"] = {{"min_margin", opt(m.eb_min_margin)}, {"per_crossing", per}};
  j["energy_identity"] = {{"max_deviation", opt(m.energy_max_deviation)},
                       {"transpose_max_deviation", opt(m.energy_transpose_max_deviation)}};
  json checks = json::array();
  for (const auto& c : m.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  return j;
}

ModelReport model_from_json(const json& j) {
  ModelReport m;
  m.name = j.at("name").get<std::string>();
  if (!j.at("flags").is_null()) {
    const json& f = j["flags"];
    m.flags = SystemFlags{f.at("h_equals_h_tilde").get<bool>(), f.at("h_real_symmetric").get<bool>(),
                          f.at("spin_rotation_invariant").get<bool>()};
  }
  m.reflection_symmetric = get_opt<bool>(j.at("reflection"), "symmetric");
  m.reflection_deviation = get_opt<double>(j["reflection"], "deviation");
  m.E0 = get_opt<double>(j, "E0");
  m.multiplicity = get_opt<std::size_t>(j, "multiplicity");
  const json& pgs = j.at("positive_ground_state");
  m.pgs_residual = get_opt<double>(pgs, "residual");
  m.pgs_trace = get_opt<double>(pgs, "trace");
  m.pgs_min_eig = get_opt<double>(pgs, "min_eig");
  m.singlet_overlap = get_opt<double>(j.at("singlet"), "overlap");
  m.sharp_spin = get_opt<double>(j["singlet"], "sharp_spin");
  for (const auto& e : j.at("ice_rule")) {
    m.ice_rule.push_back({e.at("crossing").get<std::size_t>(), e.at("component").get<int>(),
                          e.at("residual").get<double>()});
  }
  m.eb_min_margin = get_opt<double>(j.at("eb_bound"), "min_margin");
  for (const auto& e : j["eb_bound"].at("per_crossing")) {
    m.eb_bound.push_back({e.at("crossing").get<std::size_t>(), e.at("min_margin").get<double>(),
                          e.at("within_hypothesis").get<bool>(),
                          e.at("b_values").get<std::vector<double>>(),
                          e.at("E_b").get<std::vector<double>>()});
  }
  m.energy_max_deviation = get_opt<double>(j.at("energy_identity"), "max_deviation");
  m.energy_transpose_max_deviation = get_opt<double>(j["energy_identity"], "transpose_max_deviation");
  for (const auto& c : j.at("checks")) {
    m.checks.push_back({c.at("name").get<std::string>(),
                        check_status_from_string(c.at("status").get<std::string>()),
                        get_opt<double>(c, "evidence"), get_opt<double>(c, "threshold"),
                        c.at("relation").get<std::string>(), c.at("detail").get<std::string>()});
  }
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  out.precision(17);
  out << *v;
  return out.str();
}

}  // namespace

json report_to_json(const VerificationReport& report) {
  json models = json::array();
  for (const auto& m : report.models) models.push_back(model_json(m));
  json failed = report.failed_checks();
  return {{"tool", "reflectspin"},
          {"models", models},
          {"summary",
           {{"pass", report.count(CheckStatus::Pass)},
            {"fail", report.count(CheckStatus::Fail)},
            {"skipped", report.count(CheckStatus::Skipped)},
            {"informational", report.count(CheckStatus::Informational)},
            {"expected_failure", report.count(CheckStatus::ExpectedFailure)},
            {"failed_checks", failed},
            {"exit_code", report.exit_code()}}}};
}

VerificationReport report_from_json(const json& doc) {
  VerificationReport report;
  for (const auto& m : doc.at("models")) report.models.push_back(model_from_json(m));
  return report;
}

std::string report_json_text(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string report_csv_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "model,check,status,evidence,relation,threshold,detail\n";
  for (const auto& m : report.models) {
    for (const auto& c : m.checks) {
      out << csv_field(m.name) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ','
          << csv_number(c.evidence) << ',' << csv_field(c.relation) << ','
          << csv_number(c.threshold) << ',' << csv_field(c.detail) << '\n';
    }
  }
  return out.str();
}

std::string summary_line(const VerificationReport& report) {
  std::ostringstream out;
  const auto failed = report.failed_checks();
  out << (failed.empty() ? "OK" : "FAIL") << ": " << report.models.size() << " models, "
      << report.count(CheckStatus::Pass) << " passed, " << failed.size() << " failed, "
      << report.count(CheckStatus::Skipped) << " skipped, "
      << report.count(CheckStatus::Informational) << " informational, "
      << report.count(CheckStatus::ExpectedFailure) << " expected failures";
  if (!failed.empty()) {
    out << "; failed:";
    for (const auto& f : failed) out << ' ' << f;
  }
  return out.str();
}

void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write report to " + path.string());
  out << (format == ReportFormat::Json ? report_json_text(report) : report_csv_text(report));
  out.flush();
  if (!out) throw IoError("failed while writing report to " + path.string());
}

}  // namespace reflectspin
