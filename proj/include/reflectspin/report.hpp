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

#ifndef REFLECTSPIN_REPORT_HPP
#define REFLECTSPIN_REPORT_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "reflectspin/verification.hpp"

namespace reflectspin {

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string report_json_text(const VerificationReport& report);
std::string report_csv_text(const VerificationReport& report);
// One line: "OK ..." or "FAIL ...", naming failed checks.
std::string summary_line(const VerificationReport& report);

enum class ReportFormat { Json, Csv };

// Throws IoError when the path cannot be written.
void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace reflectspin

#endif  // REFLECTSPIN_REPORT_HPP
