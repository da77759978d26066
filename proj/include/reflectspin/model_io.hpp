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

#ifndef REFLECTSPIN_MODEL_IO_HPP
#define REFLECTSPIN_MODEL_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reflectspin/model_builder.hpp"

namespace reflectspin {

// Per-model settings; unset fields fall back to command-line or defaults.
struct ModelOptions {
  std::optional<double> degeneracy_tol;
  std::optional<std::vector<double>> b_grid;
  std::optional<Index> dimension_cap;
};

struct ModelFile {
  std::string name;
  std::string description;
  SystemSpec spec;
  ModelOptions options;
  // Negative test models declare that the reflection check must fail.
  bool expect_reflection_symmetric = true;
};

// Parses "lo:hi:n" into a uniform grid.
std::vector<double> parse_b_grid(const std::string& text);

// Throws ParseError with a field path such as "crossings[1].members[0].j",
// ValidationError for violated physical constraints, CapacityError when the
// dimension cap would be exceeded. `source` prefixes messages.
ModelFile parse_model(const nlohmann::json& doc, const std::string& source,
                      std::optional<Index> dimension_cap_override = std::nullopt);
ModelFile parse_model_text(const std::string& text, const std::string& source,
                           std::optional<Index> dimension_cap_override = std::nullopt);
ModelFile load_model(const std::filesystem::path& path,
                     std::optional<Index> dimension_cap_override = std::nullopt);

// Sorted *.json files of a directory, or the path itself for a file.
std::vector<std::filesystem::path> model_paths(const std::filesystem::path& path);

nlohmann::json model_to_json(const ModelFile& model);

}  // namespace reflectspin

#endif  // REFLECTSPIN_MODEL_IO_HPP
