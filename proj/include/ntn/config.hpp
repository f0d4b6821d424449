// SPDX-License-Identifier: Apache-2.0
//
// ntnchannel: non-terrestrial network channel model and link budget library
// Copyright (C) 2026 The ntnchannel contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "ntn/link_budget.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ntn
{

inline constexpr int kConfigSchemaVersion = 1;

/// Parsed run configuration: study cases, sweep parameters and seed.
///
/// The JSON schema is documented in README.md. Unknown keys are rejected so
/// that a misspelt field cannot silently fall back to a default.
struct Config
{
    int schema_version{kConfigSchemaVersion};
    std::uint64_t seed{0};
    std::vector<StudyCase> study_cases;
    SweepConfig sweeps;
    /// Directory whose CSV tables replace the embedded ones; relative paths
    /// are resolved against the configuration file's directory.
    std::optional<std::filesystem::path> asset_dir;
    /// FNV-1a 64 of the canonical (sorted-key) JSON serialization.
    std::uint64_t hash{0};
    std::string origin;
};

/// Throws ConfigReadError for malformed JSON and SchemaError for a document
/// that does not match the schema.
Config parse_config(std::string_view text, const std::string& origin,
                    const std::filesystem::path& base_dir = {});
/// Throws ConfigReadError when the file cannot be read.
Config load_config(const std::filesystem::path& path);
/// The configuration shipped with the library (config/ntn.json).
Config default_config();

std::uint64_t fnv1a64(std::string_view data);
/// 16 lowercase hex digits.
std::string hash_hex(std::uint64_t hash);

/// Tables for a configuration: the asset directory override if set, else the
/// embedded tables (themselves overridable by NTN_ASSET_DIR).
PropagationTables load_propagation_tables(const Config& cfg);

} // namespace ntn
