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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ntn
{

/// Minimal CSV reader for the shipped table assets.
///
/// Lines starting with '#' are collected as comments (provenance headers), the
/// first non-comment line is the header, blank lines are skipped. Fields are
/// plain comma separated values without quoting.
struct CsvTable
{
    std::string source;
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; throws ConfigError naming the source if absent.
    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::size_t col) const;
    const std::string& text(std::size_t row, std::size_t col) const;
};

CsvTable parse_csv(std::string_view text, std::string_view source);

} // namespace ntn
