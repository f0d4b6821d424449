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

#include "ntn/csv.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ntn
{

/// Environment variable naming a directory whose CSV files replace the
/// embedded tables of the same name.
inline constexpr const char* kAssetDirEnv = "NTN_ASSET_DIR";

/// Named set of table assets (los_probability.csv, sf_cl.csv, ...).
///
/// The library carries a compiled-in copy of every asset under data/. A
/// directory override only needs to contain the files it changes.
class AssetStore
{
  public:
    static AssetStore embedded();
    static AssetStore with_overrides(const std::filesystem::path& dir);
    /// Embedded assets, overridden by $NTN_ASSET_DIR when set.
    static AssetStore from_environment();

    CsvTable table(const std::string& name) const;
    const std::string& text(const std::string& name) const;
    std::vector<std::string> names() const;
    /// "embedded" or the path a table was loaded from.
    std::string origin(const std::string& name) const;

  private:
    std::map<std::string, std::string> m_text;
    std::map<std::string, std::string> m_origin;
};

namespace detail
{
const std::map<std::string, std::string>& embedded_assets();
const std::string& default_config_text();
} // namespace detail

} // namespace ntn
