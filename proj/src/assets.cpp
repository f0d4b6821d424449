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

#include "ntn/assets.hpp"

#include "ntn/error.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ntn
{

AssetStore
AssetStore::embedded()
{
    AssetStore store;
    for (const auto& [name, text] : detail::embedded_assets())
    {
        store.m_text[name] = text;
        store.m_origin[name] = "embedded";
    }
    return store;
}

AssetStore
AssetStore::with_overrides(const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
    {
        throw ConfigError("asset directory not found: " + dir.string());
    }
    AssetStore store = embedded();
    for (const auto& entry : fs::directory_iterator(dir))
    {
        if (!entry.is_regular_file() || entry.path().extension() != ".csv")
        {
            continue;
        }
        std::ifstream in(entry.path());
        if (!in)
        {
            throw ConfigError("cannot read asset: " + entry.path().string());
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const auto name = entry.path().filename().string();
        store.m_text[name] = buf.str();
        store.m_origin[name] = entry.path().string();
    }
    return store;
}

AssetStore
AssetStore::from_environment()
{
    if (const char* dir = std::getenv(kAssetDirEnv); dir != nullptr && *dir != '\0')
    {
        return with_overrides(dir);
    }
    return embedded();
}

const std::string&
AssetStore::text(const std::string& name) const
{
    const auto it = m_text.find(name);
    if (it == m_text.end())
    {
        throw ConfigError("unknown asset: " + name);
    }
    return it->second;
}

CsvTable
AssetStore::table(const std::string& name) const
{
    return parse_csv(text(name), name);
}

std::vector<std::string>
AssetStore::names() const
{
    std::vector<std::string> out;
    out.reserve(m_text.size());
    for (const auto& [name, text] : m_text)
    {
        out.push_back(name);
    }
    return out;
}

std::string
AssetStore::origin(const std::string& name) const
{
    const auto it = m_origin.find(name);
    return it == m_origin.end() ? std::string{} : it->second;
}

} // namespace ntn
