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

#include "ntn/channel_condition.hpp"

#include "ntn/error.hpp"

#include <algorithm>
#include <cmath>

namespace ntn
{

std::string_view
to_string(NtnScenario s)
{
    switch (s)
    {
    case NtnScenario::DenseUrban: return "DenseUrban";
    case NtnScenario::Urban: return "Urban";
    case NtnScenario::Suburban: return "Suburban";
    case NtnScenario::Rural: return "Rural";
    }
    return "?";
}

NtnScenario
parse_scenario(std::string_view name)
{
    for (const auto s : kAllScenarios)
    {
        if (to_string(s) == name)
        {
            return s;
        }
    }
    throw DomainError("unknown scenario '" + std::string(name) + "'");
}

std::string_view
to_string(LosCondition c)
{
    return c == LosCondition::Los ? "LOS" : "NLOS";
}

LosCondition
parse_condition(std::string_view name)
{
    if (name == "LOS")
    {
        return LosCondition::Los;
    }
    if (name == "NLOS")
    {
        return LosCondition::Nlos;
    }
    throw DomainError("unknown channel condition '" + std::string(name) + "'");
}

int
elevation_bucket(double elevation_deg)
{
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
    {
        throw DomainError("elevation must be in (0, 90] degrees, got " +
                          std::to_string(elevation_deg));
    }
    const int bucket = static_cast<int>(std::round(elevation_deg / 10.0)) * 10;
    return std::clamp(bucket, 10, 90);
}

namespace
{

int
bucket_index(int bucket_deg)
{
    if (bucket_deg < 10 || bucket_deg > 90 || bucket_deg % 10 != 0)
    {
        throw DomainError("not an elevation bucket: " + std::to_string(bucket_deg));
    }
    return bucket_deg / 10 - 1;
}

} // namespace

LosProbabilityTable
LosProbabilityTable::from_csv(const CsvTable& table)
{
    const auto c_scenario = table.column("scenario");
    const auto c_elevation = table.column("elevation_deg");
    const auto c_p = table.column("p_los");

    LosProbabilityTable out;
    std::array<std::array<bool, 9>, 4> seen{};
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        const auto s = static_cast<std::size_t>(parse_scenario(table.text(r, c_scenario)));
        const double elevation = table.number(r, c_elevation);
        const auto i = static_cast<std::size_t>(bucket_index(static_cast<int>(elevation)));
        const double p = table.number(r, c_p);
        if (!(p >= 0.0 && p <= 1.0))
        {
            throw ConfigError(table.source + ": p_los out of [0, 1] in row " + std::to_string(r + 1));
        }
        out.m_values[s][i] = p;
        seen[s][i] = true;
    }
    for (const auto s : kAllScenarios)
    {
        const auto si = static_cast<std::size_t>(s);
        for (std::size_t i = 0; i < 9; ++i)
        {
            if (!seen[si][i])
            {
                throw ConfigError(table.source + ": missing entry " + std::string(to_string(s)) +
                                  " at " + std::to_string((i + 1) * 10) + " deg");
            }
            if (i > 0 && out.m_values[si][i] < out.m_values[si][i - 1])
            {
                throw ConfigError(table.source + ": p_los decreases with elevation for " +
                                  std::string(to_string(s)));
            }
        }
    }
    return out;
}

LosProbabilityTable
LosProbabilityTable::from_assets(const AssetStore& assets)
{
    return from_csv(assets.table("los_probability.csv"));
}

const LosProbabilityTable&
LosProbabilityTable::standard()
{
    static const LosProbabilityTable table = from_assets(AssetStore::from_environment());
    return table;
}

double
LosProbabilityTable::at_bucket(NtnScenario s, int bucket_deg) const
{
    return m_values[static_cast<std::size_t>(s)][static_cast<std::size_t>(bucket_index(bucket_deg))];
}

double
LosProbabilityTable::probability(NtnScenario s, double elevation_deg) const
{
    return at_bucket(s, elevation_bucket(elevation_deg));
}

double
los_probability(NtnScenario s, double elevation_deg, const LosProbabilityTable& table)
{
    return table.probability(s, elevation_deg);
}

ChannelConditionModel::ChannelConditionModel(NtnScenario scenario, double validity_window_s,
                                             const LosProbabilityTable& table)
    : m_scenario(scenario),
      m_validity_window(validity_window_s),
      m_table(table)
{
    if (!(validity_window_s > 0.0))
    {
        throw DomainError("channel condition validity window must be positive");
    }
}

ChannelCondition
ChannelConditionModel::get_channel_condition(const LinkGeometry& geometry, double now, Rng& rng,
                                             LinkId link)
{
    if (const auto it = m_cache.find(link); it != m_cache.end() && it->second.is_valid_at(now))
    {
        return it->second;
    }
    ChannelCondition condition;
    condition.generated_at = now;
    condition.validity_window = m_validity_window;
    condition.generation = ++m_generation;
    if (m_forced)
    {
        condition.state = *m_forced;
    }
    else
    {
        const double p = m_table.probability(m_scenario, geometry.elevation);
        condition.state = rng.uniform() < p ? LosCondition::Los : LosCondition::Nlos;
    }
    m_cache[link] = condition;
    return condition;
}

} // namespace ntn
