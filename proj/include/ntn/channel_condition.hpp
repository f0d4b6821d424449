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

#include "ntn/assets.hpp"
#include "ntn/geodesy.hpp"
#include "ntn/random.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ntn
{

enum class NtnScenario
{
    DenseUrban,
    Urban,
    Suburban,
    Rural,
};

inline constexpr std::array<NtnScenario, 4> kAllScenarios{
    NtnScenario::DenseUrban, NtnScenario::Urban, NtnScenario::Suburban, NtnScenario::Rural};

std::string_view to_string(NtnScenario s);
/// Accepts the enumerator names ("DenseUrban", "Urban", ...); throws DomainError otherwise.
NtnScenario parse_scenario(std::string_view name);

enum class LosCondition
{
    Los,
    Nlos,
};

std::string_view to_string(LosCondition c);
LosCondition parse_condition(std::string_view name);

/// Elevation bucket used by every elevation-indexed table: the elevation
/// rounded to the nearest multiple of 10 degrees, clamped to [10, 90].
/// Throws DomainError unless 0 < elevation <= 90.
int elevation_bucket(double elevation_deg);

/// LOS probability per scenario at the nine elevation buckets.
class LosProbabilityTable
{
  public:
    /// Expects columns scenario,elevation_deg,p_los with every scenario and
    /// bucket present, values in [0, 1] and non-decreasing in elevation.
    static LosProbabilityTable from_csv(const CsvTable& table);
    static LosProbabilityTable from_assets(const AssetStore& assets);
    /// Table shipped with the library (or overridden through NTN_ASSET_DIR).
    static const LosProbabilityTable& standard();

    double probability(NtnScenario s, double elevation_deg) const;
    double at_bucket(NtnScenario s, int bucket_deg) const;

  private:
    std::array<std::array<double, 9>, 4> m_values{};
};

double los_probability(NtnScenario s, double elevation_deg,
                       const LosProbabilityTable& table = LosProbabilityTable::standard());

/// LOS/NLOS state of a link, valid for validity_window seconds after generated_at.
struct ChannelCondition
{
    LosCondition state{LosCondition::Los};
    double generated_at{0.0};
    double validity_window{0.1};
    /// Incremented on every fresh draw; lets dependent caches detect changes.
    std::uint64_t generation{0};

    bool is_valid_at(double now) const { return now - generated_at < validity_window; }
};

using LinkId = std::uint64_t;

/// Draws and caches the LOS/NLOS condition of each link.
///
/// A cached condition is returned while now - generated_at < validity_window,
/// otherwise one uniform variate is consumed from the supplied stream. Access to
/// one link must be serialized by the caller.
class ChannelConditionModel
{
  public:
    explicit ChannelConditionModel(NtnScenario scenario, double validity_window_s = 0.1,
                                   const LosProbabilityTable& table = LosProbabilityTable::standard());

    NtnScenario scenario() const { return m_scenario; }
    double validity_window() const { return m_validity_window; }

    /// Every fresh draw returns this state instead of sampling (calibration pins LOS).
    void force_condition(std::optional<LosCondition> condition) { m_forced = condition; }

    ChannelCondition get_channel_condition(const LinkGeometry& geometry, double now, Rng& rng,
                                           LinkId link = 0);

    void clear() { m_cache.clear(); }

  private:
    NtnScenario m_scenario;
    double m_validity_window;
    LosProbabilityTable m_table;
    std::optional<LosCondition> m_forced;
    std::uint64_t m_generation{0};
    std::map<LinkId, ChannelCondition> m_cache;
};

} // namespace ntn
