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

#include "ntn/propagation.hpp"

#include "ntn/constants.hpp"
#include "ntn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ntn
{

std::string_view
to_string(Band b)
{
    return b == Band::S ? "S" : "Ka";
}

Band
parse_band(std::string_view name)
{
    if (name == "S")
    {
        return Band::S;
    }
    if (name == "Ka")
    {
        return Band::Ka;
    }
    throw DomainError("unknown band '" + std::string(name) + "'");
}

Band
band_for_frequency(double frequency_ghz)
{
    return frequency_ghz < 6.0 ? Band::S : Band::Ka;
}

namespace
{

void
check_frequency(double frequency_ghz)
{
    if (!(frequency_ghz >= kMinFrequencyGhz && frequency_ghz <= kMaxFrequencyGhz))
    {
        throw DomainError("carrier frequency must be in [0.5, 100] GHz, got " +
                          std::to_string(frequency_ghz));
    }
}

void
check_elevation(double elevation_deg)
{
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
    {
        throw DomainError("elevation must be in (0, 90] degrees, got " +
                          std::to_string(elevation_deg));
    }
}

std::size_t
bucket_slot(int bucket_deg)
{
    if (bucket_deg < 10 || bucket_deg > 90 || bucket_deg % 10 != 0)
    {
        throw DomainError("not an elevation bucket: " + std::to_string(bucket_deg));
    }
    return static_cast<std::size_t>(bucket_deg / 10 - 1);
}

void
require_non_negative(double v, const std::string& what)
{
    if (!(v >= 0.0) || !std::isfinite(v))
    {
        throw ConfigError(what + ": value must be finite and non-negative");
    }
}

} // namespace

void
PropagationContext::validate() const
{
    check_frequency(carrier_ghz);
    check_elevation(elevation_deg);
}

PropagationTables
PropagationTables::from_assets(const AssetStore& assets)
{
    PropagationTables t;

    const auto sf = assets.table("sf_cl.csv");
    {
        const auto c_s = sf.column("scenario");
        const auto c_b = sf.column("band");
        const auto c_e = sf.column("elevation_deg");
        const auto c_los = sf.column("sf_los_db");
        const auto c_nlos = sf.column("sf_nlos_db");
        const auto c_cl = sf.column("cl_nlos_db");
        for (std::size_t r = 0; r < sf.rows.size(); ++r)
        {
            auto& e = t.m_sf_cl[static_cast<std::size_t>(parse_scenario(sf.text(r, c_s)))]
                               [static_cast<std::size_t>(parse_band(sf.text(r, c_b)))]
                               [bucket_slot(static_cast<int>(sf.number(r, c_e)))];
            e.sf_los = sf.number(r, c_los);
            e.sf_nlos = sf.number(r, c_nlos);
            e.cl_nlos = sf.number(r, c_cl);
            const auto where = sf.source + " row " + std::to_string(r + 1);
            require_non_negative(e.sf_los, where);
            require_non_negative(e.sf_nlos, where);
            require_non_negative(e.cl_nlos, where);
            e.present = true;
        }
    }

    const auto zen = assets.table("atmospheric_zenith.csv");
    {
        const auto c_f = zen.column("frequency_ghz");
        const auto c_a = zen.column("a_zenith_db");
        for (std::size_t r = 0; r < zen.rows.size(); ++r)
        {
            const double f = zen.number(r, c_f);
            const double a = zen.number(r, c_a);
            require_non_negative(a, zen.source + " row " + std::to_string(r + 1));
            if (!t.m_zenith.empty() && !(f > t.m_zenith.back().first))
            {
                throw ConfigError(zen.source + ": frequencies must be strictly increasing");
            }
            t.m_zenith.emplace_back(f, a);
        }
        if (t.m_zenith.empty())
        {
            throw ConfigError(zen.source + ": empty table");
        }
    }

    const auto tropo = assets.table("tropospheric_scintillation.csv");
    {
        const auto c_e = tropo.column("elevation_deg");
        const auto c_a = tropo.column("attenuation_db");
        std::array<bool, 9> seen{};
        for (std::size_t r = 0; r < tropo.rows.size(); ++r)
        {
            const auto i = bucket_slot(static_cast<int>(tropo.number(r, c_e)));
            t.m_troposphere[i] = tropo.number(r, c_a);
            require_non_negative(t.m_troposphere[i], tropo.source + " row " + std::to_string(r + 1));
            seen[i] = true;
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        {
            throw ConfigError(tropo.source + ": every elevation bucket 10..90 must be present");
        }
    }

    const auto iono = assets.table("ionospheric_scintillation.csv");
    {
        const auto c_p = iono.column("parameter");
        const auto c_v = iono.column("value");
        const std::map<std::string, double*> slots{
            {"p_fluc_4ghz_db", &t.m_p_fluc_4ghz_db},
            {"mid_latitude_min_deg", &t.m_mid_lat_min},
            {"mid_latitude_max_deg", &t.m_mid_lat_max},
            {"max_frequency_ghz", &t.m_iono_max_ghz},
        };
        for (std::size_t r = 0; r < iono.rows.size(); ++r)
        {
            const auto it = slots.find(iono.text(r, c_p));
            if (it == slots.end())
            {
                throw ConfigError(iono.source + ": unknown parameter '" + iono.text(r, c_p) + "'");
            }
            *it->second = iono.number(r, c_v);
        }
    }
    return t;
}

const PropagationTables&
PropagationTables::standard()
{
    static const PropagationTables tables = from_assets(AssetStore::from_environment());
    return tables;
}

double
PropagationTables::shadow_fading_sigma(NtnScenario s, Band b, LosCondition c, int bucket_deg) const
{
    const auto& e =
        m_sf_cl[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)][bucket_slot(bucket_deg)];
    if (!e.present)
    {
        throw ConfigError("no shadow fading entry for " + std::string(to_string(s)) + "/" +
                          std::string(to_string(b)) + "/" + std::to_string(bucket_deg) + " deg");
    }
    return c == LosCondition::Los ? e.sf_los : e.sf_nlos;
}

double
PropagationTables::clutter_loss(NtnScenario s, Band b, int bucket_deg) const
{
    const auto& e =
        m_sf_cl[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)][bucket_slot(bucket_deg)];
    if (!e.present)
    {
        throw ConfigError("no clutter loss entry for " + std::string(to_string(s)) + "/" +
                          std::string(to_string(b)) + "/" + std::to_string(bucket_deg) + " deg");
    }
    return e.cl_nlos;
}

double
PropagationTables::zenith_attenuation(double frequency_ghz) const
{
    if (frequency_ghz <= m_zenith.front().first)
    {
        return m_zenith.front().second;
    }
    if (frequency_ghz >= m_zenith.back().first)
    {
        return m_zenith.back().second;
    }
    const auto upper = std::upper_bound(
        m_zenith.begin(), m_zenith.end(), frequency_ghz,
        [](double f, const std::pair<double, double>& p) { return f < p.first; });
    const auto lower = upper - 1;
    const double w = (frequency_ghz - lower->first) / (upper->first - lower->first);
    return lower->second + w * (upper->second - lower->second);
}

double
PropagationTables::tropospheric_attenuation(int bucket_deg) const
{
    return m_troposphere[bucket_slot(bucket_deg)];
}

double
fspl(double distance_m, double frequency_ghz)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
    {
        throw DomainError("distance must be positive, got " + std::to_string(distance_m));
    }
    check_frequency(frequency_ghz);
    return 32.45 + 20.0 * std::log10(frequency_ghz) + 20.0 * std::log10(distance_m);
}

double
shadow_fading_sigma(const PropagationContext& ctx, const PropagationTables& t)
{
    ctx.validate();
    return t.shadow_fading_sigma(ctx.scenario, ctx.band(), ctx.condition,
                                 elevation_bucket(ctx.elevation_deg));
}

double
sample_shadow_fading(const PropagationContext& ctx, Rng& rng, const PropagationTables& t)
{
    return shadow_fading_sigma(ctx, t) * rng.normal();
}

double
clutter_loss(const PropagationContext& ctx, const PropagationTables& t)
{
    ctx.validate();
    if (ctx.condition == LosCondition::Los)
    {
        return 0.0;
    }
    return t.clutter_loss(ctx.scenario, ctx.band(), elevation_bucket(ctx.elevation_deg));
}

double
atmospheric_loss(double elevation_deg, double frequency_ghz, const PropagationTables& t)
{
    check_elevation(elevation_deg);
    if (!(frequency_ghz > 10.0 || elevation_deg < 10.0))
    {
        return 0.0;
    }
    return t.zenith_attenuation(frequency_ghz) / std::sin(deg_to_rad(elevation_deg));
}

double
ionospheric_scintillation(double frequency_ghz, double ground_latitude_deg, const PropagationTables& t)
{
    check_frequency(frequency_ghz);
    const double lat = std::abs(ground_latitude_deg);
    if (lat >= t.ionosphere_mid_latitude_min() && lat <= t.ionosphere_mid_latitude_max())
    {
        return 0.0;
    }
    if (frequency_ghz > t.ionosphere_max_frequency_ghz())
    {
        return 0.0;
    }
    return std::pow(frequency_ghz / 4.0, -1.5) * t.p_fluc_4ghz_db() / std::numbers::sqrt2;
}

double
tropospheric_scintillation(double elevation_deg, double frequency_ghz, const PropagationTables& t)
{
    const int bucket = elevation_bucket(elevation_deg);
    if (frequency_ghz <= 10.0)
    {
        return 0.0;
    }
    return t.tropospheric_attenuation(bucket);
}

LossBreakdown
total_loss_at_range(double slant_range_m, const PropagationContext& ctx, Rng& rng,
                    const LossFlags& flags, const PropagationTables& t)
{
    ctx.validate();
    LossBreakdown b;
    b.fspl_db = fspl(slant_range_m, ctx.carrier_ghz);
    if (flags.shadowing)
    {
        b.sf_db = sample_shadow_fading(ctx, rng, t);
    }
    if (flags.clutter)
    {
        b.cl_db = clutter_loss(ctx, t);
    }
    if (flags.atmospheric)
    {
        b.atmospheric_db = atmospheric_loss(ctx.elevation_deg, ctx.carrier_ghz, t);
    }
    if (flags.ionospheric)
    {
        b.ionospheric_db = ionospheric_scintillation(ctx.carrier_ghz, ctx.ground_latitude_deg, t);
    }
    if (flags.tropospheric)
    {
        b.tropospheric_db = tropospheric_scintillation(ctx.elevation_deg, ctx.carrier_ghz, t);
    }
    return b;
}

LossBreakdown
total_loss(const LinkGeometry& geometry, PropagationContext ctx, Rng& rng, const LossFlags& flags,
           const PropagationTables& t)
{
    ctx.elevation_deg = geometry.elevation;
    return total_loss_at_range(geometry.slant_range, ctx, rng, flags, t);
}

double
ShadowFadingCache::get(LinkId link, const ChannelCondition& condition,
                       const PropagationContext& ctx, Rng& rng, const PropagationTables& t)
{
    const auto it = m_entries.find(link);
    if (it != m_entries.end() && it->second.generation == condition.generation)
    {
        return it->second.value;
    }
    PropagationContext c = ctx;
    c.condition = condition.state;
    const double value = sample_shadow_fading(c, rng, t);
    m_entries[link] = {condition.generation, value};
    return value;
}

} // namespace ntn
