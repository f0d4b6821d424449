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
#include "ntn/channel_condition.hpp"
#include "ntn/geodesy.hpp"
#include "ntn/random.hpp"

#include <array>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace ntn
{

enum class Band
{
    S,
    Ka,
};

std::string_view to_string(Band b);
Band parse_band(std::string_view name);
/// S below 6 GHz, Ka otherwise.
Band band_for_frequency(double frequency_ghz);

inline constexpr double kMinFrequencyGhz = 0.5;
inline constexpr double kMaxFrequencyGhz = 100.0;

struct PropagationContext
{
    NtnScenario scenario{NtnScenario::Rural};
    LosCondition condition{LosCondition::Los};
    double carrier_ghz{2.0};
    double elevation_deg{90.0};
    double ground_latitude_deg{0.0};

    Band band() const { return band_for_frequency(carrier_ghz); }
    /// Throws DomainError for a frequency outside [0.5, 100] GHz or an
    /// elevation outside (0, 90].
    void validate() const;
};

/// Itemized path loss in dB. Every component except the signed shadow fading
/// sample is non-negative.
struct LossBreakdown
{
    double fspl_db{0.0};
    double sf_db{0.0};
    double cl_db{0.0};
    double atmospheric_db{0.0};
    double ionospheric_db{0.0};
    double tropospheric_db{0.0};

    double scintillation_db() const { return ionospheric_db + tropospheric_db; }
    double total_db() const
    {
        return fspl_db + sf_db + cl_db + atmospheric_db + ionospheric_db + tropospheric_db;
    }
};

/// Switches for the individual loss terms. Calibration runs disable shadowing.
struct LossFlags
{
    bool shadowing{true};
    bool clutter{true};
    bool atmospheric{true};
    bool ionospheric{true};
    bool tropospheric{true};

    static LossFlags deterministic()
    {
        LossFlags f;
        f.shadowing = false;
        return f;
    }
};

/// Loss tables loaded from the asset files.
class PropagationTables
{
  public:
    static PropagationTables from_assets(const AssetStore& assets);
    static const PropagationTables& standard();

    double shadow_fading_sigma(NtnScenario s, Band b, LosCondition c, int bucket_deg) const;
    double clutter_loss(NtnScenario s, Band b, int bucket_deg) const;
    /// Zenith gaseous attenuation, piecewise linear on the frequency grid and
    /// clamped to the end values outside it.
    double zenith_attenuation(double frequency_ghz) const;
    double tropospheric_attenuation(int bucket_deg) const;

    double p_fluc_4ghz_db() const { return m_p_fluc_4ghz_db; }
    double ionosphere_mid_latitude_min() const { return m_mid_lat_min; }
    double ionosphere_mid_latitude_max() const { return m_mid_lat_max; }
    double ionosphere_max_frequency_ghz() const { return m_iono_max_ghz; }

    /// Frequency grid of the zenith attenuation curve, (GHz, dB) pairs.
    const std::vector<std::pair<double, double>>& zenith_curve() const { return m_zenith; }

    void set_p_fluc_4ghz_db(double v) { m_p_fluc_4ghz_db = v; }

  private:
    struct SfClEntry
    {
        double sf_los{0.0};
        double sf_nlos{0.0};
        double cl_nlos{0.0};
        bool present{false};
    };
    // [scenario][band][bucket]
    std::array<std::array<std::array<SfClEntry, 9>, 2>, 4> m_sf_cl{};
    std::vector<std::pair<double, double>> m_zenith;
    std::array<double, 9> m_troposphere{};
    double m_p_fluc_4ghz_db{1.1};
    double m_mid_lat_min{20.0};
    double m_mid_lat_max{60.0};
    double m_iono_max_ghz{6.0};
};

/// Free-space path loss 32.45 + 20 log10(f_GHz) + 20 log10(d_m).
double fspl(double distance_m, double frequency_ghz);

double shadow_fading_sigma(const PropagationContext& ctx,
                           const PropagationTables& t = PropagationTables::standard());
/// Zero-mean Gaussian with the tabulated sigma; consumes two uniform draws.
double sample_shadow_fading(const PropagationContext& ctx, Rng& rng,
                            const PropagationTables& t = PropagationTables::standard());

/// Zero under LOS, the tabulated value under NLOS.
double clutter_loss(const PropagationContext& ctx,
                    const PropagationTables& t = PropagationTables::standard());

/// A_zenith(f) / sin(elevation) above 10 GHz or below 10 degrees, else zero.
double atmospheric_loss(double elevation_deg, double frequency_ghz,
                        const PropagationTables& t = PropagationTables::standard());

/// (f / 4)^-1.5 * P_fluc(4 GHz) / sqrt(2), neglected at mid latitudes and above 6 GHz.
double ionospheric_scintillation(double frequency_ghz, double ground_latitude_deg,
                                 const PropagationTables& t = PropagationTables::standard());

/// 20 GHz Toulouse 99% curve at the elevation bucket, applied above 10 GHz only.
double tropospheric_scintillation(double elevation_deg, double frequency_ghz,
                                  const PropagationTables& t = PropagationTables::standard());

/// All loss terms for a link of the given slant range. The elevation used for
/// table lookups is ctx.elevation_deg.
LossBreakdown total_loss_at_range(double slant_range_m, const PropagationContext& ctx, Rng& rng,
                                  const LossFlags& flags = {},
                                  const PropagationTables& t = PropagationTables::standard());

/// As total_loss_at_range, with range and elevation taken from the geometry.
LossBreakdown total_loss(const LinkGeometry& geometry, PropagationContext ctx, Rng& rng,
                         const LossFlags& flags = {},
                         const PropagationTables& t = PropagationTables::standard());

/// Holds one shadow fading sample per link until that link's channel
/// condition is redrawn.
class ShadowFadingCache
{
  public:
    double get(LinkId link, const ChannelCondition& condition, const PropagationContext& ctx,
               Rng& rng, const PropagationTables& t = PropagationTables::standard());
    void reset(LinkId link) { m_entries.erase(link); }
    void clear() { m_entries.clear(); }

  private:
    struct Entry
    {
        std::uint64_t generation{0};
        double value{0.0};
    };
    std::map<LinkId, Entry> m_entries;
};

} // namespace ntn
