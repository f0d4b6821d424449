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

#include "ntn/small_scale.hpp"

#include "ntn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

namespace ntn
{

std::string
to_string(const LspKey& key)
{
    return std::string(to_string(key.scenario)) + "/" + std::string(to_string(key.condition)) + "/" +
           std::string(to_string(key.band)) + "/" + std::to_string(key.elevation_bucket) + "deg";
}

double
LspSet::median_delay_spread() const
{
    return std::pow(10.0, ds_mu);
}

std::vector<LspKey>
LspTable::all_keys()
{
    std::vector<LspKey> keys;
    keys.reserve(kKeyCount);
    for (const auto s : kAllScenarios)
    {
        for (const auto c : {LosCondition::Los, LosCondition::Nlos})
        {
            for (const auto b : {Band::S, Band::Ka})
            {
                for (int e = 10; e <= 90; e += 10)
                {
                    keys.push_back({s, c, b, e});
                }
            }
        }
    }
    return keys;
}

LspTable
LspTable::from_csv(const CsvTable& t)
{
    const auto col = [&t](const char* name) { return t.column(name); };
    const auto c_scenario = col("scenario");
    const auto c_condition = col("condition");
    const auto c_band = col("band");
    const auto c_elevation = col("elevation_deg");

    const std::vector<std::pair<std::size_t, double LspSet::*>> numeric{
        {col("ds_mu"), &LspSet::ds_mu},
        {col("ds_sigma"), &LspSet::ds_sigma},
        {col("asd_mu"), &LspSet::asd_mu},
        {col("asd_sigma"), &LspSet::asd_sigma},
        {col("asa_mu"), &LspSet::asa_mu},
        {col("asa_sigma"), &LspSet::asa_sigma},
        {col("zsa_mu"), &LspSet::zsa_mu},
        {col("zsa_sigma"), &LspSet::zsa_sigma},
        {col("zsd_mu"), &LspSet::zsd_mu},
        {col("zsd_sigma"), &LspSet::zsd_sigma},
        {col("k_mu_db"), &LspSet::k_mu_db},
        {col("k_sigma_db"), &LspSet::k_sigma_db},
        {col("r_tau"), &LspSet::r_tau},
        {col("xpr_mu_db"), &LspSet::xpr_mu_db},
        {col("xpr_sigma_db"), &LspSet::xpr_sigma_db},
        {col("c_ds_ns"), &LspSet::cluster_ds_ns},
        {col("c_asd_deg"), &LspSet::cluster_asd_deg},
        {col("c_asa_deg"), &LspSet::cluster_asa_deg},
        {col("c_zsa_deg"), &LspSet::cluster_zsa_deg},
        {col("zeta_db"), &LspSet::zeta_db},
    };
    const auto c_n = col("n_clusters");
    const auto c_m = col("rays_per_cluster");

    LspTable out;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
    {
        LspSet set;
        set.key.scenario = parse_scenario(t.text(r, c_scenario));
        set.key.condition = parse_condition(t.text(r, c_condition));
        set.key.band = parse_band(t.text(r, c_band));
        const double elevation = t.number(r, c_elevation);
        set.key.elevation_bucket = static_cast<int>(elevation);
        if (set.key.elevation_bucket != elevation || elevation < 10 || elevation > 90 ||
            set.key.elevation_bucket % 10 != 0)
        {
            throw ConfigError(t.source + ": row " + std::to_string(r + 1) +
                              ": elevation must be one of 10, 20, ..., 90");
        }
        for (const auto& [c, member] : numeric)
        {
            set.*member = t.number(r, c);
        }
        set.n_clusters = static_cast<int>(t.number(r, c_n));
        set.rays_per_cluster = static_cast<int>(t.number(r, c_m));

        const auto where = t.source + ": " + to_string(set.key);
        if (set.n_clusters < 1 || set.rays_per_cluster < 1)
        {
            throw ConfigError(where + ": cluster and ray counts must be at least 1");
        }
        if (!(set.r_tau > 0.0))
        {
            throw ConfigError(where + ": r_tau must be positive");
        }
        for (double sigma : {set.ds_sigma, set.asd_sigma, set.asa_sigma, set.zsa_sigma,
                             set.zsd_sigma, set.k_sigma_db, set.xpr_sigma_db, set.zeta_db})
        {
            if (!(sigma >= 0.0))
            {
                throw ConfigError(where + ": standard deviations must be non-negative");
            }
        }
        if (!out.m_sets.emplace(set.key, set).second)
        {
            throw ConfigError(where + ": duplicate record");
        }
    }
    for (const auto& key : all_keys())
    {
        if (!out.m_sets.contains(key))
        {
            throw ConfigError(t.source + ": missing record " + to_string(key));
        }
    }
    return out;
}

LspTable
LspTable::from_assets(const AssetStore& assets)
{
    return from_csv(assets.table("lsp.csv"));
}

const LspTable&
LspTable::standard()
{
    static const LspTable table = from_assets(AssetStore::from_environment());
    return table;
}

const LspSet&
LspTable::lookup(const LspKey& key) const
{
    const auto it = m_sets.find(key);
    if (it == m_sets.end())
    {
        throw ConfigError("no large-scale parameters for " + to_string(key));
    }
    return it->second;
}

const LspSet&
LspTable::lookup(NtnScenario s, LosCondition c, Band b, double elevation_deg) const
{
    return lookup({s, c, b, elevation_bucket(elevation_deg)});
}

namespace
{

using ScalingTable = std::vector<std::pair<int, double>>;

const ScalingTable&
azimuth_scaling()
{
    static const ScalingTable table{
        {2, 0.501},  {3, 0.680},  {4, 0.779},  {5, 0.860},  {8, 1.018},
        {10, 1.090}, {11, 1.123}, {12, 1.146}, {14, 1.190}, {15, 1.211},
        {16, 1.226}, {19, 1.273}, {20, 1.289}, {25, 1.358},
    };
    return table;
}

const ScalingTable&
zenith_scaling()
{
    static const ScalingTable table{
        {2, 0.430},  {3, 0.594},  {4, 0.697},  {8, 0.889},  {10, 0.957}, {11, 1.031},
        {12, 1.104}, {15, 1.1088}, {19, 1.184}, {20, 1.178}, {25, 1.282},
    };
    return table;
}

double
interpolate(const ScalingTable& table, int n)
{
    if (n < table.front().first || n > table.back().first)
    {
        throw DomainError("no angular scaling factor for " + std::to_string(n) +
                          " clusters (supported " + std::to_string(table.front().first) + ".." +
                          std::to_string(table.back().first) + ")");
    }
    const auto upper = std::lower_bound(table.begin(), table.end(), n,
                                        [](const auto& p, int v) { return p.first < v; });
    if (upper->first == n)
    {
        return upper->second;
    }
    const auto lower = upper - 1;
    const double w = static_cast<double>(n - lower->first) / (upper->first - lower->first);
    return lower->second + w * (upper->second - lower->second);
}

} // namespace

double
angular_scaling_factor(int n_clusters, std::optional<double> k_factor_db, AngleKind kind)
{
    const bool azimuth = kind == AngleKind::Azimuth;
    const double c = interpolate(azimuth ? azimuth_scaling() : zenith_scaling(), n_clusters);
    if (!k_factor_db)
    {
        return c;
    }
    const double k = *k_factor_db;
    const double correction = azimuth
                                  ? 1.1035 - 0.028 * k - 2e-3 * k * k + 1e-4 * k * k * k
                                  : 1.3086 + 0.0339 * k - 0.0077 * k * k + 2e-4 * k * k * k;
    return c * correction;
}

double
ClusterSet::rms_delay_spread() const
{
    double mean = 0.0;
    double second = 0.0;
    for (std::size_t n = 0; n < delays.size(); ++n)
    {
        mean += powers[n] * delays[n];
        second += powers[n] * delays[n] * delays[n];
    }
    return std::sqrt(std::max(0.0, second - mean * mean));
}

ClusterSet
generate_clusters(const LspSet& lsp, Rng& rng)
{
    ClusterSet out;
    out.delay_spread = std::pow(10.0, rng.normal(lsp.ds_mu, lsp.ds_sigma));
    if (lsp.is_los())
    {
        out.k_factor_db = rng.normal(lsp.k_mu_db, lsp.k_sigma_db);
    }
    const auto n = static_cast<std::size_t>(lsp.n_clusters);
    if (n == 1)
    {
        out.delays = {0.0};
        out.powers = {1.0};
        return out;
    }

    const double ds = out.delay_spread;
    const double r_tau = lsp.r_tau;
    std::vector<double> tau(n);
    for (auto& t : tau)
    {
        t = -r_tau * ds * std::log(rng.uniform_open());
    }
    std::sort(tau.begin(), tau.end());
    const double first = tau.front();
    for (auto& t : tau)
    {
        t -= first;
    }

    std::vector<double> power(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const double shadow = rng.normal(0.0, lsp.zeta_db);
        power[i] = std::exp(-tau[i] * (r_tau - 1.0) / (r_tau * ds)) * std::pow(10.0, -shadow / 10.0);
    }
    const double total = std::accumulate(power.begin(), power.end(), 0.0);
    for (auto& p : power)
    {
        p /= total;
    }

    if (out.k_factor_db)
    {
        const double k = *out.k_factor_db;
        const double k_lin = std::pow(10.0, k / 10.0);
        for (auto& p : power)
        {
            p /= k_lin + 1.0;
        }
        power.front() += k_lin / (k_lin + 1.0);
        // Delay compression applied to LOS delays; powers use the unscaled delays.
        const double c_tau = 0.7705 - 0.0433 * k + 2e-4 * k * k + 1.7e-5 * k * k * k;
        for (auto& t : tau)
        {
            t /= c_tau;
        }
    }

    // Final renormalization absorbs the rounding of the LOS adjustment.
    const double sum = std::accumulate(power.begin(), power.end(), 0.0);
    for (auto& p : power)
    {
        p /= sum;
    }
    out.delays = std::move(tau);
    out.powers = std::move(power);
    return out;
}

std::vector<double>
generate_cluster_azimuths(const ClusterSet& clusters, const LspSet& lsp, Rng& rng)
{
    const std::size_t n = clusters.size();
    std::vector<double> azimuths(n, 0.0);
    if (n < 2)
    {
        return azimuths;
    }
    const double asa = std::min(std::pow(10.0, rng.normal(lsp.asa_mu, lsp.asa_sigma)), 104.0);
    const double c = angular_scaling_factor(lsp.n_clusters, clusters.k_factor_db, AngleKind::Azimuth);
    const double max_power = *std::max_element(clusters.powers.begin(), clusters.powers.end());
    for (std::size_t i = 0; i < n; ++i)
    {
        const double spread = 2.0 * (asa / 1.4) *
                              std::sqrt(-std::log(clusters.powers[i] / max_power)) / c;
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        azimuths[i] = sign * spread + rng.normal(0.0, asa / 7.0);
    }
    if (clusters.k_factor_db)
    {
        const double first = azimuths.front();
        for (auto& a : azimuths)
        {
            a -= first;
        }
    }
    return azimuths;
}

std::vector<std::complex<double>>
transfer_function(const ClusterSet& clusters, const std::vector<double>& frequencies_hz,
                  const std::vector<double>& phases)
{
    if (frequencies_hz.empty())
    {
        throw DomainError("transfer function needs at least one frequency");
    }
    if (phases.size() != clusters.size())
    {
        throw DomainError("one phase per cluster is required");
    }
    std::vector<std::complex<double>> h(frequencies_hz.size());
    for (std::size_t k = 0; k < frequencies_hz.size(); ++k)
    {
        std::complex<double> sum{};
        for (std::size_t n = 0; n < clusters.size(); ++n)
        {
            const double angle =
                phases[n] - 2.0 * std::numbers::pi * frequencies_hz[k] * clusters.delays[n];
            sum += std::sqrt(clusters.powers[n]) * std::polar(1.0, angle);
        }
        h[k] = sum;
    }
    return h;
}

std::vector<std::complex<double>>
transfer_function(const ClusterSet& clusters, const std::vector<double>& frequencies_hz, Rng& rng)
{
    std::vector<double> phases(clusters.size());
    for (auto& p : phases)
    {
        p = 2.0 * std::numbers::pi * rng.uniform();
    }
    return transfer_function(clusters, frequencies_hz, phases);
}

} // namespace ntn
