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
#include "ntn/propagation.hpp"
#include "ntn/random.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ntn
{

struct LspKey
{
    NtnScenario scenario{NtnScenario::Rural};
    LosCondition condition{LosCondition::Los};
    Band band{Band::S};
    int elevation_bucket{10};

    auto operator<=>(const LspKey&) const = default;
};

std::string to_string(const LspKey& key);

/// Log-normal large-scale parameters of one LspKey.
///
/// Spreads are stored as mean and standard deviation of log10 of the quantity
/// (seconds for the delay spread, degrees for the angular spreads). K and XPR
/// are in dB; k_mu_db / k_sigma_db are meaningless for NLOS keys.
struct LspSet
{
    LspKey key;
    double ds_mu{0.0};
    double ds_sigma{0.0};
    double asd_mu{0.0};
    double asd_sigma{0.0};
    double asa_mu{0.0};
    double asa_sigma{0.0};
    double zsa_mu{0.0};
    double zsa_sigma{0.0};
    double zsd_mu{0.0};
    double zsd_sigma{0.0};
    double k_mu_db{0.0};
    double k_sigma_db{0.0};
    double r_tau{1.0};
    double xpr_mu_db{0.0};
    double xpr_sigma_db{0.0};
    int n_clusters{1};
    int rays_per_cluster{1};
    double cluster_ds_ns{0.0};
    double cluster_asd_deg{0.0};
    double cluster_asa_deg{0.0};
    double cluster_zsa_deg{0.0};
    double zeta_db{0.0};

    bool is_los() const { return key.condition == LosCondition::Los; }
    /// Median delay spread 10^ds_mu in seconds.
    double median_delay_spread() const;
};

/// The full LSP table, one record per key. Loading fails unless all
/// 4 scenarios x 2 conditions x 2 bands x 9 buckets are present exactly once.
class LspTable
{
  public:
    static constexpr std::size_t kKeyCount = 144;

    static LspTable from_csv(const CsvTable& table);
    static LspTable from_assets(const AssetStore& assets);
    static const LspTable& standard();

    const LspSet& lookup(const LspKey& key) const;
    /// Buckets the elevation with the same rule as the LOS probability table.
    const LspSet& lookup(NtnScenario s, LosCondition c, Band b, double elevation_deg) const;
    static std::vector<LspKey> all_keys();
    std::size_t size() const { return m_sets.size(); }

  private:
    std::map<LspKey, LspSet> m_sets;
};

inline const LspSet&
lsp_lookup(const LspKey& key, const LspTable& table = LspTable::standard())
{
    return table.lookup(key);
}

enum class AngleKind
{
    Azimuth,
    Zenith,
};

/// Scaling constant C used when mapping cluster powers to cluster angles.
///
/// The azimuth table covers 2..25 clusters and the zenith table 2..25
/// including the small cluster counts of the NTN scenarios. Counts between
/// tabulated values are linearly interpolated. With a K-factor (LOS) the
/// constant is multiplied by the K-dependent correction polynomial. Throws
/// DomainError for counts below 2 or above 25.
double angular_scaling_factor(int n_clusters, std::optional<double> k_factor_db = std::nullopt,
                              AngleKind kind = AngleKind::Azimuth);

/// Cluster delays (s, ascending, first is zero) and powers (linear, sum one).
struct ClusterSet
{
    std::vector<double> delays;
    std::vector<double> powers;
    /// Delay spread drawn for this realization, seconds.
    double delay_spread{0.0};
    /// Ricean K drawn for LOS realizations, dB.
    std::optional<double> k_factor_db;

    std::size_t size() const { return delays.size(); }
    /// Power-weighted RMS delay spread of the clusters, seconds.
    double rms_delay_spread() const;
};

/// Cluster delays and powers following the stochastic cluster procedure:
/// exponential delays scaled by r_tau DS, powers exponential in delay with
/// per-cluster log-normal shadowing, and the Ricean adjustment for LOS keys.
ClusterSet generate_clusters(const LspSet& lsp, Rng& rng);

/// Per-cluster azimuth offsets (degrees, relative to the LOS direction) drawn
/// from the angular spread and the scaling constant. Only covers what is needed
/// to exercise angular_scaling_factor; no per-ray angles.
std::vector<double> generate_cluster_azimuths(const ClusterSet& clusters, const LspSet& lsp,
                                              Rng& rng);

/// H(f) = sum_n sqrt(P_n) exp(j phi_n) exp(-j 2 pi f tau_n) with phases drawn
/// uniformly in [0, 2 pi), one per cluster.
std::vector<std::complex<double>> transfer_function(const ClusterSet& clusters,
                                                    const std::vector<double>& frequencies_hz,
                                                    Rng& rng);

/// As above with explicit per-cluster phases (radians).
std::vector<std::complex<double>> transfer_function(const ClusterSet& clusters,
                                                    const std::vector<double>& frequencies_hz,
                                                    const std::vector<double>& phases);

} // namespace ntn
