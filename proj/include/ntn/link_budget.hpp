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

#include "ntn/antenna.hpp"
#include "ntn/channel_condition.hpp"
#include "ntn/geodesy.hpp"
#include "ntn/propagation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ntn
{

/// 10 log10 of Boltzmann's constant, negated (dBW/K/Hz).
inline constexpr double kBoltzmannTerm = 228.6;

enum class Direction
{
    Downlink,
    Uplink,
};

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view name);

double eirp_from_density(double dbw_per_mhz, double bandwidth_hz);
double eirp_from_power(double tx_power_dbm, double tx_gain_dbi);
double g_over_t_from(double rx_gain_dbi, double noise_temperature_k);

/// Per-case overrides used by the pinned calibration mode.
struct PinnedValues
{
    std::optional<double> slant_range_m;
    std::optional<double> al_db;
    /// Total scintillation (ionospheric plus tropospheric).
    std::optional<double> sl_db;
};

/// One direction of one calibration study case, with EIRP and G/T resolved.
struct StudyCase
{
    std::string id;
    Direction direction{Direction::Downlink};
    std::string orbit;
    double altitude_m{0.0};
    double stated_elevation_deg{90.0};
    double fspl_consistent_elevation_deg{90.0};
    double carrier_ghz{2.0};
    double bandwidth_hz{1.0};
    std::string terminal_antenna;
    GeoPosition ground{};
    NtnScenario scenario{NtnScenario::Rural};
    double eirp_dbw{0.0};
    double g_over_t_db_per_k{0.0};
    /// Losses outside the channel model, e.g. polarization mismatch.
    double other_losses_db{0.0};
    PinnedValues pinned;
};

struct BudgetResult
{
    LossBreakdown losses;
    double eirp_dbw{0.0};
    double g_over_t_db_per_k{0.0};
    double other_losses_db{0.0};
    double bandwidth_db_hz{0.0};
    double cnr_db{0.0};
};

/// EIRP + G/T - losses + 228.6 - 10 log10(B).
double cnr_db(double eirp_dbw, double g_over_t_db_per_k, double total_loss_db, double bandwidth_hz);

BudgetResult cnr(const StudyCase& sc, const LossBreakdown& losses);

enum class CalibrationMode
{
    Pinned,
    Computed,
};

std::string_view to_string(CalibrationMode m);
CalibrationMode parse_calibration_mode(std::string_view name);

struct CalibrationRow
{
    std::string id;
    Direction direction{Direction::Downlink};
    CalibrationMode mode{CalibrationMode::Computed};
    double stated_elevation_deg{0.0};
    double elevation_deg{0.0};
    double slant_range_m{0.0};
    /// FSPL the case would have at its stated elevation, for side-by-side reporting.
    double fspl_stated_elevation_db{0.0};
    BudgetResult budget;
};

/// Evaluates every case with LOS forced and shadowing and fading disabled.
///
/// Computed mode derives the slant range from the altitude and the
/// FSPL-consistent elevation and takes every loss from the tables. Pinned mode
/// additionally applies the per-case overrides.
std::vector<CalibrationRow> run_calibration(const std::vector<StudyCase>& cases, CalibrationMode mode,
                                            const PropagationTables& t = PropagationTables::standard());

struct ApertureSpec
{
    double peak_gain_dbi{0.0};
    double aperture_radius_m{1.0};
};

struct FrequencySweep
{
    double altitude_m{35'786'000.0};
    double elevation_deg{90.0};
    GeoPosition ground{};
    double from_hz{20e9};
    double to_hz{100e9};
    double step_hz{100e6};
};

struct ArcSweep
{
    double altitude_m{35'786'000.0};
    double latitude_deg{0.0};
    double start_longitude_deg{8.8};
    double end_longitude_deg{14.8};
    int steps{61};
    GeoPosition ground{0.0, 11.8, 0.0};
};

struct AltitudeSweep
{
    double elevation_deg{90.0};
    GeoPosition ground{};
    double from_m{300e3};
    double to_m{1600e3};
    double step_m{10e3};
};

/// Downlink from a satellite with a circular aperture to a VSAT.
struct SweepConfig
{
    NtnScenario scenario{NtnScenario::Suburban};
    double carrier_ghz{20.0};
    double tx_power_dbm{37.5};
    double bandwidth_hz{400e6};
    double noise_figure_db{1.2};
    double antenna_temperature_k{150.0};
    ApertureSpec satellite{58.5, 2.5};
    ApertureSpec terminal{39.7, 0.3};
    LossFlags flags{LossFlags::deterministic()};
    std::uint64_t seed{0};
    FrequencySweep frequency;
    ArcSweep arc;
    AltitudeSweep altitude;

    /// T_ant + 290 (10^(NF/10) - 1).
    double system_noise_temperature_k() const;
    /// Thermal noise power over the bandwidth in dBW.
    double noise_power_dbw() const;
};

struct SweepPoint
{
    double x{0.0};
    double snr_db{0.0};
    double slant_range_m{0.0};
    double elevation_deg{0.0};
    double satellite_offaxis_deg{0.0};
    double terminal_offaxis_deg{0.0};
    LossBreakdown losses;
};

enum class SweepAxis
{
    Frequency,
    Arc,
    Altitude,
};

/// Evenly spaced grid from..to inclusive (to is included when it lies on the grid).
std::vector<double> sweep_grid(double from, double to, double step);

/// x is the carrier frequency in Hz.
std::vector<SweepPoint> sweep_frequency(const SweepConfig& cfg,
                                        const PropagationTables& t = PropagationTables::standard());
/// x is the satellite longitude in degrees. Both antennas keep the boresight
/// they have when the satellite sits at the arc midpoint.
std::vector<SweepPoint> sweep_arc(const SweepConfig& cfg,
                                  const PropagationTables& t = PropagationTables::standard());
/// x is the platform altitude in meters.
std::vector<SweepPoint> sweep_altitude(const SweepConfig& cfg,
                                       const PropagationTables& t = PropagationTables::standard());

std::vector<SweepPoint> snr_sweep(SweepAxis axis, const SweepConfig& cfg,
                                  const PropagationTables& t = PropagationTables::standard());

} // namespace ntn
