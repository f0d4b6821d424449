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

#include "ntn/link_budget.hpp"

#include "ntn/error.hpp"
#include "ntn/mobility.hpp"

#include <cmath>

namespace ntn
{

std::string_view
to_string(Direction d)
{
    return d == Direction::Downlink ? "DL" : "UL";
}

Direction
parse_direction(std::string_view name)
{
    if (name == "DL")
    {
        return Direction::Downlink;
    }
    if (name == "UL")
    {
        return Direction::Uplink;
    }
    throw DomainError("unknown link direction '" + std::string(name) + "'");
}

std::string_view
to_string(CalibrationMode m)
{
    return m == CalibrationMode::Pinned ? "pinned" : "computed";
}

CalibrationMode
parse_calibration_mode(std::string_view name)
{
    if (name == "pinned")
    {
        return CalibrationMode::Pinned;
    }
    if (name == "computed")
    {
        return CalibrationMode::Computed;
    }
    throw DomainError("unknown calibration mode '" + std::string(name) + "'");
}

double
eirp_from_density(double dbw_per_mhz, double bandwidth_hz)
{
    return dbw_per_mhz + 10.0 * std::log10(bandwidth_hz / 1e6);
}

double
eirp_from_power(double tx_power_dbm, double tx_gain_dbi)
{
    return tx_power_dbm - 30.0 + tx_gain_dbi;
}

double
g_over_t_from(double rx_gain_dbi, double noise_temperature_k)
{
    if (!(noise_temperature_k > 0.0))
    {
        throw DomainError("noise temperature must be positive");
    }
    return rx_gain_dbi - 10.0 * std::log10(noise_temperature_k);
}

double
cnr_db(double eirp_dbw, double g_over_t_db_per_k, double total_loss_db, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
    {
        throw DomainError("bandwidth must be positive");
    }
    return eirp_dbw + g_over_t_db_per_k - total_loss_db + kBoltzmannTerm -
           10.0 * std::log10(bandwidth_hz);
}

BudgetResult
cnr(const StudyCase& sc, const LossBreakdown& losses)
{
    BudgetResult r;
    r.losses = losses;
    r.eirp_dbw = sc.eirp_dbw;
    r.g_over_t_db_per_k = sc.g_over_t_db_per_k;
    r.other_losses_db = sc.other_losses_db;
    r.bandwidth_db_hz = 10.0 * std::log10(sc.bandwidth_hz);
    r.cnr_db = cnr_db(sc.eirp_dbw, sc.g_over_t_db_per_k, losses.total_db() + sc.other_losses_db,
                      sc.bandwidth_hz);
    return r;
}

std::vector<CalibrationRow>
run_calibration(const std::vector<StudyCase>& cases, CalibrationMode mode, const PropagationTables& t)
{
    std::vector<CalibrationRow> rows;
    rows.reserve(cases.size());
    // Never consumed: shadowing is off and the condition is pinned to LOS.
    Rng unused(0);
    for (const auto& sc : cases)
    {
        CalibrationRow row;
        row.id = sc.id;
        row.direction = sc.direction;
        row.mode = mode;
        row.stated_elevation_deg = sc.stated_elevation_deg;
        row.elevation_deg = sc.fspl_consistent_elevation_deg;
        row.fspl_stated_elevation_db =
            fspl(slant_range(sc.altitude_m, sc.stated_elevation_deg), sc.carrier_ghz);

        const bool pin = mode == CalibrationMode::Pinned;
        row.slant_range_m = pin && sc.pinned.slant_range_m
                                ? *sc.pinned.slant_range_m
                                : slant_range(sc.altitude_m, sc.fspl_consistent_elevation_deg);

        PropagationContext ctx;
        ctx.scenario = sc.scenario;
        ctx.condition = LosCondition::Los;
        ctx.carrier_ghz = sc.carrier_ghz;
        ctx.elevation_deg = row.elevation_deg;
        ctx.ground_latitude_deg = sc.ground.latitude();

        LossBreakdown losses =
            total_loss_at_range(row.slant_range_m, ctx, unused, LossFlags::deterministic(), t);
        if (pin && sc.pinned.al_db)
        {
            losses.atmospheric_db = *sc.pinned.al_db;
        }
        if (pin && sc.pinned.sl_db)
        {
            losses.ionospheric_db = 0.0;
            losses.tropospheric_db = *sc.pinned.sl_db;
        }
        row.budget = cnr(sc, losses);
        rows.push_back(row);
    }
    return rows;
}

double
SweepConfig::system_noise_temperature_k() const
{
    return antenna_temperature_k + 290.0 * (std::pow(10.0, noise_figure_db / 10.0) - 1.0);
}

double
SweepConfig::noise_power_dbw() const
{
    if (!(bandwidth_hz > 0.0))
    {
        throw DomainError("bandwidth must be positive");
    }
    return -kBoltzmannTerm + 10.0 * std::log10(system_noise_temperature_k()) +
           10.0 * std::log10(bandwidth_hz);
}

std::vector<double>
sweep_grid(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(step))
    {
        throw DomainError("sweep step must be positive");
    }
    if (!(to >= from))
    {
        throw DomainError("sweep end must not precede its start");
    }
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        grid[i] = from + static_cast<double>(i) * step;
    }
    return grid;
}

namespace
{

struct LinkEnd
{
    EcefVector position;
    CircularApertureAntenna antenna;
};

SweepPoint
evaluate(const SweepConfig& cfg, double x, double carrier_ghz, const LinkEnd& satellite,
         const LinkEnd& terminal, std::size_t index, const PropagationTables& t)
{
    SweepPoint p;
    p.x = x;
    const auto geometry = LinkGeometry::between(terminal.position, satellite.position);
    p.slant_range_m = geometry.slant_range;
    p.elevation_deg = geometry.elevation;
    p.satellite_offaxis_deg = satellite.antenna.offaxis_angle_to(satellite.position, terminal.position);
    p.terminal_offaxis_deg = terminal.antenna.offaxis_angle_to(terminal.position, satellite.position);

    PropagationContext ctx;
    ctx.scenario = cfg.scenario;
    ctx.condition = LosCondition::Los;
    ctx.carrier_ghz = carrier_ghz;
    ctx.ground_latitude_deg = geocentric_to_geographic(terminal.position).latitude();

    // One stream per point keeps stochastic terms independent of evaluation order.
    Rng rng = Rng(cfg.seed).fork(index);
    p.losses = total_loss(geometry, ctx, rng, cfg.flags, t);

    p.snr_db = cfg.tx_power_dbm - 30.0 + satellite.antenna.gain_dbi(p.satellite_offaxis_deg) +
               terminal.antenna.gain_dbi(p.terminal_offaxis_deg) - p.losses.total_db() -
               cfg.noise_power_dbw();
    return p;
}

std::pair<LinkEnd, LinkEnd>
facing_pair(const SweepConfig& cfg, double carrier_ghz, const EcefVector& satellite,
            const EcefVector& terminal)
{
    const CircularApertureAntenna sat(cfg.satellite.aperture_radius_m, carrier_ghz,
                                      cfg.satellite.peak_gain_dbi);
    const CircularApertureAntenna term(cfg.terminal.aperture_radius_m, carrier_ghz,
                                       cfg.terminal.peak_gain_dbi);
    return {LinkEnd{satellite, sat.pointed(satellite, terminal)},
            LinkEnd{terminal, term.pointed(terminal, satellite)}};
}

} // namespace

std::vector<SweepPoint>
sweep_frequency(const SweepConfig& cfg, const PropagationTables& t)
{
    const auto& f = cfg.frequency;
    const auto grid = sweep_grid(f.from_hz, f.to_hz, f.step_hz);
    const EcefVector ground = geographic_to_geocentric(f.ground);
    const EcefVector platform = place_platform(f.ground, f.altitude_m, f.elevation_deg);
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const double ghz = grid[i] / 1e9;
        const auto [sat, term] = facing_pair(cfg, ghz, platform, ground);
        out.push_back(evaluate(cfg, grid[i], ghz, sat, term, i, t));
    }
    return out;
}

std::vector<SweepPoint>
sweep_arc(const SweepConfig& cfg, const PropagationTables& t)
{
    const auto& a = cfg.arc;
    ArcTrajectory trajectory;
    trajectory.orbit_altitude = a.altitude_m;
    trajectory.start_longitude = a.start_longitude_deg;
    trajectory.end_longitude = a.end_longitude_deg;
    trajectory.latitude = a.latitude_deg;
    trajectory.steps = a.steps;
    const auto positions = arc_positions(trajectory);

    const EcefVector ground = geographic_to_geocentric(a.ground);
    const double mid_longitude = 0.5 * (a.start_longitude_deg + a.end_longitude_deg);
    const EcefVector mid =
        geographic_to_geocentric(GeoPosition(a.latitude_deg, mid_longitude, a.altitude_m));
    const auto [sat_mid, term_mid] = facing_pair(cfg, cfg.carrier_ghz, mid, ground);

    std::vector<SweepPoint> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
    {
        const double longitude = geocentric_to_geographic(positions[i]).longitude();
        const LinkEnd sat{positions[i], sat_mid.antenna};
        out.push_back(evaluate(cfg, longitude, cfg.carrier_ghz, sat, term_mid, i, t));
    }
    return out;
}

std::vector<SweepPoint>
sweep_altitude(const SweepConfig& cfg, const PropagationTables& t)
{
    const auto& a = cfg.altitude;
    const auto grid = sweep_grid(a.from_m, a.to_m, a.step_m);
    const EcefVector ground = geographic_to_geocentric(a.ground);
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const EcefVector platform = place_platform(a.ground, grid[i], a.elevation_deg);
        const auto [sat, term] = facing_pair(cfg, cfg.carrier_ghz, platform, ground);
        out.push_back(evaluate(cfg, grid[i], cfg.carrier_ghz, sat, term, i, t));
    }
    return out;
}

std::vector<SweepPoint>
snr_sweep(SweepAxis axis, const SweepConfig& cfg, const PropagationTables& t)
{
    switch (axis)
    {
    case SweepAxis::Frequency: return sweep_frequency(cfg, t);
    case SweepAxis::Arc: return sweep_arc(cfg, t);
    case SweepAxis::Altitude: return sweep_altitude(cfg, t);
    }
    throw DomainError("unknown sweep axis");
}

} // namespace ntn
