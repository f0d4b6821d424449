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

#include "ntn/config.hpp"
#include "ntn/error.hpp"
#include "ntn/link_budget.hpp"

#include <doctest.h>

#include <cmath>

using namespace ntn;

TEST_CASE("EIRP and G/T conversions")
{
    CHECK(eirp_from_density(4.0, 400e6) == doctest::Approx(4.0 + 10.0 * std::log10(400.0)));
    CHECK(eirp_from_power(33.0, 43.2) == doctest::Approx(46.2));
    CHECK(g_over_t_from(0.0, 290.0) == doctest::Approx(-10.0 * std::log10(290.0)));
    CHECK(parse_direction("DL") == Direction::Downlink);
    CHECK(to_string(Direction::Uplink) == "UL");
    CHECK_THROWS_AS(parse_direction("sideways"), DomainError);
}

TEST_CASE("carrier to noise ratio")
{
    CHECK(cnr_db(30.0, 15.9, 180.0, 400e6) == doctest::Approx(30.0 + 15.9 - 180.0 + 228.6 - 86.0206).epsilon(1e-6));
    CHECK_THROWS_AS(cnr_db(0.0, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("pinned calibration rows recompute from their components")
{
    const auto cfg = default_config();
    const auto rows = run_calibration(cfg.study_cases, CalibrationMode::Pinned);
    REQUIRE(rows.size() == cfg.study_cases.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto& r = rows[i];
        const auto& sc = cfg.study_cases[i];
        const auto& l = r.budget.losses;
        CHECK(r.id == sc.id);
        CHECK(l.sf_db == 0.0);
        CHECK(l.cl_db == 0.0);
        const double expected = sc.eirp_dbw + sc.g_over_t_db_per_k - l.total_db() - sc.other_losses_db +
                                228.6 - 10.0 * std::log10(sc.bandwidth_hz);
        CHECK(r.budget.cnr_db == doctest::Approx(expected).epsilon(1e-12));
        if (sc.pinned.slant_range_m)
        {
            CHECK(r.slant_range_m == *sc.pinned.slant_range_m);
        }
        if (sc.pinned.sl_db)
        {
            CHECK(l.scintillation_db() == doctest::Approx(*sc.pinned.sl_db));
        }
    }
}

TEST_CASE("computed calibration uses the FSPL-consistent elevation")
{
    const auto cfg = default_config();
    for (const auto& r : run_calibration(cfg.study_cases, CalibrationMode::Computed))
    {
        const auto it = std::find_if(cfg.study_cases.begin(), cfg.study_cases.end(), [&](const StudyCase& s) {
            return s.id == r.id && s.direction == r.direction;
        });
        REQUIRE(it != cfg.study_cases.end());
        CHECK(r.elevation_deg == it->fspl_consistent_elevation_deg);
        CHECK(r.slant_range_m == doctest::Approx(slant_range(it->altitude_m, it->fspl_consistent_elevation_deg)));
        CHECK(r.budget.losses.fspl_db == doctest::Approx(fspl(r.slant_range_m, it->carrier_ghz)));
        CHECK(r.fspl_stated_elevation_db ==
              doctest::Approx(fspl(slant_range(it->altitude_m, it->stated_elevation_deg), it->carrier_ghz)));
    }
    CHECK(parse_calibration_mode("computed") == CalibrationMode::Computed);
    CHECK_THROWS_AS(parse_calibration_mode("guess"), DomainError);
}

TEST_CASE("system noise")
{
    SweepConfig s;
    s.noise_figure_db = 1.2;
    s.antenna_temperature_k = 150.0;
    s.bandwidth_hz = 400e6;
    const double t = 150.0 + 290.0 * (std::pow(10.0, 0.12) - 1.0);
    CHECK(s.system_noise_temperature_k() == doctest::Approx(t));
    CHECK(s.noise_power_dbw() == doctest::Approx(-228.6 + 10.0 * std::log10(t) + 10.0 * std::log10(400e6)));
}

TEST_CASE("sweep grid")
{
    const auto g = sweep_grid(20e9, 100e9, 100e6);
    CHECK(g.size() == 801);
    CHECK(g.front() == 20e9);
    CHECK(g.back() == doctest::Approx(100e9));
    CHECK(sweep_grid(0.0, 1.0, 0.3).size() == 4);
    CHECK_THROWS_AS(sweep_grid(1.0, 0.0, 0.1), DomainError);
    CHECK_THROWS_AS(sweep_grid(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("altitude sweep matches an independent budget at zenith")
{
    const auto cfg = default_config();
    const auto& s = cfg.sweeps;
    const auto pts = sweep_altitude(s);
    const double noise = s.noise_power_dbw();
    for (const auto& p : pts)
    {
        // Boresight alignment, LOS, 90 degrees: gaseous zenith value and the 90 degree
        // tropospheric entry are the only extra terms at 20 GHz.
        const double expected = s.tx_power_dbm - 30.0 + s.satellite.peak_gain_dbi + s.terminal.peak_gain_dbi -
                                fspl(p.x, 20.0) - 0.25 - 0.12 - noise;
        CHECK(p.snr_db == doctest::Approx(expected).epsilon(1e-9));
        CHECK(p.satellite_offaxis_deg == doctest::Approx(0.0).epsilon(1e-6));
    }
}

TEST_CASE("frequency sweep points are independent of the grid")
{
    auto cfg = default_config().sweeps;
    const auto full = sweep_frequency(cfg);
    cfg.frequency.from_hz = 30e9;
    cfg.frequency.to_hz = 31e9;
    const auto part = sweep_frequency(cfg);
    const auto it = std::find_if(full.begin(), full.end(), [](const SweepPoint& p) { return std::abs(p.x - 30.5e9) < 1.0; });
    REQUIRE(it != full.end());
    CHECK(part[5].snr_db == doctest::Approx(it->snr_db));
}

TEST_CASE("shadowing in sweeps is reproducible per seed")
{
    auto cfg = default_config().sweeps;
    cfg.flags.shadowing = true;
    const auto a = sweep_altitude(cfg);
    const auto b = sweep_altitude(cfg);
    CHECK(a.front().snr_db == b.front().snr_db);
    cfg.seed += 1;
    const auto c = sweep_altitude(cfg);
    CHECK(a.front().snr_db != c.front().snr_db);
}
