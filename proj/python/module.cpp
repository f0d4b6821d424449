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

#include "ntn/antenna.hpp"
#include "ntn/bessel.hpp"
#include "ntn/channel_condition.hpp"
#include "ntn/config.hpp"
#include "ntn/error.hpp"
#include "ntn/geodesy.hpp"
#include "ntn/link_budget.hpp"
#include "ntn/propagation.hpp"
#include "ntn/small_scale.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>

namespace py = pybind11;
using namespace py::literals;

namespace
{

ntn::Config
config_from(const std::optional<std::string>& path)
{
    return path ? ntn::load_config(*path) : ntn::default_config();
}

ntn::PropagationContext
context(const std::string& scenario, const std::string& condition, double carrier_ghz,
        double elevation_deg, double ground_latitude_deg)
{
    ntn::PropagationContext ctx;
    ctx.scenario = ntn::parse_scenario(scenario);
    ctx.condition = ntn::parse_condition(condition);
    ctx.carrier_ghz = carrier_ghz;
    ctx.elevation_deg = elevation_deg;
    ctx.ground_latitude_deg = ground_latitude_deg;
    return ctx;
}

py::dict
loss_dict(const ntn::LossBreakdown& l)
{
    return py::dict("fspl_db"_a = l.fspl_db, "sf_db"_a = l.sf_db, "cl_db"_a = l.cl_db,
                    "atmospheric_db"_a = l.atmospheric_db, "ionospheric_db"_a = l.ionospheric_db,
                    "tropospheric_db"_a = l.tropospheric_db, "total_db"_a = l.total_db());
}

} // namespace

PYBIND11_MODULE(ntnchannel, m)
{
    m.doc() = "Non-terrestrial network channel model and link budget";
    m.attr("__version__") = NTN_VERSION;

    static py::exception<ntn::ConfigError> config_error(m, "ConfigError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try
        {
            if (p)
            {
                std::rethrow_exception(p);
            }
        }
        catch (const ntn::ConfigError& e)
        {
            py::set_error(config_error, e.what());
        }
        catch (const ntn::DomainError& e)
        {
            py::set_error(PyExc_ValueError, e.what());
        }
        catch (const ntn::GeometryError& e)
        {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    // geodesy
    m.def("slant_range", &ntn::slant_range, "altitude_m"_a, "elevation_deg"_a);
    m.def(
        "geographic_to_geocentric",
        [](double lat, double lon, double alt) {
            const auto v = ntn::geographic_to_geocentric(ntn::GeoPosition(lat, lon, alt));
            return std::make_tuple(v.x, v.y, v.z);
        },
        "lat"_a, "lon"_a, "alt"_a = 0.0);
    m.def(
        "geocentric_to_geographic",
        [](double x, double y, double z) {
            const auto p = ntn::geocentric_to_geographic({x, y, z});
            return std::make_tuple(p.latitude(), p.longitude(), p.altitude());
        },
        "x"_a, "y"_a, "z"_a);
    m.def(
        "elevation_angle",
        [](std::tuple<double, double, double> ground, std::tuple<double, double, double> platform) {
            return ntn::elevation_angle({std::get<0>(ground), std::get<1>(ground), std::get<2>(ground)},
                                        {std::get<0>(platform), std::get<1>(platform),
                                         std::get<2>(platform)});
        },
        "ground"_a, "platform"_a);

    // channel condition
    m.def("elevation_bucket", &ntn::elevation_bucket, "elevation_deg"_a);
    m.def(
        "los_probability",
        [](const std::string& scenario, double elevation) {
            return ntn::los_probability(ntn::parse_scenario(scenario), elevation);
        },
        "scenario"_a, "elevation_deg"_a);

    // propagation
    m.def("fspl", &ntn::fspl, "distance_m"_a, "frequency_ghz"_a);
    m.def(
        "atmospheric_loss", [](double e, double f) { return ntn::atmospheric_loss(e, f); },
        "elevation_deg"_a, "frequency_ghz"_a);
    m.def(
        "ionospheric_scintillation",
        [](double f, double lat) { return ntn::ionospheric_scintillation(f, lat); },
        "frequency_ghz"_a, "ground_latitude_deg"_a = 0.0);
    m.def(
        "tropospheric_scintillation",
        [](double e, double f) { return ntn::tropospheric_scintillation(e, f); }, "elevation_deg"_a,
        "frequency_ghz"_a);
    m.def(
        "shadow_fading_sigma",
        [](const std::string& s, const std::string& c, double f, double e) {
            return ntn::shadow_fading_sigma(context(s, c, f, e, 0.0));
        },
        "scenario"_a, "condition"_a, "frequency_ghz"_a, "elevation_deg"_a);
    m.def(
        "clutter_loss",
        [](const std::string& s, const std::string& c, double f, double e) {
            return ntn::clutter_loss(context(s, c, f, e, 0.0));
        },
        "scenario"_a, "condition"_a, "frequency_ghz"_a, "elevation_deg"_a);
    m.def(
        "total_loss",
        [](double slant_range_m, const std::string& s, const std::string& c, double f, double e,
           double lat, bool shadowing, std::uint64_t seed) {
            ntn::Rng rng(seed);
            ntn::LossFlags flags;
            flags.shadowing = shadowing;
            return loss_dict(ntn::total_loss_at_range(slant_range_m, context(s, c, f, e, lat), rng, flags));
        },
        "slant_range_m"_a, "scenario"_a, "condition"_a, "frequency_ghz"_a, "elevation_deg"_a,
        "ground_latitude_deg"_a = 0.0, "shadowing"_a = false, "seed"_a = 0);

    // antenna
    m.def("bessel_j1", &ntn::bessel_j1, "x"_a);
    m.def(
        "circular_aperture_gain",
        [](double theta, double radius, double frequency_ghz) {
            return ntn::CircularApertureAntenna(radius, frequency_ghz, 0.0).normalized_gain(theta);
        },
        "theta_deg"_a, "aperture_radius_m"_a, "frequency_ghz"_a);
    m.def("peak_gain_from_aperture", &ntn::peak_gain_from_aperture, "aperture_radius_m"_a,
          "frequency_ghz"_a, "efficiency"_a = ntn::kDefaultApertureEfficiency);
    m.def("aperture_radius_for_gain", &ntn::aperture_radius_for_gain, "peak_gain_dbi"_a,
          "frequency_ghz"_a, "efficiency"_a = ntn::kDefaultApertureEfficiency);
    m.def(
        "upa_element_gain",
        [](double theta, double phi) { return ntn::upa_element_gain(theta, phi, ntn::UpaAntenna{}); },
        "theta_deg"_a, "phi_deg"_a);

    // small scale
    m.def(
        "angular_scaling_factor",
        [](int n, std::optional<double> k, const std::string& kind) {
            return ntn::angular_scaling_factor(
                n, k, kind == "zenith" ? ntn::AngleKind::Zenith : ntn::AngleKind::Azimuth);
        },
        "n_clusters"_a, "k_factor_db"_a = py::none(), "kind"_a = "azimuth");
    m.def(
        "generate_clusters",
        [](const std::string& s, const std::string& c, double f, double e, std::uint64_t seed) {
            const auto& lsp = ntn::LspTable::standard().lookup(
                ntn::parse_scenario(s), ntn::parse_condition(c), ntn::band_for_frequency(f), e);
            ntn::Rng rng(seed);
            const auto clusters = ntn::generate_clusters(lsp, rng);
            return py::dict("delays"_a = clusters.delays, "powers"_a = clusters.powers,
                            "delay_spread"_a = clusters.delay_spread,
                            "k_factor_db"_a = clusters.k_factor_db);
        },
        "scenario"_a, "condition"_a, "frequency_ghz"_a, "elevation_deg"_a, "seed"_a = 0);
    m.def(
        "transfer_function",
        [](std::vector<double> delays, std::vector<double> powers, std::vector<double> freqs,
           std::vector<double> phases) {
            ntn::ClusterSet c;
            c.delays = std::move(delays);
            c.powers = std::move(powers);
            if (c.delays.size() != c.powers.size())
            {
                throw ntn::DomainError("delays and powers must have the same length");
            }
            return ntn::transfer_function(c, freqs, phases);
        },
        "delays"_a, "powers"_a, "frequencies_hz"_a, "phases"_a);

    // link budget
    m.def("cnr_db", &ntn::cnr_db, "eirp_dbw"_a, "g_over_t_db_per_k"_a, "total_loss_db"_a,
          "bandwidth_hz"_a);
    m.def(
        "run_calibration",
        [](const std::string& mode, std::optional<std::string> config) {
            const auto cfg = config_from(config);
            py::list rows;
            for (const auto& r : ntn::run_calibration(cfg.study_cases, ntn::parse_calibration_mode(mode),
                                                      ntn::load_propagation_tables(cfg)))
            {
                rows.append(py::dict("case"_a = r.id, "direction"_a = std::string(to_string(r.direction)),
                                     "mode"_a = std::string(to_string(r.mode)),
                                     "fspl_db"_a = r.budget.losses.fspl_db,
                                     "al_db"_a = r.budget.losses.atmospheric_db,
                                     "sl_db"_a = r.budget.losses.scintillation_db(),
                                     "cnr_db"_a = r.budget.cnr_db,
                                     "fspl_stated_elevation_db"_a = r.fspl_stated_elevation_db));
            }
            return rows;
        },
        "mode"_a = "pinned", "config"_a = py::none());
    m.def(
        "snr_sweep",
        [](const std::string& axis, std::optional<std::string> config) {
            const auto cfg = config_from(config);
            ntn::SweepAxis a;
            if (axis == "frequency")
            {
                a = ntn::SweepAxis::Frequency;
            }
            else if (axis == "arc")
            {
                a = ntn::SweepAxis::Arc;
            }
            else if (axis == "altitude")
            {
                a = ntn::SweepAxis::Altitude;
            }
            else
            {
                throw ntn::DomainError("axis must be frequency, arc or altitude");
            }
            std::vector<std::pair<double, double>> out;
            for (const auto& p : ntn::snr_sweep(a, cfg.sweeps, ntn::load_propagation_tables(cfg)))
            {
                out.emplace_back(p.x, p.snr_db);
            }
            return out;
        },
        "axis"_a, "config"_a = py::none());
}
