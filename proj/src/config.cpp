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

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ntn
{

namespace
{

using nlohmann::json;

/// Cursor over a JSON object that records which keys were consumed.
class Node
{
  public:
    Node(const json& value, std::string path) : m_value(value), m_path(std::move(path))
    {
        if (!m_value.is_object())
        {
            fail("expected an object");
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError(m_path + ": " + what);
    }

    bool has(const std::string& key) const { return m_value.contains(key); }

    const json& raw(const std::string& key)
    {
        if (!has(key))
        {
            throw SchemaError(m_path + "." + key + ": required field missing");
        }
        m_used.insert(key);
        return m_value.at(key);
    }

    double number(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_number())
        {
            throw SchemaError(m_path + "." + key + ": expected a number");
        }
        return v.get<double>();
    }

    std::optional<double> optional_number(const std::string& key)
    {
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    double number_or(const std::string& key, double fallback)
    {
        return has(key) ? number(key) : fallback;
    }

    std::string text(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_string())
        {
            throw SchemaError(m_path + "." + key + ": expected a string");
        }
        return v.get<std::string>();
    }

    bool boolean_or(const std::string& key, bool fallback)
    {
        if (!has(key))
        {
            return fallback;
        }
        const auto& v = raw(key);
        if (!v.is_boolean())
        {
            throw SchemaError(m_path + "." + key + ": expected true or false");
        }
        return v.get<bool>();
    }

    Node child(const std::string& key) { return Node(raw(key), m_path + "." + key); }

    std::string path_of(const std::string& key) const { return m_path + "." + key; }

    /// Rejects keys that were never read.
    void finish() const
    {
        for (const auto& [key, value] : m_value.items())
        {
            if (!m_used.contains(key))
            {
                throw SchemaError(m_path + "." + key + ": unknown field");
            }
        }
    }

  private:
    const json& m_value;
    std::string m_path;
    std::set<std::string> m_used;
};

template <typename F>
auto
in_field(const std::string& path, F&& f) -> decltype(f())
{
    try
    {
        return f();
    }
    catch (const SchemaError&)
    {
        throw;
    }
    catch (const Error& e)
    {
        throw SchemaError(path + ": " + e.what());
    }
}

GeoPosition
read_position(Node node)
{
    const double lat = node.number("lat");
    const double lon = node.number("lon");
    const double alt = node.number_or("alt", 0.0);
    node.finish();
    return in_field(node.path_of("lat"), [&] { return GeoPosition(lat, lon, alt); });
}

double
positive(Node& node, const std::string& key)
{
    const double v = node.number(key);
    if (!(v > 0.0))
    {
        throw SchemaError(node.path_of(key) + ": must be positive");
    }
    return v;
}

StudyCase
read_study_case(Node node)
{
    StudyCase sc;
    sc.id = node.text("id");
    sc.direction = in_field(node.path_of("direction"),
                            [&] { return parse_direction(node.text("direction")); });
    sc.orbit = node.text("orbit");
    sc.altitude_m = positive(node, "altitude_m");
    sc.stated_elevation_deg = node.number("stated_elevation_deg");
    sc.fspl_consistent_elevation_deg = node.number("fspl_consistent_elevation_deg");
    for (const auto* key : {"stated_elevation_deg", "fspl_consistent_elevation_deg"})
    {
        const double e = node.number(key);
        if (!(e > 0.0 && e <= 90.0))
        {
            throw SchemaError(node.path_of(key) + ": must be in (0, 90]");
        }
    }
    sc.carrier_ghz = node.number("carrier_ghz");
    if (!(sc.carrier_ghz >= kMinFrequencyGhz && sc.carrier_ghz <= kMaxFrequencyGhz))
    {
        throw SchemaError(node.path_of("carrier_ghz") + ": must be in [0.5, 100]");
    }
    sc.bandwidth_hz = positive(node, "bandwidth_hz");
    sc.terminal_antenna = node.text("terminal_antenna");
    sc.ground = read_position(node.child("ground"));
    sc.scenario = in_field(node.path_of("scenario"),
                           [&] { return parse_scenario(node.text("scenario")); });

    const int eirp_forms = int(node.has("eirp_dbw")) + int(node.has("eirp_density_dbw_per_mhz")) +
                           int(node.has("tx_power_dbm") || node.has("tx_gain_dbi"));
    if (eirp_forms != 1)
    {
        node.fail("give exactly one of eirp_dbw, eirp_density_dbw_per_mhz or "
                  "tx_power_dbm + tx_gain_dbi");
    }
    if (node.has("eirp_dbw"))
    {
        sc.eirp_dbw = node.number("eirp_dbw");
    }
    else if (node.has("eirp_density_dbw_per_mhz"))
    {
        sc.eirp_dbw = eirp_from_density(node.number("eirp_density_dbw_per_mhz"), sc.bandwidth_hz);
    }
    else
    {
        sc.eirp_dbw = eirp_from_power(node.number("tx_power_dbm"), node.number("tx_gain_dbi"));
    }

    const int gt_forms = int(node.has("g_over_t_db_per_k")) +
                         int(node.has("rx_gain_dbi") || node.has("noise_temperature_k"));
    if (gt_forms != 1)
    {
        node.fail("give exactly one of g_over_t_db_per_k or rx_gain_dbi + noise_temperature_k");
    }
    if (node.has("g_over_t_db_per_k"))
    {
        sc.g_over_t_db_per_k = node.number("g_over_t_db_per_k");
    }
    else
    {
        const double gain = node.number("rx_gain_dbi");
        const double temperature = positive(node, "noise_temperature_k");
        sc.g_over_t_db_per_k = g_over_t_from(gain, temperature);
    }

    sc.other_losses_db = node.number_or("other_losses_db", 0.0);
    if (!(sc.other_losses_db >= 0.0))
    {
        throw SchemaError(node.path_of("other_losses_db") + ": must be non-negative");
    }
    if (node.has("pinned"))
    {
        Node pinned = node.child("pinned");
        sc.pinned.slant_range_m = pinned.optional_number("slant_range_m");
        sc.pinned.al_db = pinned.optional_number("al_db");
        sc.pinned.sl_db = pinned.optional_number("sl_db");
        if (sc.pinned.slant_range_m && !(*sc.pinned.slant_range_m > 0.0))
        {
            throw SchemaError(pinned.path_of("slant_range_m") + ": must be positive");
        }
        pinned.finish();
    }
    node.finish();
    return sc;
}

ApertureSpec
read_aperture(Node node)
{
    ApertureSpec a;
    a.peak_gain_dbi = node.number("peak_gain_dbi");
    a.aperture_radius_m = positive(node, "aperture_radius_m");
    node.finish();
    return a;
}

SweepConfig
read_sweeps(Node node)
{
    SweepConfig s;
    s.scenario = in_field(node.path_of("scenario"),
                          [&] { return parse_scenario(node.text("scenario")); });
    s.carrier_ghz = node.number("carrier_ghz");
    s.tx_power_dbm = node.number("tx_power_dbm");
    s.bandwidth_hz = positive(node, "bandwidth_hz");
    s.noise_figure_db = node.number("noise_figure_db");
    s.antenna_temperature_k = node.number("antenna_temperature_k");
    if (!(s.antenna_temperature_k >= 0.0) || !(s.noise_figure_db >= 0.0))
    {
        node.fail("noise figure and antenna temperature must be non-negative");
    }
    s.flags.shadowing = node.boolean_or("shadowing", false);
    s.satellite = read_aperture(node.child("satellite_antenna"));
    s.terminal = read_aperture(node.child("terminal_antenna"));

    {
        Node f = node.child("frequency");
        s.frequency.altitude_m = positive(f, "altitude_m");
        s.frequency.elevation_deg = f.number("elevation_deg");
        s.frequency.ground = read_position(f.child("ground"));
        s.frequency.from_hz = positive(f, "from_hz");
        s.frequency.to_hz = positive(f, "to_hz");
        s.frequency.step_hz = positive(f, "step_hz");
        f.finish();
    }
    {
        Node a = node.child("arc");
        s.arc.altitude_m = positive(a, "altitude_m");
        s.arc.latitude_deg = a.number("latitude_deg");
        s.arc.start_longitude_deg = a.number("start_longitude_deg");
        s.arc.end_longitude_deg = a.number("end_longitude_deg");
        const double steps = a.number("steps");
        if (!(steps >= 2.0) || steps != std::floor(steps))
        {
            throw SchemaError(a.path_of("steps") + ": must be an integer >= 2");
        }
        s.arc.steps = static_cast<int>(steps);
        s.arc.ground = read_position(a.child("ground"));
        a.finish();
    }
    {
        Node a = node.child("altitude");
        s.altitude.elevation_deg = a.number("elevation_deg");
        s.altitude.ground = read_position(a.child("ground"));
        s.altitude.from_m = positive(a, "from_m");
        s.altitude.to_m = positive(a, "to_m");
        s.altitude.step_m = positive(a, "step_m");
        a.finish();
    }
    node.finish();
    return s;
}

} // namespace

std::uint64_t
fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : data)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string
hash_hex(std::uint64_t hash)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Config
parse_config(std::string_view text, const std::string& origin, const std::filesystem::path& base_dir)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ConfigReadError(origin + ": invalid JSON: " + e.what());
    }

    Config cfg;
    cfg.origin = origin;
    cfg.hash = fnv1a64(doc.dump());

    Node root(doc, "$");
    const double version = root.number("schema_version");
    if (version != kConfigSchemaVersion)
    {
        throw SchemaError("$.schema_version: unsupported version " + doc["schema_version"].dump());
    }
    cfg.schema_version = kConfigSchemaVersion;

    const auto& seed = root.raw("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    {
        throw SchemaError("$.seed: expected a non-negative integer");
    }
    cfg.seed = seed.get<std::uint64_t>();

    if (root.has("asset_dir"))
    {
        std::filesystem::path dir = root.text("asset_dir");
        cfg.asset_dir = dir.is_absolute() ? dir : base_dir / dir;
    }

    const auto& cases = root.raw("study_cases");
    if (!cases.is_array())
    {
        throw SchemaError("$.study_cases: expected an array");
    }
    for (std::size_t i = 0; i < cases.size(); ++i)
    {
        cfg.study_cases.push_back(
            read_study_case(Node(cases[i], "$.study_cases[" + std::to_string(i) + "]")));
    }
    cfg.sweeps = read_sweeps(root.child("sweeps"));
    cfg.sweeps.seed = cfg.seed;
    root.finish();
    return cfg;
}

Config
load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigReadError("cannot read configuration file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
    {
        throw ConfigReadError("error while reading " + path.string());
    }
    return parse_config(buf.str(), path.string(), path.parent_path());
}

Config
default_config()
{
    return parse_config(detail::default_config_text(), "builtin:ntn.json");
}

PropagationTables
load_propagation_tables(const Config& cfg)
{
    if (cfg.asset_dir)
    {
        return PropagationTables::from_assets(AssetStore::with_overrides(*cfg.asset_dir));
    }
    return PropagationTables::standard();
}

} // namespace ntn
