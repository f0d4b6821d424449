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

#include "cli.hpp"

#include "ntn/antenna.hpp"
#include "ntn/assets.hpp"
#include "ntn/config.hpp"
#include "ntn/error.hpp"
#include "ntn/link_budget.hpp"
#include "ntn/small_scale.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ntn::cli
{

namespace
{

constexpr const char* kToolName = "ntnsim";

struct CommonOptions
{
    std::string config;
    std::string output{"-"};
    std::optional<std::uint64_t> seed;
    bool disable_shadowing{false};
    bool disable_fading{false};
};

struct RangeOptions
{
    std::optional<double> from;
    std::optional<double> to;
    std::optional<double> step;
    std::optional<int> steps;
};

struct CalibrateOptions
{
    std::string cases;
    std::string mode{"both"};
    bool pin_3gpp{false};
};

struct PatternOptions
{
    std::string antenna{"satellite"};
    std::optional<double> frequency_ghz;
    std::optional<double> radius_m;
    std::optional<double> peak_gain_dbi;
    double from_deg{-90.0};
    double to_deg{90.0};
    double step_deg{0.05};
};

struct FadingOptions
{
    std::optional<std::string> scenario;
    std::string condition{"NLOS"};
    double carrier_ghz{2.0};
    double elevation_deg{30.0};
    double span_hz{20e6};
    int points{201};
};

struct TablesOptions
{
    std::string table;
};

class OutputError : public Error
{
  public:
    using Error::Error;
};

std::string
escape(std::string_view text)
{
    std::string out;
    for (const char c : text)
    {
        if (c == '"' || c == '\\')
        {
            out += '\\';
            out += c;
        }
        else if (c == '\n' || c == '\r')
        {
            out += ' ';
        }
        else
        {
            out += c;
        }
    }
    return out;
}

int
report(std::ostream& err, int code, std::string_view name, std::string_view message)
{
    err << "error: code=" << name << " message=\"" << escape(message) << "\"\n";
    return code;
}

Config
load(const CommonOptions& common)
{
    Config cfg = common.config.empty() ? default_config() : load_config(common.config);
    if (common.seed)
    {
        cfg.seed = *common.seed;
        cfg.sweeps.seed = *common.seed;
    }
    if (common.disable_shadowing)
    {
        cfg.sweeps.flags.shadowing = false;
    }
    return cfg;
}

std::string
header(const Config& cfg, const std::string& command, const CommonOptions& common)
{
    std::ostringstream h;
    h << "# " << kToolName << ' ' << NTN_VERSION << " config_hash=" << hash_hex(cfg.hash)
      << " seed=" << cfg.seed << '\n';
    h << "# command=" << command << " shadowing=" << (cfg.sweeps.flags.shadowing ? "on" : "off")
      << " fading=" << (common.disable_fading ? "off" : "on") << '\n';
    return h.str();
}

void
emit(const std::string& text, const CommonOptions& common, std::ostream& out)
{
    if (common.output.empty() || common.output == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(common.output, std::ios::binary | std::ios::trunc);
    if (!file)
    {
        throw OutputError("cannot open output file " + common.output);
    }
    file << text;
    file.close();
    if (!file)
    {
        throw OutputError("failed writing output file " + common.output);
    }
}

std::vector<std::string>
split_list(const std::string& text)
{
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (!item.empty())
        {
            items.push_back(item);
        }
    }
    return items;
}

std::string
calibrate(const CommonOptions& common, const CalibrateOptions& opts)
{
    const Config cfg = load(common);
    std::vector<StudyCase> cases;
    if (opts.cases.empty())
    {
        cases = cfg.study_cases;
    }
    else
    {
        for (const auto& id : split_list(opts.cases))
        {
            bool found = false;
            for (const auto& sc : cfg.study_cases)
            {
                if (sc.id == id)
                {
                    cases.push_back(sc);
                    found = true;
                }
            }
            if (!found)
            {
                throw DomainError("unknown study case '" + id + "'");
            }
        }
    }

    std::vector<CalibrationMode> modes;
    const std::string mode = opts.pin_3gpp ? "pinned" : opts.mode;
    if (mode == "both")
    {
        modes = {CalibrationMode::Pinned, CalibrationMode::Computed};
    }
    else
    {
        modes = {parse_calibration_mode(mode)};
    }

    const auto tables = load_propagation_tables(cfg);
    std::ostringstream csv;
    csv << header(cfg, "calibrate", common);
    csv << "case,direction,fspl_db,al_db,sl_db,cnr_db,mode,stated_elevation_deg,elevation_deg,"
           "slant_range_m,fspl_stated_elevation_db\n";
    for (const auto m : modes)
    {
        for (const auto& row : run_calibration(cases, m, tables))
        {
            const auto& l = row.budget.losses;
            csv << row.id << ',' << to_string(row.direction) << ',' << format_number(l.fspl_db) << ','
                << format_number(l.atmospheric_db) << ',' << format_number(l.scintillation_db()) << ','
                << format_number(row.budget.cnr_db) << ',' << to_string(row.mode) << ','
                << format_number(row.stated_elevation_deg) << ','
                << format_number(row.elevation_deg) << ',' << format_number(row.slant_range_m) << ','
                << format_number(row.fspl_stated_elevation_db) << '\n';
        }
    }
    return csv.str();
}

std::string
sweep(SweepAxis axis, const CommonOptions& common, const RangeOptions& range)
{
    Config cfg = load(common);
    auto& s = cfg.sweeps;
    std::string name;
    switch (axis)
    {
    case SweepAxis::Frequency:
        name = "sweep-frequency";
        s.frequency.from_hz = range.from.value_or(s.frequency.from_hz);
        s.frequency.to_hz = range.to.value_or(s.frequency.to_hz);
        s.frequency.step_hz = range.step.value_or(s.frequency.step_hz);
        break;
    case SweepAxis::Arc:
        name = "sweep-arc";
        s.arc.start_longitude_deg = range.from.value_or(s.arc.start_longitude_deg);
        s.arc.end_longitude_deg = range.to.value_or(s.arc.end_longitude_deg);
        s.arc.steps = range.steps.value_or(s.arc.steps);
        break;
    case SweepAxis::Altitude:
        name = "sweep-altitude";
        s.altitude.from_m = range.from.value_or(s.altitude.from_m);
        s.altitude.to_m = range.to.value_or(s.altitude.to_m);
        s.altitude.step_m = range.step.value_or(s.altitude.step_m);
        break;
    }
    const auto tables = load_propagation_tables(cfg);
    const auto points = snr_sweep(axis, s, tables);
    std::ostringstream csv;
    csv << header(cfg, name, common);
    csv << "x,snr_db\n";
    for (const auto& p : points)
    {
        csv << format_number(p.x) << ',' << format_number(p.snr_db) << '\n';
    }
    return csv.str();
}

std::string
pattern(const CommonOptions& common, const PatternOptions& opts)
{
    const Config cfg = load(common);
    ApertureSpec spec;
    if (opts.antenna == "satellite")
    {
        spec = cfg.sweeps.satellite;
    }
    else if (opts.antenna == "terminal")
    {
        spec = cfg.sweeps.terminal;
    }
    else
    {
        throw DomainError("antenna must be 'satellite' or 'terminal'");
    }
    const CircularApertureAntenna antenna(opts.radius_m.value_or(spec.aperture_radius_m),
                                          opts.frequency_ghz.value_or(cfg.sweeps.carrier_ghz),
                                          opts.peak_gain_dbi.value_or(spec.peak_gain_dbi));
    std::ostringstream csv;
    csv << header(cfg, "pattern", common);
    csv << "theta_deg,normalized_gain,gain_dbi\n";
    for (const double theta : sweep_grid(opts.from_deg, opts.to_deg, opts.step_deg))
    {
        csv << format_number(theta) << ',' << format_number(antenna.normalized_gain(theta)) << ','
            << format_number(antenna.gain_dbi(theta)) << '\n';
    }
    return csv.str();
}

std::string
fading(const CommonOptions& common, const FadingOptions& opts)
{
    const Config cfg = load(common);
    if (opts.points < 1)
    {
        throw DomainError("--points must be at least 1");
    }
    const auto scenario = opts.scenario ? parse_scenario(*opts.scenario) : cfg.sweeps.scenario;
    const auto condition = parse_condition(opts.condition);
    if (!(opts.carrier_ghz >= kMinFrequencyGhz && opts.carrier_ghz <= kMaxFrequencyGhz))
    {
        throw DomainError("carrier frequency must be in [0.5, 100] GHz");
    }
    const auto table = cfg.asset_dir ? LspTable::from_assets(AssetStore::with_overrides(*cfg.asset_dir))
                                     : LspTable::standard();
    const auto& lsp = table.lookup(scenario, condition, band_for_frequency(opts.carrier_ghz),
                                   opts.elevation_deg);

    Rng rng(cfg.seed);
    ClusterSet clusters;
    if (common.disable_fading)
    {
        clusters.delays = {0.0};
        clusters.powers = {1.0};
    }
    else
    {
        clusters = generate_clusters(lsp, rng);
    }
    std::vector<double> freqs(static_cast<std::size_t>(opts.points));
    for (std::size_t i = 0; i < freqs.size(); ++i)
    {
        freqs[i] = opts.points == 1 ? 0.0 : opts.span_hz * static_cast<double>(i) / (opts.points - 1);
    }
    const auto h = transfer_function(clusters, freqs, rng);

    std::ostringstream csv;
    csv << header(cfg, "fading", common);
    csv << "# key=" << to_string(lsp.key) << " delay_spread_ns="
        << format_number(clusters.delay_spread * 1e9) << '\n';
    csv << "cluster,delay_ns,power\n";
    for (std::size_t n = 0; n < clusters.size(); ++n)
    {
        csv << n << ',' << format_number(clusters.delays[n] * 1e9) << ','
            << format_number(clusters.powers[n]) << '\n';
    }
    csv << '\n';
    csv << "frequency_offset_hz,abs_h,abs_h_db\n";
    for (std::size_t i = 0; i < freqs.size(); ++i)
    {
        const double mag = std::abs(h[i]);
        csv << format_number(freqs[i]) << ',' << format_number(mag) << ','
            << format_number(20.0 * std::log10(mag)) << '\n';
    }
    return csv.str();
}

std::string
dump_tables(const CommonOptions& common, const TablesOptions& opts)
{
    const Config cfg = load(common);
    const AssetStore store =
        cfg.asset_dir ? AssetStore::with_overrides(*cfg.asset_dir) : AssetStore::from_environment();
    std::ostringstream text;
    text << header(cfg, "dump-tables", common);
    bool any = false;
    for (const auto& name : store.names())
    {
        if (!opts.table.empty() && opts.table != name)
        {
            continue;
        }
        any = true;
        // Parsing validates the table before it is shown.
        store.table(name);
        text << "# table=" << name << " origin=" << store.origin(name) << '\n';
        text << store.text(name);
        if (!store.text(name).empty() && store.text(name).back() != '\n')
        {
            text << '\n';
        }
    }
    if (!any)
    {
        throw DomainError("unknown table '" + opts.table + "'");
    }
    return text.str();
}

void
add_common(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--config", common.config,
                    "JSON configuration file (default: the built-in configuration)");
    cmd->add_option("-o,--output", common.output, "Output file, '-' for standard output");
    cmd->add_option("--seed", common.seed, "Override the configuration seed");
    cmd->add_flag("--disable-shadowing", common.disable_shadowing, "Force shadow fading off");
    cmd->add_flag("--disable-fading", common.disable_fading, "Disable small-scale fading");
}

} // namespace

std::string
format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    if (s == "-0.000000")
    {
        s = "0.000000";
    }
    return s;
}

int
run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-terrestrial network channel model: calibration, SNR sweeps, antenna "
                 "patterns and fading traces.\n\nTables are embedded; set NTN_ASSET_DIR to a "
                 "directory of CSV files to override them.",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(NTN_VERSION));

    CommonOptions common;
    CalibrateOptions cal;
    RangeOptions freq_range;
    RangeOptions arc_range;
    RangeOptions alt_range;
    PatternOptions pat;
    FadingOptions fad;
    TablesOptions tab;

    auto* c_cal = app.add_subcommand("calibrate", "Link budget of the calibration study cases");
    add_common(c_cal, common);
    c_cal->add_option("--cases", cal.cases, "Comma separated study case ids (default: all)");
    c_cal->add_option("--mode", cal.mode, "pinned, computed or both")
        ->check(CLI::IsMember({"pinned", "computed", "both"}));
    c_cal->add_flag("--pin-3gpp", cal.pin_3gpp, "Same as --mode pinned");

    auto* c_freq = app.add_subcommand("sweep-frequency", "SNR versus carrier frequency (x in Hz)");
    add_common(c_freq, common);
    c_freq->add_option("--from", freq_range.from, "First frequency, Hz");
    c_freq->add_option("--to", freq_range.to, "Last frequency, Hz");
    c_freq->add_option("--step", freq_range.step, "Frequency step, Hz");

    auto* c_arc = app.add_subcommand("sweep-arc", "SNR along a GEO arc (x is longitude in degrees)");
    add_common(c_arc, common);
    c_arc->add_option("--from", arc_range.from, "Start longitude, degrees");
    c_arc->add_option("--to", arc_range.to, "End longitude, degrees");
    c_arc->add_option("--steps", arc_range.steps, "Number of positions (>= 2)");

    auto* c_alt = app.add_subcommand("sweep-altitude", "SNR versus platform altitude (x in m)");
    add_common(c_alt, common);
    c_alt->add_option("--from", alt_range.from, "Lowest altitude, m");
    c_alt->add_option("--to", alt_range.to, "Highest altitude, m");
    c_alt->add_option("--step", alt_range.step, "Altitude step, m");

    auto* c_pat = app.add_subcommand("pattern", "Circular aperture gain versus off-boresight angle");
    add_common(c_pat, common);
    c_pat->add_option("--antenna", pat.antenna, "satellite or terminal (from the sweep config)");
    c_pat->add_option("--frequency-ghz", pat.frequency_ghz, "Operating frequency, GHz");
    c_pat->add_option("--radius", pat.radius_m, "Aperture radius, m");
    c_pat->add_option("--peak-gain", pat.peak_gain_dbi, "Peak gain, dBi");
    c_pat->add_option("--from", pat.from_deg, "First angle, degrees");
    c_pat->add_option("--to", pat.to_deg, "Last angle, degrees");
    c_pat->add_option("--step", pat.step_deg, "Angle step, degrees");

    auto* c_fad = app.add_subcommand("fading", "Cluster delays/powers and |H(f)| of one realization");
    add_common(c_fad, common);
    c_fad->add_option("--scenario", fad.scenario, "DenseUrban, Urban, Suburban or Rural");
    c_fad->add_option("--condition", fad.condition, "LOS or NLOS");
    c_fad->add_option("--carrier-ghz", fad.carrier_ghz, "Carrier frequency, GHz (selects the band)");
    c_fad->add_option("--elevation", fad.elevation_deg, "Elevation angle, degrees");
    c_fad->add_option("--span", fad.span_hz, "Frequency span of the trace, Hz");
    c_fad->add_option("--points", fad.points, "Number of frequency points");

    auto* c_tab = app.add_subcommand("dump-tables", "Print the active tables with provenance");
    add_common(c_tab, common);
    c_tab->add_option("--table", tab.table, "Only this table (file name)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e)
    {
        return report(err, kUsageError, "usage", e.what());
    }

    try
    {
        std::string text;
        if (c_cal->parsed())
        {
            text = calibrate(common, cal);
        }
        else if (c_freq->parsed())
        {
            text = sweep(SweepAxis::Frequency, common, freq_range);
        }
        else if (c_arc->parsed())
        {
            text = sweep(SweepAxis::Arc, common, arc_range);
        }
        else if (c_alt->parsed())
        {
            text = sweep(SweepAxis::Altitude, common, alt_range);
        }
        else if (c_pat->parsed())
        {
            text = pattern(common, pat);
        }
        else if (c_fad->parsed())
        {
            text = fading(common, fad);
        }
        else
        {
            text = dump_tables(common, tab);
        }
        emit(text, common, out);
        return kOk;
    }
    catch (const ConfigReadError& e)
    {
        return report(err, kConfigUnreadable, "config_unreadable", e.what());
    }
    catch (const ConfigError& e)
    {
        return report(err, kSchemaViolation, "schema_violation", e.what());
    }
    catch (const DomainError& e)
    {
        return report(err, kDomainError, "domain_error", e.what());
    }
    catch (const GeometryError& e)
    {
        return report(err, kDomainError, "domain_error", e.what());
    }
    catch (const OutputError& e)
    {
        return report(err, kOutputError, "output_error", e.what());
    }
    catch (const std::exception& e)
    {
        return report(err, kInternalError, "internal", e.what());
    }
}

} // namespace ntn::cli
