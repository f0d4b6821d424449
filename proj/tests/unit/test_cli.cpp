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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result
invoke(std::vector<const char*> args)
{
    args.insert(args.begin(), "ntnsim");
    std::ostringstream out;
    std::ostringstream err;
    const int code = ntn::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string>
data_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
    {
        if (!line.empty() && line[0] != '#')
        {
            lines.push_back(line);
        }
    }
    return lines;
}

} // namespace

TEST_CASE("number formatting")
{
    CHECK(ntn::cli::format_number(1.0) == "1.000000");
    CHECK(ntn::cli::format_number(-1e-9) == "0.000000");
    CHECK(ntn::cli::format_number(-2.5) == "-2.500000");
}

TEST_CASE("calibrate writes a header and one row per case and mode")
{
    const auto r = invoke({"calibrate"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# ntnsim ", 0) == 0);
    CHECK(r.out.find("config_hash=") != std::string::npos);
    CHECK(r.out.find("# command=calibrate shadowing=off") != std::string::npos);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 17);
    CHECK(lines[0] ==
          "case,direction,fspl_db,al_db,sl_db,cnr_db,mode,stated_elevation_deg,elevation_deg,slant_range_m,"
          "fspl_stated_elevation_db");
    const auto pinned = invoke({"calibrate", "--mode", "pinned", "--cases", "sc9"});
    REQUIRE(pinned.code == 0);
    CHECK(data_lines(pinned.out).size() == 3);
}

TEST_CASE("output is byte-identical across runs and sensitive to the seed")
{
    const auto a = invoke({"sweep-altitude", "--seed", "5"});
    const auto b = invoke({"sweep-altitude", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed=5") != std::string::npos);
    const auto fa = invoke({"fading", "--seed", "5"});
    const auto fb = invoke({"fading", "--seed", "5"});
    const auto fc = invoke({"fading", "--seed", "6"});
    REQUIRE(fa.code == 0);
    CHECK(fa.out == fb.out);
    CHECK(fa.out != fc.out);
}

TEST_CASE("sweeps honour the range options")
{
    const auto r = invoke({"sweep-frequency", "--from", "20e9", "--to", "21e9", "--step", "0.5e9"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "x,snr_db");
    CHECK(lines[1].rfind("20000000000.000000,", 0) == 0);
    const auto arc = invoke({"sweep-arc", "--steps", "11"});
    REQUIRE(arc.code == 0);
    CHECK(data_lines(arc.out).size() == 12);
}

TEST_CASE("pattern output")
{
    const auto r = invoke({"pattern", "--radius", "0.3", "--frequency-ghz", "20", "--peak-gain", "39.7",
                           "--from", "0", "--to", "1", "--step", "0.5"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "theta_deg,normalized_gain,gain_dbi");
    CHECK(lines[1] == "0.000000,1.000000,39.700000");
}

TEST_CASE("dump-tables prints embedded tables")
{
    const auto r = invoke({"dump-tables", "--table", "lsp.csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# table=lsp.csv origin=embedded") != std::string::npos);
    CHECK(invoke({"dump-tables", "--table", "nope.csv"}).code == ntn::cli::kDomainError);
}

TEST_CASE("exit codes")
{
    auto r = invoke({"calibrate", "--bogus"});
    CHECK(r.code == ntn::cli::kUsageError);
    CHECK(r.err.rfind("error: code=usage", 0) == 0);
    CHECK(invoke({}).code == ntn::cli::kUsageError);
    CHECK(invoke({"calibrate", "--mode", "guess"}).code == ntn::cli::kUsageError);

    r = invoke({"calibrate", "--config", "/nonexistent/ntn.json"});
    CHECK(r.code == ntn::cli::kConfigUnreadable);
    CHECK(r.err.find("code=config_unreadable") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "ntn_cli_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "bad.json");
        f << R"({"schema_version": 1, "seed": 1, "study_cases": [], "unexpected": true})";
    }
    r = invoke({"calibrate", "--config", (dir / "bad.json").c_str()});
    CHECK(r.code == ntn::cli::kSchemaViolation);
    CHECK(r.err.find("code=schema_violation") != std::string::npos);

    r = invoke({"fading", "--elevation", "0"});
    CHECK(r.code == ntn::cli::kDomainError);
    CHECK(r.err.find("code=domain_error") != std::string::npos);

    r = invoke({"calibrate", "-o", (dir / "missing_dir" / "out.csv").c_str()});
    CHECK(r.code == ntn::cli::kOutputError);

    const auto file = dir / "out.csv";
    r = invoke({"calibrate", "-o", file.c_str()});
    CHECK(r.code == ntn::cli::kOk);
    CHECK(r.out.empty());
    CHECK(std::filesystem::file_size(file) > 0);
    std::filesystem::remove_all(dir);
}
