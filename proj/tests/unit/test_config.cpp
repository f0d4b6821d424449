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

#include "ntn/assets.hpp"
#include "ntn/config.hpp"
#include "ntn/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace ntn;
using nlohmann::json;

namespace
{

json
default_doc()
{
    return json::parse(detail::default_config_text());
}

template <typename E>
std::string
message_of(const json& doc)
{
    try
    {
        parse_config(doc.dump(), "test");
    }
    catch (const E& e)
    {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("fnv1a64 reference vectors")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hash_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("default configuration")
{
    const auto cfg = default_config();
    CHECK(cfg.schema_version == 1);
    CHECK(cfg.study_cases.size() == 8);
    CHECK(cfg.origin == "builtin:ntn.json");
    CHECK(cfg.sweeps.carrier_ghz == 20.0);
    CHECK(cfg.sweeps.seed == cfg.seed);
    const auto& sc6 = cfg.study_cases[2];
    CHECK(sc6.id == "sc6");
    CHECK(sc6.eirp_dbw == doctest::Approx(4.0 + 10.0 * std::log10(400.0)));
    const auto& sc1_ul = cfg.study_cases[1];
    CHECK(sc1_ul.eirp_dbw == doctest::Approx(33.0 - 30.0 + 43.2));
}

TEST_CASE("hash ignores key order and formatting but not values")
{
    auto doc = default_doc();
    const auto a = parse_config(doc.dump(), "a");
    const auto b = parse_config(doc.dump(2), "b");
    CHECK(a.hash == b.hash);
    doc["seed"] = 1;
    CHECK(parse_config(doc.dump(), "c").hash != a.hash);
}

TEST_CASE("unknown keys are rejected with their path")
{
    auto doc = default_doc();
    doc["study_cases"][0]["colour"] = "blue";
    CHECK(message_of<SchemaError>(doc).find("$.study_cases[0].colour") != std::string::npos);
    doc = default_doc();
    doc["extra"] = 1;
    CHECK(message_of<SchemaError>(doc).find("$.extra") != std::string::npos);
}

TEST_CASE("invalid values are schema violations")
{
    auto doc = default_doc();
    doc["study_cases"][0]["carrier_ghz"] = 500;
    CHECK(message_of<SchemaError>(doc).find("$.study_cases[0].carrier_ghz") != std::string::npos);
    doc = default_doc();
    doc["study_cases"][0]["carrier_ghz"] = "twenty";
    CHECK_FALSE(message_of<SchemaError>(doc).empty());
    doc = default_doc();
    doc["schema_version"] = 2;
    CHECK_FALSE(message_of<SchemaError>(doc).empty());
    doc = default_doc();
    doc["study_cases"][0]["eirp_dbw"] = 40.0;
    CHECK_FALSE(message_of<SchemaError>(doc).empty());
    doc = default_doc();
    doc["study_cases"][0].erase("g_over_t_db_per_k");
    CHECK_FALSE(message_of<SchemaError>(doc).empty());
    doc = default_doc();
    doc["study_cases"][0]["scenario"] = "Ocean";
    CHECK_FALSE(message_of<SchemaError>(doc).empty());
    doc = default_doc();
    doc["sweeps"]["arc"]["steps"] = 1;
    CHECK(message_of<SchemaError>(doc).find("steps") != std::string::npos);
}

TEST_CASE("unreadable configuration")
{
    CHECK_THROWS_AS(parse_config("{not json", "x"), ConfigReadError);
    CHECK_THROWS_AS(load_config("/nonexistent/ntn.json"), ConfigReadError);
}

TEST_CASE("configuration file with relative asset directory")
{
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "ntn_config_test";
    fs::create_directories(dir / "tables");
    {
        std::ofstream f(dir / "tables" / "ionospheric_scintillation.csv");
        f << "parameter,value\np_fluc_4ghz_db,2.2\nmid_latitude_min_deg,20\n"
             "mid_latitude_max_deg,60\nmax_frequency_ghz,6\n";
    }
    auto doc = default_doc();
    doc["asset_dir"] = "tables";
    {
        std::ofstream f(dir / "cfg.json");
        f << doc.dump(2);
    }
    const auto cfg = load_config(dir / "cfg.json");
    REQUIRE(cfg.asset_dir.has_value());
    CHECK(load_propagation_tables(cfg).p_fluc_4ghz_db() == 2.2);
    CHECK(load_propagation_tables(default_config()).p_fluc_4ghz_db() == 1.1);
    fs::remove_all(dir);
}
