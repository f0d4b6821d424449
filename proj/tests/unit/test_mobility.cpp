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

#include "ntn/constants.hpp"
#include "ntn/error.hpp"
#include "ntn/mobility.hpp"

#include <doctest.h>

#include <cmath>

using namespace ntn;

TEST_CASE("mobility model keeps geographic, geocentric and local views consistent")
{
    GeocentricConstantPositionMobilityModel node({45.0, 7.0, 250.0});
    node.set_coordinate_translation_reference_point({{45.0, 7.0, 0.0}});
    const auto local = node.get_local_position();
    CHECK(local.up == doctest::Approx(250.0));
    CHECK(std::abs(local.east) < 1e-6);

    node.set_local_position({100.0, 200.0, 30.0});
    const auto again = node.get_local_position();
    CHECK(again.east == doctest::Approx(100.0));
    CHECK(again.north == doctest::Approx(200.0));
    CHECK(again.up == doctest::Approx(30.0));

    const auto v = node.get_geocentric_position();
    node.set_geocentric_position(v);
    CHECK(distance(node.get_geocentric_position(), v) < 1e-6);
}

TEST_CASE("geocentric positions below the surface are rejected")
{
    GeocentricConstantPositionMobilityModel node;
    CHECK_THROWS_AS(node.set_geocentric_position({1.0, 2.0, 3.0}), GeometryError);
}

TEST_CASE("elevation between two nodes")
{
    const GeocentricConstantPositionMobilityModel ground({0.0, 20.0, 0.0});
    const GeocentricConstantPositionMobilityModel sat({0.0, 20.0, kGeoAltitude});
    CHECK(ground.elevation_angle_to(sat) == doctest::Approx(90.0));
}

TEST_CASE("arc trajectory samples evenly in longitude at constant radius")
{
    ArcTrajectory t;
    t.start_longitude = 8.8;
    t.end_longitude = 14.8;
    t.steps = 61;
    const auto pos = arc_positions(t);
    REQUIRE(pos.size() == 61);
    for (std::size_t i = 0; i < pos.size(); ++i)
    {
        CHECK(pos[i].norm() == doctest::Approx(kEarthRadius + kGeoAltitude).epsilon(1e-12));
        const double lon = std::atan2(pos[i].y, pos[i].x) * 180.0 / 3.141592653589793;
        CHECK(lon == doctest::Approx(8.8 + 0.1 * static_cast<double>(i)).epsilon(1e-12));
        CHECK(std::abs(pos[i].z) < 1e-6);
    }
    t.steps = 1;
    CHECK_THROWS_AS(arc_positions(t), DomainError);
    t.steps = 5;
    t.end_longitude = t.start_longitude;
    CHECK_THROWS_AS(arc_positions(t), DomainError);
}
