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
#include "ntn/error.hpp"
#include "ntn/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ntn;

TEST_CASE("bessel J1 agrees with the standard library")
{
    Rng rng(21);
    double worst = 0.0;
    for (int i = 0; i < 20'000; ++i)
    {
        const double x = 200.0 * rng.uniform();
        worst = std::max(worst, std::abs(bessel_j1(x) - std::cyl_bessel_j(1.0, x)));
    }
    CHECK(worst < 1e-11);
    for (double x : {0.0, 1e-8, 7.99, 8.0, 8.01, 24.99, 25.0, 25.01, 1e3, 1e4})
    {
        CHECK(bessel_j1(x) == doctest::Approx(std::cyl_bessel_j(1.0, x)).epsilon(1e-9).scale(1e-3));
        CHECK(bessel_j1(-x) == -bessel_j1(x));
    }
    CHECK(std::abs(bessel_j1(kBesselJ1FirstZero)) < 1e-14);
}

TEST_CASE("circular aperture pattern closed form")
{
    const CircularApertureAntenna a(0.3, 20.0, 39.7);
    const double k = 2.0 * std::numbers::pi * 20e9 / 299'792'458.0;
    CHECK(a.wavenumber() == doctest::Approx(k).epsilon(1e-12));
    Rng rng(22);
    for (int i = 0; i < 1000; ++i)
    {
        const double theta = 0.01 + 89.99 * rng.uniform();
        const double x = k * 0.3 * std::sin(theta * std::numbers::pi / 180.0);
        const double r = 2.0 * std::cyl_bessel_j(1.0, x) / x;
        CHECK(a.normalized_gain(theta) == doctest::Approx(r * r).epsilon(1e-9).scale(1e-12));
        CHECK(a.normalized_gain(theta) <= 1.0);
    }
    CHECK(a.normalized_gain(0.0) == 1.0);
    CHECK(a.gain_dbi(0.0) == 39.7);
    CHECK(circular_aperture_gain(1.0, a) == a.normalized_gain(1.0));
    CHECK_THROWS_AS(a.normalized_gain(90.5), DomainError);
    CHECK_THROWS_AS(a.normalized_gain(-91.0), DomainError);
}

TEST_CASE("first null and half power width")
{
    for (double radius : {0.3, 1.25, 2.5})
    {
        const CircularApertureAntenna a(radius, 20.0, 0.0);
        const double null_deg = std::asin(kBesselJ1FirstZero / (a.wavenumber() * radius)) * 180.0 / std::numbers::pi;
        CHECK(a.normalized_gain(null_deg) < 1e-9);
        // (2 J1(x)/x)^2 = 1/2 at x = 1.6163.
        const double half_deg = std::asin(1.6163399 / (a.wavenumber() * radius)) * 180.0 / std::numbers::pi;
        CHECK(a.normalized_gain(half_deg) == doctest::Approx(0.5).epsilon(1e-6));
    }
}

TEST_CASE("aperture gain and radius are inverse")
{
    for (double g : {20.0, 39.7, 58.5})
    {
        const double r = aperture_radius_for_gain(g, 20.0);
        CHECK(peak_gain_from_aperture(r, 20.0) == doctest::Approx(g).epsilon(1e-12));
    }
    const double lambda = 299'792'458.0 / 20e9;
    CHECK(peak_gain_from_aperture(1.0, 20.0, 1.0) ==
          doctest::Approx(10.0 * std::log10(std::pow(2.0 * std::numbers::pi / lambda, 2.0))));
    CHECK_THROWS_AS(peak_gain_from_aperture(0.0, 20.0), DomainError);
    CHECK_THROWS_AS(peak_gain_from_aperture(1.0, 20.0, 1.5), DomainError);
    CHECK_THROWS_AS(CircularApertureAntenna(-1.0, 20.0, 0.0), DomainError);
}

TEST_CASE("pointing and off-axis angles")
{
    const CircularApertureAntenna a(1.0, 20.0, 40.0);
    const EcefVector from{0.0, 0.0, 0.0};
    const EcefVector to{10.0, 0.0, 0.0};
    const auto p = a.pointed(from, to);
    CHECK(p.boresight().x == doctest::Approx(1.0));
    CHECK(p.offaxis_angle_to(from, {10.0, 10.0, 0.0}) == doctest::Approx(45.0));
    CHECK(p.offaxis_angle_to(from, to) == 0.0);
    const auto o = a.with_orientation(90.0, 90.0);
    CHECK(o.boresight().y == doctest::Approx(1.0));
    CHECK(effective_offaxis_angle({0.0, 0.0, 1.0}, {0.0, 0.0, -3.0}) == doctest::Approx(180.0));
    CHECK(effective_offaxis_angle({1.0, 0.0, 0.0}, {1.0, 1e-9, 0.0}) == doctest::Approx(1e-9 * 180.0 / std::numbers::pi));
    CHECK_THROWS_AS(effective_offaxis_angle({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), GeometryError);
    CHECK_THROWS_AS(a.with_boresight({0.0, 0.0, 0.0}), GeometryError);
}

TEST_CASE("UPA element pattern")
{
    const UpaAntenna upa;
    CHECK(upa_element_gain(90.0, 0.0, upa) == 8.0);
    CHECK(upa_element_gain(90.0 + 65.0 / 2.0, 0.0, upa) == doctest::Approx(5.0));
    CHECK(upa_element_gain(90.0, 65.0 / 2.0, upa) == doctest::Approx(5.0));
    CHECK(upa_element_gain(0.0, 0.0, upa) == doctest::Approx(8.0 - 12.0 * std::pow(90.0 / 65.0, 2.0)));
    CHECK(upa_element_gain(90.0, -179.0, upa) == doctest::Approx(-22.0));
    CHECK(upa_element_gain(0.0, 170.0, upa) == doctest::Approx(-22.0));
    UpaAntenna array = upa;
    array.rows = 4;
    array.columns = 8;
    CHECK(array.array_peak_gain_dbi() == doctest::Approx(8.0 + 10.0 * std::log10(32.0)));
    array.rows = 0;
    CHECK_THROWS_AS(array.validate(), DomainError);
    CHECK_THROWS_AS(upa_element_gain(190.0, 0.0, upa), DomainError);
}
