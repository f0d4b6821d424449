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

#include "ntn/channel_condition.hpp"
#include "ntn/error.hpp"
#include "ntn/propagation.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ntn;

namespace
{

PropagationContext
ctx(NtnScenario s, LosCondition c, double f, double e, double lat = 0.0)
{
    PropagationContext p;
    p.scenario = s;
    p.condition = c;
    p.carrier_ghz = f;
    p.elevation_deg = e;
    p.ground_latitude_deg = lat;
    return p;
}

} // namespace

TEST_CASE("free-space path loss")
{
    // 20 log10(4 pi d f / c) with d in m and f in Hz.
    for (double f : {2.0, 20.0, 30.0})
    {
        for (double d : {1e3, 600e3, 35'786e3})
        {
            const double expected = 20.0 * std::log10(4.0 * std::numbers::pi * d * f * 1e9 / 299'792'458.0);
            CHECK(fspl(d, f) == doctest::Approx(expected).epsilon(1e-4));
        }
    }
    CHECK(fspl(2000.0, 2.0) - fspl(1000.0, 2.0) == doctest::Approx(20.0 * std::log10(2.0)));
    CHECK_THROWS_AS(fspl(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(fspl(1e3, 0.1), DomainError);
    CHECK_THROWS_AS(fspl(1e3, 120.0), DomainError);
}

TEST_CASE("band selection")
{
    CHECK(band_for_frequency(2.0) == Band::S);
    CHECK(band_for_frequency(5.99) == Band::S);
    CHECK(band_for_frequency(6.0) == Band::Ka);
    CHECK(band_for_frequency(30.0) == Band::Ka);
    CHECK(parse_band(to_string(Band::Ka)) == Band::Ka);
    CHECK_THROWS_AS(parse_band("X"), DomainError);
}

TEST_CASE("shadow fading and clutter loss tables")
{
    CHECK(shadow_fading_sigma(ctx(NtnScenario::DenseUrban, LosCondition::Los, 2.0, 30.0)) == 2.9);
    CHECK(shadow_fading_sigma(ctx(NtnScenario::DenseUrban, LosCondition::Nlos, 2.0, 27.0)) == 12.4);
    CHECK(clutter_loss(ctx(NtnScenario::DenseUrban, LosCondition::Nlos, 2.0, 30.0)) == 29.0);
    CHECK(clutter_loss(ctx(NtnScenario::DenseUrban, LosCondition::Los, 2.0, 30.0)) == 0.0);
    CHECK(clutter_loss(ctx(NtnScenario::Urban, LosCondition::Nlos, 20.0, 50.0)) == 34.6);
}

TEST_CASE("shadow fading samples have the tabulated spread")
{
    const auto c = ctx(NtnScenario::DenseUrban, LosCondition::Nlos, 2.0, 30.0);
    Rng rng(8);
    constexpr int n = 100'000;
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i)
    {
        const double v = sample_shadow_fading(c, rng);
        s += v;
        s2 += v * v;
    }
    CHECK(std::abs(s / n) < 0.1);
    CHECK(std::sqrt(s2 / n) == doctest::Approx(12.4).epsilon(0.01));
}

TEST_CASE("atmospheric loss scales with the cosecant of elevation")
{
    const auto& zen = PropagationTables::standard();
    CHECK(zen.zenith_attenuation(20.0) == doctest::Approx(0.25));
    CHECK(zen.zenith_attenuation(20.5) == doctest::Approx(0.5 * (0.25 + 0.3362)));
    CHECK(zen.zenith_attenuation(0.5) == zen.zenith_curve().front().second);
    CHECK(atmospheric_loss(90.0, 20.0) == doctest::Approx(0.25));
    CHECK(atmospheric_loss(30.0, 20.0) == doctest::Approx(0.5));
    CHECK(atmospheric_loss(10.0, 20.0) == doctest::Approx(0.25 / std::sin(10.0 * std::numbers::pi / 180.0)));
    // Neither above 10 GHz nor below 10 degrees.
    CHECK(atmospheric_loss(45.0, 2.0) == 0.0);
    CHECK(atmospheric_loss(5.0, 2.0) > 0.0);
    CHECK_THROWS_AS(atmospheric_loss(0.0, 20.0), DomainError);
    // The 60 GHz oxygen line dominates the curve.
    CHECK(zen.zenith_attenuation(60.0) > 10.0 * zen.zenith_attenuation(50.0));
}

TEST_CASE("ionospheric scintillation")
{
    const double p = PropagationTables::standard().p_fluc_4ghz_db();
    for (double f : {0.5, 1.0, 2.0, 4.0, 5.9})
    {
        CHECK(ionospheric_scintillation(f, 0.0) ==
              doctest::Approx(std::pow(4.0 / f, 1.5) * p / std::sqrt(2.0)).epsilon(1e-12));
    }
    CHECK(ionospheric_scintillation(2.0, 0.0) == doctest::Approx(2.2).epsilon(0.02));
    CHECK(ionospheric_scintillation(2.0, 20.0) == 0.0);
    CHECK(ionospheric_scintillation(2.0, -45.0) == 0.0);
    CHECK(ionospheric_scintillation(2.0, 60.0) == 0.0);
    CHECK(ionospheric_scintillation(2.0, 61.0) > 0.0);
    CHECK(ionospheric_scintillation(2.0, -19.9) > 0.0);
    CHECK(ionospheric_scintillation(20.0, 0.0) == 0.0);
    auto t = PropagationTables::standard();
    t.set_p_fluc_4ghz_db(2.0 * p);
    CHECK(ionospheric_scintillation(2.0, 0.0, t) == doctest::Approx(2.0 * ionospheric_scintillation(2.0, 0.0)));
}

TEST_CASE("tropospheric scintillation by elevation bucket")
{
    CHECK(tropospheric_scintillation(10.0, 20.0) == doctest::Approx(1.08));
    CHECK(tropospheric_scintillation(30.0, 20.0) == doctest::Approx(0.30));
    CHECK(tropospheric_scintillation(88.0, 30.0) == doctest::Approx(0.12));
    CHECK(tropospheric_scintillation(30.0, 2.0) == 0.0);
    double prev = 1e9;
    for (int b = 10; b <= 90; b += 10)
    {
        const double v = tropospheric_scintillation(b, 20.0);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("total loss sums the enabled components")
{
    Rng rng(9);
    const auto c = ctx(NtnScenario::Urban, LosCondition::Nlos, 20.0, 30.0, 0.0);
    const auto b = total_loss_at_range(1e6, c, rng, LossFlags::deterministic());
    CHECK(b.sf_db == 0.0);
    CHECK(b.fspl_db == doctest::Approx(fspl(1e6, 20.0)));
    CHECK(b.cl_db == clutter_loss(c));
    CHECK(b.atmospheric_db == doctest::Approx(atmospheric_loss(30.0, 20.0)));
    CHECK(b.ionospheric_db == 0.0);
    CHECK(b.tropospheric_db == doctest::Approx(0.30));
    CHECK(b.total_db() == doctest::Approx(b.fspl_db + b.cl_db + b.atmospheric_db + b.tropospheric_db));

    LossFlags none{false, false, false, false, false};
    const auto only_fspl = total_loss_at_range(1e6, c, rng, none);
    CHECK(only_fspl.total_db() == only_fspl.fspl_db);
}

TEST_CASE("loss components are non-negative except shadow fading")
{
    Rng rng(10);
    for (int i = 0; i < 2000; ++i)
    {
        const auto s = kAllScenarios[rng.next() % 4];
        const auto cond = rng.uniform() < 0.5 ? LosCondition::Los : LosCondition::Nlos;
        const double f = 0.5 + 99.5 * rng.uniform();
        const double e = 0.5 + 89.5 * rng.uniform();
        const double lat = -90.0 + 180.0 * rng.uniform();
        const auto b = total_loss_at_range(1e5 + 4e7 * rng.uniform(), ctx(s, cond, f, e, lat), rng);
        CHECK(b.fspl_db > 0.0);
        CHECK(b.cl_db >= 0.0);
        CHECK(b.atmospheric_db >= 0.0);
        CHECK(b.ionospheric_db >= 0.0);
        CHECK(b.tropospheric_db >= 0.0);
    }
}

TEST_CASE("context validation")
{
    Rng rng(1);
    CHECK_THROWS_AS(total_loss_at_range(1e6, ctx(NtnScenario::Rural, LosCondition::Los, 2.0, 0.0), rng),
                    DomainError);
    CHECK_THROWS_AS(total_loss_at_range(1e6, ctx(NtnScenario::Rural, LosCondition::Los, 200.0, 30.0), rng),
                    DomainError);
}

TEST_CASE("shadow fading cache redraws only on a new channel condition")
{
    ShadowFadingCache cache;
    Rng rng(2);
    const auto c = ctx(NtnScenario::DenseUrban, LosCondition::Los, 2.0, 30.0);
    ChannelCondition cond{LosCondition::Nlos, 0.0, 0.1, 1};
    const double a = cache.get(0, cond, c, rng);
    CHECK(cache.get(0, cond, c, rng) == a);
    cond.generation = 2;
    CHECK(cache.get(0, cond, c, rng) != a);
}
