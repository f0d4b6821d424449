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

#pragma once

#include <numbers>

namespace ntn
{

/// Radius of the spherical Earth used by every geometric computation, in meters.
inline constexpr double kEarthRadius = 6'371'000.0;

/// Speed of light in vacuum, m/s.
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// -10 log10 of the Boltzmann constant, dBW/K/Hz.
inline constexpr double kBoltzmannDb = 228.6;

/// Reference temperature for noise figure conversion, K.
inline constexpr double kReferenceTemperature = 290.0;

inline constexpr double kGeoAltitude = 35'786'000.0;

inline constexpr double
deg_to_rad(double deg)
{
    return deg * std::numbers::pi / 180.0;
}

inline constexpr double
rad_to_deg(double rad)
{
    return rad * 180.0 / std::numbers::pi;
}

} // namespace ntn
