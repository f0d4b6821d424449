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

#include "ntn/constants.hpp"
#include "ntn/geodesy.hpp"

#include <vector>

namespace ntn
{

/// Constant-position node placed with real-world coordinates.
///
/// The position is stored in geographic form. Local simulation coordinates are
/// topocentric coordinates relative to a translation reference point, which
/// defaults to (0, 0, 0).
class GeocentricConstantPositionMobilityModel
{
  public:
    GeocentricConstantPositionMobilityModel() = default;
    explicit GeocentricConstantPositionMobilityModel(const GeoPosition& position);

    GeoPosition get_geographic_position() const { return m_position; }
    void set_geographic_position(const GeoPosition& position) { m_position = position; }

    EcefVector get_geocentric_position() const;
    /// Throws GeometryError when `position` lies below the surface.
    void set_geocentric_position(const EcefVector& position);

    TopocentricVector get_local_position() const;
    void set_local_position(const TopocentricVector& position);

    ReferencePoint get_coordinate_translation_reference_point() const { return m_reference; }
    void set_coordinate_translation_reference_point(const ReferencePoint& ref) { m_reference = ref; }

    /// Elevation of `platform` seen from this node.
    double elevation_angle_to(const GeocentricConstantPositionMobilityModel& platform) const;

  private:
    GeoPosition m_position{};
    ReferencePoint m_reference{};
};

/// Constant-altitude, constant-latitude arc swept in longitude.
struct ArcTrajectory
{
    double orbit_altitude{kGeoAltitude};
    double start_longitude{0.0};
    double end_longitude{0.0};
    double latitude{0.0};
    int steps{2};
};

/// `steps` positions uniformly spaced in longitude, endpoints included.
std::vector<EcefVector> arc_positions(const ArcTrajectory& t);

} // namespace ntn
