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

#include "ntn/mobility.hpp"

#include "ntn/error.hpp"

namespace ntn
{

GeocentricConstantPositionMobilityModel::GeocentricConstantPositionMobilityModel(
    const GeoPosition& position)
    : m_position(position)
{
}

EcefVector
GeocentricConstantPositionMobilityModel::get_geocentric_position() const
{
    return geographic_to_geocentric(m_position);
}

void
GeocentricConstantPositionMobilityModel::set_geocentric_position(const EcefVector& position)
{
    m_position = geocentric_to_geographic(position);
}

TopocentricVector
GeocentricConstantPositionMobilityModel::get_local_position() const
{
    return geographic_to_topocentric(m_position, m_reference);
}

void
GeocentricConstantPositionMobilityModel::set_local_position(const TopocentricVector& position)
{
    m_position = topocentric_to_geographic(position, m_reference);
}

double
GeocentricConstantPositionMobilityModel::elevation_angle_to(
    const GeocentricConstantPositionMobilityModel& platform) const
{
    return elevation_angle(get_geocentric_position(), platform.get_geocentric_position());
}

std::vector<EcefVector>
arc_positions(const ArcTrajectory& t)
{
    if (t.steps < 2)
    {
        throw DomainError("arc trajectory needs at least two steps");
    }
    if (t.start_longitude == t.end_longitude)
    {
        throw DomainError("arc trajectory start and end longitudes coincide");
    }
    std::vector<EcefVector> out;
    out.reserve(static_cast<std::size_t>(t.steps));
    const double span = t.end_longitude - t.start_longitude;
    for (int i = 0; i < t.steps; ++i)
    {
        // Endpoints are hit exactly instead of accumulating a step increment.
        const double lon = t.start_longitude + span * static_cast<double>(i) / (t.steps - 1);
        out.push_back(geographic_to_geocentric(GeoPosition(t.latitude, lon, t.orbit_altitude)));
    }
    return out;
}

} // namespace ntn
