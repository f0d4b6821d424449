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

#include <cmath>

namespace ntn
{

/// Geocentric Cartesian (ECEF) vector in meters. The x axis points at 0 degrees
/// longitude on the equator, y at 90 degrees east and z at the North Pole.
struct EcefVector
{
    double x{0.0};
    double y{0.0};
    double z{0.0};

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const EcefVector& o) const { return x * o.x + y * o.y + z * o.z; }

    EcefVector normalized() const;

    friend EcefVector operator+(const EcefVector& a, const EcefVector& b)
    {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend EcefVector operator-(const EcefVector& a, const EcefVector& b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend EcefVector operator*(double s, const EcefVector& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const EcefVector&, const EcefVector&) = default;
};

double distance(const EcefVector& a, const EcefVector& b);

/// Point on or above the spherical Earth.
///
/// Latitude is in [-90, 90] degrees, longitude in [-180, 180) degrees and
/// altitude in meters above the surface. A longitude of exactly 180 is folded
/// to -180. Construction throws DomainError when a field is out of range.
class GeoPosition
{
  public:
    GeoPosition() = default;
    GeoPosition(double latitude_deg, double longitude_deg, double altitude_m);

    double latitude() const { return m_latitude; }
    double longitude() const { return m_longitude; }
    double altitude() const { return m_altitude; }

    friend bool operator==(const GeoPosition&, const GeoPosition&) = default;

  private:
    double m_latitude{0.0};
    double m_longitude{0.0};
    double m_altitude{0.0};
};

/// Anchor of the translation between geographic and local Cartesian frames.
struct ReferencePoint
{
    GeoPosition origin{};
};

/// Local topocentric coordinates (east, north, up) in meters.
struct TopocentricVector
{
    double east{0.0};
    double north{0.0};
    double up{0.0};

    double norm() const { return std::sqrt(east * east + north * north + up * up); }
};

EcefVector geographic_to_geocentric(const GeoPosition& p);

/// Inverse of geographic_to_geocentric. Vectors shorter than the Earth radius
/// (beyond a 1 micrometer rounding allowance) raise GeometryError. At the poles
/// the longitude is reported as 0.
GeoPosition geocentric_to_geographic(const EcefVector& v);

TopocentricVector geographic_to_topocentric(const GeoPosition& p, const ReferencePoint& ref);
GeoPosition topocentric_to_geographic(const TopocentricVector& v, const ReferencePoint& ref);

TopocentricVector geocentric_to_topocentric(const EcefVector& v, const ReferencePoint& ref);
EcefVector topocentric_to_geocentric(const TopocentricVector& v, const ReferencePoint& ref);

/// Elevation of `platform` above the local horizon plane of `ground`, degrees in (-90, 90].
double elevation_angle(const EcefVector& ground, const EcefVector& platform);

/// Line-of-sight distance from a ground terminal at sea level to a platform at
/// altitude `altitude_m` seen at `elevation_deg`.
double slant_range(double altitude_m, double elevation_deg);

/// Earth central angle between the ground terminal and the sub-platform point, degrees.
double central_angle(double altitude_m, double elevation_deg);

/// ECEF position of a platform at `altitude_m` seen from `ground` at the given
/// elevation and azimuth (clockwise from north).
EcefVector place_platform(const GeoPosition& ground,
                          double altitude_m,
                          double elevation_deg,
                          double azimuth_deg = 0.0);

/// Pair geometry between a ground terminal and an NTN platform.
struct LinkGeometry
{
    double slant_range{0.0};
    double elevation{0.0};
    EcefVector ground_position{};
    EcefVector platform_position{};

    static LinkGeometry between(const EcefVector& ground, const EcefVector& platform);
};

} // namespace ntn
