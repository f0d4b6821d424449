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

#include "ntn/geodesy.hpp"

#include "ntn/constants.hpp"
#include "ntn/error.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace ntn
{

namespace
{

// Slack allowed when a surface point is re-read from floating point ECEF.
constexpr double kBelowSurfaceTolerance = 1e-6;

struct EnuBasis
{
    EcefVector east;
    EcefVector north;
    EcefVector up;
};

EnuBasis
enu_basis(double latitude_deg, double longitude_deg)
{
    const double lat = deg_to_rad(latitude_deg);
    const double lon = deg_to_rad(longitude_deg);
    const double sin_lat = std::sin(lat);
    const double cos_lat = std::cos(lat);
    const double sin_lon = std::sin(lon);
    const double cos_lon = std::cos(lon);
    return {
        {-sin_lon, cos_lon, 0.0},
        {-sin_lat * cos_lon, -sin_lat * sin_lon, cos_lat},
        {cos_lat * cos_lon, cos_lat * sin_lon, sin_lat},
    };
}

EcefVector
cross(const EcefVector& a, const EcefVector& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

} // namespace

EcefVector
EcefVector::normalized() const
{
    const double n = norm();
    if (n == 0.0)
    {
        throw GeometryError("cannot normalize a zero vector");
    }
    return (1.0 / n) * *this;
}

double
distance(const EcefVector& a, const EcefVector& b)
{
    return (a - b).norm();
}

GeoPosition::GeoPosition(double latitude_deg, double longitude_deg, double altitude_m)
    : m_latitude(latitude_deg),
      m_longitude(longitude_deg),
      m_altitude(altitude_m)
{
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
    {
        throw DomainError("latitude out of [-90, 90]: " + std::to_string(latitude_deg));
    }
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0))
    {
        throw DomainError("longitude out of [-180, 180): " + std::to_string(longitude_deg));
    }
    if (!(altitude_m >= 0.0) || !std::isfinite(altitude_m))
    {
        throw DomainError("altitude must be non-negative: " + std::to_string(altitude_m));
    }
    if (m_longitude == 180.0)
    {
        m_longitude = -180.0;
    }
}

EcefVector
geographic_to_geocentric(const GeoPosition& p)
{
    const double r = kEarthRadius + p.altitude();
    const double lat = deg_to_rad(p.latitude());
    const double lon = deg_to_rad(p.longitude());
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon), r * std::sin(lat)};
}

GeoPosition
geocentric_to_geographic(const EcefVector& v)
{
    const double r = v.norm();
    if (r < kEarthRadius - kBelowSurfaceTolerance)
    {
        throw GeometryError("position is below the Earth surface (norm " + std::to_string(r) +
                            " m)");
    }
    const double horizontal = std::hypot(v.x, v.y);
    const double latitude = rad_to_deg(std::atan2(v.z, horizontal));
    double longitude = horizontal == 0.0 ? 0.0 : rad_to_deg(std::atan2(v.y, v.x));
    if (longitude >= 180.0)
    {
        longitude -= 360.0;
    }
    return {std::clamp(latitude, -90.0, 90.0), longitude, std::max(0.0, r - kEarthRadius)};
}

TopocentricVector
geocentric_to_topocentric(const EcefVector& v, const ReferencePoint& ref)
{
    const auto basis = enu_basis(ref.origin.latitude(), ref.origin.longitude());
    const EcefVector d = v - geographic_to_geocentric(ref.origin);
    return {basis.east.dot(d), basis.north.dot(d), basis.up.dot(d)};
}

EcefVector
topocentric_to_geocentric(const TopocentricVector& v, const ReferencePoint& ref)
{
    const auto basis = enu_basis(ref.origin.latitude(), ref.origin.longitude());
    return geographic_to_geocentric(ref.origin) + v.east * basis.east + v.north * basis.north +
           v.up * basis.up;
}

TopocentricVector
geographic_to_topocentric(const GeoPosition& p, const ReferencePoint& ref)
{
    return geocentric_to_topocentric(geographic_to_geocentric(p), ref);
}

GeoPosition
topocentric_to_geographic(const TopocentricVector& v, const ReferencePoint& ref)
{
    return geocentric_to_geographic(topocentric_to_geocentric(v, ref));
}

double
elevation_angle(const EcefVector& ground, const EcefVector& platform)
{
    const EcefVector los = platform - ground;
    if (los.norm() == 0.0)
    {
        throw GeometryError("elevation undefined for coincident points");
    }
    const EcefVector zenith = ground.normalized();
    // atan2 keeps full precision close to the zenith where asin would not.
    const double vertical = zenith.dot(los);
    const double horizontal = cross(zenith, los).norm();
    return rad_to_deg(std::atan2(vertical, horizontal));
}

double
slant_range(double altitude_m, double elevation_deg)
{
    if (!(altitude_m > 0.0))
    {
        throw DomainError("platform altitude must be positive");
    }
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
    {
        throw DomainError("elevation must be in (0, 90] degrees");
    }
    const double s = std::sin(deg_to_rad(elevation_deg));
    const double r = kEarthRadius;
    return std::sqrt(r * r * s * s + 2.0 * r * altitude_m + altitude_m * altitude_m) - r * s;
}

double
central_angle(double altitude_m, double elevation_deg)
{
    const double alpha = deg_to_rad(elevation_deg);
    const double nadir = std::asin(kEarthRadius * std::cos(alpha) / (kEarthRadius + altitude_m));
    return rad_to_deg(std::numbers::pi / 2.0 - alpha - nadir);
}

EcefVector
place_platform(const GeoPosition& ground, double altitude_m, double elevation_deg, double azimuth_deg)
{
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
    {
        throw DomainError("elevation must be in (0, 90] degrees");
    }
    const EcefVector g = geographic_to_geocentric(ground);
    const double rg = g.norm();
    const double rp = kEarthRadius + altitude_m;
    if (!(rp > rg))
    {
        throw GeometryError("platform must be higher than the ground terminal");
    }
    const double alpha = deg_to_rad(elevation_deg);
    const double az = deg_to_rad(azimuth_deg);
    const double s = std::sin(alpha);
    const double d = std::sqrt(rg * rg * s * s + rp * rp - rg * rg) - rg * s;

    const auto basis = enu_basis(ground.latitude(), ground.longitude());
    const EcefVector direction = std::cos(alpha) * std::cos(az) * basis.north +
                                 std::cos(alpha) * std::sin(az) * basis.east + s * basis.up;
    return g + d * direction;
}

LinkGeometry
LinkGeometry::between(const EcefVector& ground, const EcefVector& platform)
{
    if (ground.norm() < kEarthRadius - kBelowSurfaceTolerance)
    {
        throw GeometryError("ground terminal is below the Earth surface");
    }
    LinkGeometry g;
    g.ground_position = ground;
    g.platform_position = platform;
    g.slant_range = distance(ground, platform);
    g.elevation = elevation_angle(ground, platform);
    return g;
}

} // namespace ntn
