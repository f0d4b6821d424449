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
#include "ntn/constants.hpp"
#include "ntn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ntn
{

namespace
{

EcefVector
cross(const EcefVector& a, const EcefVector& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double
wavelength(double frequency_ghz)
{
    if (!(frequency_ghz > 0.0 && frequency_ghz <= 100.0))
    {
        throw DomainError("antenna frequency must be in (0, 100] GHz, got " +
                          std::to_string(frequency_ghz));
    }
    return kSpeedOfLight / (frequency_ghz * 1e9);
}

} // namespace

CircularApertureAntenna::CircularApertureAntenna(double aperture_radius_m, double frequency_ghz,
                                                 double peak_gain_dbi, const EcefVector& boresight)
    : m_radius(aperture_radius_m),
      m_frequency_ghz(frequency_ghz),
      m_peak_gain_dbi(peak_gain_dbi),
      m_boresight(boresight.normalized())
{
    if (!(aperture_radius_m > 0.0) || !std::isfinite(aperture_radius_m))
    {
        throw DomainError("aperture radius must be positive");
    }
    if (!std::isfinite(peak_gain_dbi))
    {
        throw DomainError("peak gain must be finite");
    }
    wavelength(frequency_ghz);
}

double
CircularApertureAntenna::wavenumber() const
{
    return 2.0 * std::numbers::pi / wavelength(m_frequency_ghz);
}

CircularApertureAntenna
CircularApertureAntenna::with_boresight(const EcefVector& boresight) const
{
    return {m_radius, m_frequency_ghz, m_peak_gain_dbi, boresight};
}

CircularApertureAntenna
CircularApertureAntenna::with_orientation(double azimuth_deg, double inclination_deg) const
{
    const double az = deg_to_rad(azimuth_deg);
    const double inc = deg_to_rad(inclination_deg);
    return with_boresight(
        {std::sin(inc) * std::cos(az), std::sin(inc) * std::sin(az), std::cos(inc)});
}

CircularApertureAntenna
CircularApertureAntenna::pointed(const EcefVector& from, const EcefVector& to) const
{
    return with_boresight(to - from);
}

double
CircularApertureAntenna::normalized_gain(double theta_deg) const
{
    if (!(std::abs(theta_deg) <= 90.0))
    {
        throw DomainError("off-boresight angle outside the front hemisphere: " +
                          std::to_string(theta_deg));
    }
    if (theta_deg == 0.0)
    {
        return 1.0;
    }
    const double x = wavenumber() * m_radius * std::sin(deg_to_rad(theta_deg));
    const double ratio = 2.0 * bessel_j1(x) / x;
    return ratio * ratio;
}

double
CircularApertureAntenna::gain_dbi(double theta_deg) const
{
    return m_peak_gain_dbi + 10.0 * std::log10(normalized_gain(theta_deg));
}

double
CircularApertureAntenna::offaxis_angle_to(const EcefVector& position, const EcefVector& target) const
{
    return effective_offaxis_angle(m_boresight, target - position);
}

double
circular_aperture_gain(double theta_deg, const CircularApertureAntenna& a)
{
    return a.normalized_gain(theta_deg);
}

double
peak_gain_from_aperture(double aperture_radius_m, double frequency_ghz, double efficiency)
{
    if (!(aperture_radius_m > 0.0))
    {
        throw DomainError("aperture radius must be positive");
    }
    if (!(efficiency > 0.0 && efficiency <= 1.0))
    {
        throw DomainError("aperture efficiency must be in (0, 1]");
    }
    const double ka = 2.0 * std::numbers::pi * aperture_radius_m / wavelength(frequency_ghz);
    return 10.0 * std::log10(efficiency * ka * ka);
}

double
aperture_radius_for_gain(double peak_gain_dbi, double frequency_ghz, double efficiency)
{
    if (!(efficiency > 0.0 && efficiency <= 1.0))
    {
        throw DomainError("aperture efficiency must be in (0, 1]");
    }
    const double ka = std::sqrt(std::pow(10.0, peak_gain_dbi / 10.0) / efficiency);
    return ka * wavelength(frequency_ghz) / (2.0 * std::numbers::pi);
}

double
effective_offaxis_angle(const EcefVector& boresight, const EcefVector& target_direction)
{
    const EcefVector a = boresight.normalized();
    const EcefVector b = target_direction.normalized();
    return rad_to_deg(std::atan2(cross(a, b).norm(), a.dot(b)));
}

void
UpaAntenna::validate() const
{
    if (!(vertical_beamwidth_deg > 0.0 && vertical_beamwidth_deg < 180.0) ||
        !(horizontal_beamwidth_deg > 0.0 && horizontal_beamwidth_deg < 180.0))
    {
        throw DomainError("UPA beamwidths must be in (0, 180) degrees");
    }
    if (rows < 1 || columns < 1)
    {
        throw DomainError("UPA must have at least one row and one column");
    }
    if (!(side_lobe_level_db >= 0.0))
    {
        throw DomainError("UPA side lobe level must be non-negative");
    }
}

double
UpaAntenna::array_peak_gain_dbi() const
{
    validate();
    return element_max_gain_dbi + 10.0 * std::log10(static_cast<double>(rows) * columns);
}

double
upa_element_gain(double theta_deg, double phi_deg, const UpaAntenna& a)
{
    a.validate();
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
    {
        throw DomainError("UPA zenith angle must be in [0, 180] degrees");
    }
    if (!(phi_deg >= -180.0 && phi_deg < 180.0))
    {
        throw DomainError("UPA azimuth must be in [-180, 180) degrees");
    }
    const double sla = a.side_lobe_level_db;
    const double v = (theta_deg - 90.0) / a.vertical_beamwidth_deg;
    const double h = phi_deg / a.horizontal_beamwidth_deg;
    const double a_v = -std::min(12.0 * v * v, sla);
    const double a_h = -std::min(12.0 * h * h, sla);
    return a.element_max_gain_dbi - std::min(-(a_v + a_h), sla);
}

} // namespace ntn
