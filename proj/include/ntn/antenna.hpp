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

#include "ntn/geodesy.hpp"

namespace ntn
{

inline constexpr double kDefaultApertureEfficiency = 0.6;

/// Circular reflector antenna with the exact Bessel far-field pattern
/// G(theta) = 4 |J1(k l sin theta) / (k l sin theta)|^2, G(0) = 1.
///
/// Objects are immutable; with_boresight() and friends return a re-pointed copy.
class CircularApertureAntenna
{
  public:
    /// Boresight defaults to +z. Throws DomainError for a non-positive radius
    /// or a frequency outside (0, 100] GHz.
    CircularApertureAntenna(double aperture_radius_m, double frequency_ghz, double peak_gain_dbi,
                            const EcefVector& boresight = {0.0, 0.0, 1.0});

    double aperture_radius() const { return m_radius; }
    double frequency_ghz() const { return m_frequency_ghz; }
    double peak_gain_dbi() const { return m_peak_gain_dbi; }
    const EcefVector& boresight() const { return m_boresight; }
    /// Wavenumber 2 pi f / c in rad/m.
    double wavenumber() const;

    CircularApertureAntenna with_boresight(const EcefVector& boresight) const;
    /// Boresight from an azimuth in the x-y plane (from +x towards +y) and an
    /// inclination measured from +z.
    CircularApertureAntenna with_orientation(double azimuth_deg, double inclination_deg) const;
    /// Boresight along the segment from `from` to `to`.
    CircularApertureAntenna pointed(const EcefVector& from, const EcefVector& to) const;

    /// Linear gain in [0, 1] at theta degrees off boresight. Throws DomainError
    /// for |theta| > 90.
    double normalized_gain(double theta_deg) const;
    /// peak_gain_dbi + 10 log10(normalized_gain(theta)).
    double gain_dbi(double theta_deg) const;
    /// Off-boresight angle towards `target` seen from an antenna placed at `position`.
    double offaxis_angle_to(const EcefVector& position, const EcefVector& target) const;

  private:
    double m_radius;
    double m_frequency_ghz;
    double m_peak_gain_dbi;
    EcefVector m_boresight;
};

double circular_aperture_gain(double theta_deg, const CircularApertureAntenna& a);

/// 10 log10(eta (2 pi l / lambda)^2).
double peak_gain_from_aperture(double aperture_radius_m, double frequency_ghz,
                               double efficiency = kDefaultApertureEfficiency);
/// Inverse of peak_gain_from_aperture.
double aperture_radius_for_gain(double peak_gain_dbi, double frequency_ghz,
                                double efficiency = kDefaultApertureEfficiency);

/// Angle in [0, 180] degrees between two directions. Inputs need not be
/// normalized; a zero vector throws GeometryError.
double effective_offaxis_angle(const EcefVector& boresight, const EcefVector& target_direction);

/// Uniform planar array with the standard 3GPP directional element.
///
/// Angles follow the element convention: theta is the zenith angle with the
/// boresight at theta = 90, phi the azimuth with the boresight at phi = 0.
struct UpaAntenna
{
    double element_max_gain_dbi{8.0};
    double vertical_beamwidth_deg{65.0};
    double horizontal_beamwidth_deg{65.0};
    double side_lobe_level_db{30.0};
    int rows{1};
    int columns{1};

    /// Throws DomainError for beamwidths outside (0, 180) or an empty array.
    void validate() const;
    /// Broadside gain of the array without beamforming losses.
    double array_peak_gain_dbi() const;
};

/// Element gain in dBi: max_gain - min(-(A_V + A_H), SLA) with
/// A_V = -min(12 ((theta - 90) / theta_3dB)^2, SLA) and A_H = -min(12 (phi / phi_3dB)^2, SLA).
double upa_element_gain(double theta_deg, double phi_deg, const UpaAntenna& a);

} // namespace ntn
