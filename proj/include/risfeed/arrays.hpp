// SPDX-License-Identifier: Apache-2.0
//
// risfeed: simulator for near-field fed RIS beamforming antennas
// Copyright (C) 2026 The risfeed authors
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

#ifndef RISFEED_ARRAYS_HPP
#define RISFEED_ARRAYS_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>

// Geometry and element models for standard linear arrays.
//
// Every length in this library is expressed in half-wavelength units, and
// every public angle is in degrees.

namespace risfeed
{
    // Axisymmetric cos^q power pattern: peak_gain * cos(theta)^exponent inside
    // the front hemisphere, zero behind it.
    struct ElementPattern
    {
        double peak_gain = 4.0;
        double exponent = 2.0;

        // Throws InvalidArgument unless peak_gain > 0 and exponent >= 0.
        void validate() const;

        bool operator==(const ElementPattern &) const = default;
    };

    // 4 cos^2(theta): 6 dBi, 90 deg half-power beamwidth.
    inline constexpr ElementPattern patch_6dbi{4.0, 2.0};
    // 6.3 cos^4(theta): 8 dBi, 65.5 deg half-power beamwidth.
    inline constexpr ElementPattern patch_8dbi{6.3, 4.0};

    // Resolves "patch6dBi" / "patch8dBi"; nullopt for unknown names.
    std::optional<ElementPattern> element_preset(std::string_view name);

    // Linear power gain at theta_deg off boresight.
    double element_gain(const ElementPattern &p, double theta_deg);

    // Full width between the -3 dB points, 2 acos(2^(-1/q)), in degrees.
    double hpbw(const ElementPattern &p);

    class LinearArray
    {
    public:
        // spacing is the element pitch in half wavelengths.
        LinearArray(int num_elements, double spacing = 1.0, ElementPattern element = patch_6dbi);

        int size() const { return num_elements_; }
        double spacing() const { return spacing_; }
        const ElementPattern &element() const { return element_; }

        // Positions symmetric about 0: (i - (N-1)/2) * spacing.
        double position(int i) const;
        Eigen::VectorXd positions() const;

        // N * spacing, in half wavelengths.
        double aperture() const { return num_elements_ * spacing_; }

    private:
        int num_elements_;
        double spacing_;
        ElementPattern element_;
    };

    // a(theta) for a unit-spacing RIS: entry k is conj(exp(j pi k sin theta)).
    // Throws InvalidArgument for N < 1.
    Eigen::VectorXcd steering_vector(int num_elements, double theta_deg);

    // 2 L^2 / lambda with L = N * spacing, in half wavelengths (N^2 for unit pitch).
    double rayleigh_distance(int num_elements, double spacing = 1.0);
}

#endif
