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

#include "risfeed/arrays.hpp"

#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include <cmath>
#include <complex>

namespace risfeed
{
    void ElementPattern::validate() const
    {
        if (!(peak_gain > 0.0) || !std::isfinite(peak_gain))
            throw InvalidArgument("element pattern: peak_gain must be positive and finite");
        if (!(exponent >= 0.0) || !std::isfinite(exponent))
            throw InvalidArgument("element pattern: exponent must be non-negative and finite");
    }

    std::optional<ElementPattern> element_preset(std::string_view name)
    {
        if (name == "patch6dBi")
            return patch_6dbi;
        if (name == "patch8dBi")
            return patch_8dbi;
        return std::nullopt;
    }

    double element_gain(const ElementPattern &p, double theta_deg)
    {
        if (std::abs(theta_deg) >= 90.0)
            return 0.0;
        const double c = std::cos(deg_to_rad(theta_deg));
        return p.peak_gain * std::pow(c, p.exponent);
    }

    double hpbw(const ElementPattern &p)
    {
        // isotropic inside the hemisphere: never drops to half power before 90 deg
        if (p.exponent <= 0.0)
            return 180.0;
        return 2.0 * rad_to_deg(std::acos(std::pow(2.0, -1.0 / p.exponent)));
    }

    LinearArray::LinearArray(int num_elements, double spacing, ElementPattern element)
        : num_elements_(num_elements), spacing_(spacing), element_(element)
    {
        if (num_elements < 1)
            throw InvalidArgument("linear array needs at least one element");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw InvalidArgument("linear array spacing must be positive");
        element_.validate();
    }

    double LinearArray::position(int i) const
    {
        return (i - 0.5 * (num_elements_ - 1)) * spacing_;
    }

    Eigen::VectorXd LinearArray::positions() const
    {
        Eigen::VectorXd x(num_elements_);
        for (int i = 0; i < num_elements_; ++i)
            x(i) = position(i);
        return x;
    }

    Eigen::VectorXcd steering_vector(int num_elements, double theta_deg)
    {
        if (num_elements < 1)
            throw InvalidArgument("steering vector needs N >= 1");
        const double s = std::sin(deg_to_rad(theta_deg));
        Eigen::VectorXcd a(num_elements);
        for (int k = 0; k < num_elements; ++k)
            a(k) = std::polar(1.0, -pi * k * s);
        return a;
    }

    double rayleigh_distance(int num_elements, double spacing)
    {
        if (num_elements < 1)
            throw InvalidArgument("rayleigh distance needs N >= 1");
        // 2 L^2 / lambda, with lambda = 2 half-wavelengths
        const double aperture = num_elements * spacing;
        return 2.0 * aperture * aperture / 2.0;
    }
}
