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

#include "risfeed/channel.hpp"

#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include <cmath>
#include <complex>

namespace risfeed
{
    void Scene::validate() const
    {
        if (!(distance > 0.0) || !std::isfinite(distance))
            throw InvalidScene("AMAF-RIS distance must be positive and finite");
        if (!std::isfinite(amaf_offset))
            throw InvalidScene("AMAF lateral offset must be finite");
    }

    Scene make_scene(int n_ris, int n_amaf, double distance, ElementPattern ris_element, ElementPattern amaf_element,
                     double amaf_offset)
    {
        return Scene{LinearArray(n_ris, 1.0, ris_element), LinearArray(n_amaf, 1.0, amaf_element), distance,
                     amaf_offset};
    }

    PropagationMatrix build_channel(const Scene &scene)
    {
        scene.validate();

        const int n_p = scene.ris.size();
        const int n_a = scene.amaf.size();
        const double d = scene.distance;
        const ElementPattern &e_r = scene.ris.element();
        const ElementPattern &e_a = scene.amaf.element();

        Eigen::MatrixXcd t(n_p, n_a);
        for (int m = 0; m < n_a; ++m)
        {
            const double y = scene.amaf.position(m) + scene.amaf_offset;
            for (int n = 0; n < n_p; ++n)
            {
                const double dx = scene.ris.position(n) - y;
                const double r = std::hypot(d, dx);
                // both boresights point along z, so departure and arrival angles coincide
                const double cos_angle = d / r;
                const double g_a = e_a.peak_gain * std::pow(cos_angle, e_a.exponent);
                const double g_r = e_r.peak_gain * std::pow(cos_angle, e_r.exponent);
                const double magnitude = std::sqrt(g_a * g_r) / (2.0 * pi * r);
                t(n, m) = std::polar(magnitude, pi * r);
            }
        }
        return PropagationMatrix{std::move(t), scene};
    }

    double free_space_coupling(const PropagationMatrix &t)
    {
        return t.entries.squaredNorm();
    }

    double free_space_coupling(const Scene &scene)
    {
        return free_space_coupling(build_channel(scene));
    }
}
