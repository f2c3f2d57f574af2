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

#ifndef RISFEED_CHANNEL_HPP
#define RISFEED_CHANNEL_HPP

#include "risfeed/arrays.hpp"

#include <Eigen/Dense>

namespace risfeed
{
    // Two facing, parallel linear arrays: the RIS lies on the x-axis at z = 0
    // looking towards +z, the AMAF sits at z = distance looking back towards
    // the RIS, centered at x = amaf_offset.
    struct Scene
    {
        LinearArray ris;
        LinearArray amaf;
        double distance = 1.0;
        double amaf_offset = 0.0;

        // Throws InvalidScene when distance <= 0 or any value is not finite.
        void validate() const;
    };

    // Convenience for the common case of unit-pitch arrays sharing one element type.
    Scene make_scene(int n_ris, int n_amaf, double distance, ElementPattern ris_element = patch_6dbi,
                     ElementPattern amaf_element = patch_6dbi, double amaf_offset = 0.0);

    struct PropagationMatrix
    {
        Eigen::MatrixXcd entries; // N_p x N_a
        Scene scene;

        int rows() const { return static_cast<int>(entries.rows()); }
        int cols() const { return static_cast<int>(entries.cols()); }
    };

    // Element-to-element Friis coupling with the spherical phase term:
    //   T(n,m) = sqrt(E_A(theta) E_R(phi)) exp(j pi r) / (2 pi r),
    // r = sqrt(d^2 + (x_n - y_m)^2) and cos(theta) = cos(phi) = d / r.
    PropagationMatrix build_channel(const Scene &scene);

    // Squared Frobenius norm of T.
    double free_space_coupling(const Scene &scene);
    double free_space_coupling(const PropagationMatrix &t);
}

#endif
