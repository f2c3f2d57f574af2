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

#ifndef RISFEED_EIGENMODES_HPP
#define RISFEED_EIGENMODES_HPP

#include "risfeed/channel.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risfeed
{
    // How the free phase of each singular pair (u_i, v_i) is pinned. Both
    // vectors are rotated together so sigma_i u_i v_i^H is unchanged.
    enum class PhaseConvention
    {
        // The precoder entry of the central AMAF element (index floor((N_a-1)/2))
        // is real and positive; falls back to the largest |v_i| entry when that
        // entry vanishes (odd modes of odd-sized feeders).
        CentralFeedElement,
        // The largest-magnitude entry of u_i (lowest index on ties) is real and
        // non-negative.
        LargestRisEntry,
    };

    std::string_view to_string(PhaseConvention c);
    std::optional<PhaseConvention> parse_phase_convention(std::string_view name);

    struct EigenDecomposition
    {
        Eigen::VectorXd sigmas; // descending
        Eigen::MatrixXcd u;     // N_p x K, columns are u_i
        Eigen::MatrixXcd v;     // N_a x K, columns are v_i
        PhaseConvention convention = PhaseConvention::CentralFeedElement;
        // Zero-based i where sigma_i - sigma_{i+1} < 1e-12 sigma_1.
        std::vector<int> degenerate_pairs;

        int modes() const { return static_cast<int>(sigmas.size()); }
        int ris_size() const { return static_cast<int>(u.rows()); }
        int amaf_size() const { return static_cast<int>(v.rows()); }
    };

    // Thin SVD of T with the chosen phase convention. Deterministic for
    // identical input. Throws DecompositionError on non-finite input or output.
    EigenDecomposition decompose(const PropagationMatrix &t,
                                 PhaseConvention convention = PhaseConvention::CentralFeedElement);
    EigenDecomposition decompose(const Eigen::MatrixXcd &t,
                                 PhaseConvention convention = PhaseConvention::CentralFeedElement);

    // AMAF precoder b plus the RIS phase profile (diagonal of D).
    struct BeamDesign
    {
        Eigen::VectorXcd precoder;
        Eigen::VectorXcd ris_phases;
        std::string label;
    };

    struct MonopulseDesign
    {
        BeamDesign sum;
        BeamDesign diff;
    };

    // b = v_1 and D = diag(conj(u_1)/|u_1|): the RIS excitation becomes
    // sigma_1 |u_1|, real and non-negative. Throws DegenerateExcitation if any
    // |u_1[k]| < 1e-15.
    BeamDesign design1_pencil(const EigenDecomposition &dec);

    // b = 2 v_1 / sigma_1 + v_3 / sigma_3, D = I, giving excitation 2 u_1 + u_3.
    // Throws InsufficientModes with fewer than three (non-zero) modes.
    BeamDesign design2_flattop(const EigenDecomposition &dec);

    // Sum b = v_1, difference b = sigma_1 v_2 / sigma_2, both with D = I, so
    // the two excitations share the norm sigma_1.
    MonopulseDesign design3_monopulse(const EigenDecomposition &dec);

    // Multiplies the RIS phases by exp(-j pi k sin(theta_s)), which translates
    // the pattern by sin(theta_s) in sine space.
    BeamDesign steer(const BeamDesign &design, double theta_s_deg);

    // b = sum_i betas[i] v_i with caller-supplied RIS phases. Throws
    // InvalidArgument on length mismatch, non-finite betas or phases that are
    // not unit-modulus.
    BeamDesign custom_design(const EigenDecomposition &dec, std::span<const double> betas,
                             const Eigen::VectorXcd &ris_phases, std::string label = "custom");

    // All-ones RIS phase profile.
    Eigen::VectorXcd identity_phases(int n_ris);

    // w = D T b, the complex excitation over the RIS elements.
    Eigen::VectorXcd ris_excitation(const BeamDesign &design, const PropagationMatrix &t);
}

#endif
