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

#ifndef RISFEED_FARFIELD_HPP
#define RISFEED_FARFIELD_HPP

#include "risfeed/arrays.hpp"
#include "risfeed/channel.hpp"
#include "risfeed/eigenmodes.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace risfeed
{
    inline constexpr double default_grid_step_deg = 0.01;

    // P(theta) = |a^H(theta) w|^2 E_R(theta) sampled on an ascending grid
    // covering [-90, 90] degrees.
    struct FarFieldPattern
    {
        std::vector<double> angles_deg;
        std::vector<double> power_dbi;            // -400 dB floor at exact nulls
        std::vector<std::complex<double>> field;  // a^H(theta) w, before the element factor
        Eigen::VectorXcd excitation;              // w = D T b
        ElementPattern element;

        std::size_t size() const { return angles_deg.size(); }

        // Exact evaluation at an arbitrary angle (not interpolated).
        double value_at(double theta_deg) const;
    };

    // a^H(theta) w for a unit-pitch RIS.
    std::complex<double> array_factor(const Eigen::VectorXcd &w, double theta_deg);

    // Grid: step in (0, 1] degrees; symmetric about 0 whenever 180/step is whole.
    std::vector<double> angle_grid(double step_deg);

    FarFieldPattern evaluate_excitation(const Eigen::VectorXcd &w, const ElementPattern &element,
                                        double grid_step_deg = default_grid_step_deg);
    FarFieldPattern evaluate_pattern(const BeamDesign &design, const PropagationMatrix &t,
                                     double grid_step_deg = default_grid_step_deg);

    struct FlatSector
    {
        double half_width_deg = 0.0;
        double min_dbi = 0.0;
        double max_dbi = 0.0;
        double mean_dbi = 0.0; // power average
        double ripple_db = 0.0;
    };

    struct PatternMetrics
    {
        double peak_dbi = 0.0;
        double peak_angle_deg = 0.0;
        std::optional<double> sll_db; // empty when no lobe exists outside the main lobe
        double hpbw_deg = 0.0;
        double taper_db = 0.0;
        double broadside_dbi = 0.0;
        std::optional<double> null_depth_db;
        std::optional<FlatSector> flat_sector;
        double main_lobe_lo_deg = 0.0;
        double main_lobe_hi_deg = 0.0;
    };

    // Main lobe runs from the global peak out to the first local minimum on
    // each side; the sidelobe level is the highest sample outside it, relative
    // to the peak. Throws InvalidArgument when the main lobe spans fewer than
    // five samples.
    PatternMetrics pattern_metrics(const FarFieldPattern &p);

    // 10 log10(max|w| / min|w|), capped at 400 dB.
    double taper_db(const Eigen::VectorXcd &w);

    FlatSector flat_sector(const FarFieldPattern &p, double half_width_deg);

    // Gamma = sigma_1^2 (sum_k |u_1[k]|)^2 E_R(0), in dBi.
    double ris_gain(const EigenDecomposition &dec, double e_r0);

    // Golden-section refinement of a local minimum of the pattern around grid
    // sample `index`. Returns (angle_deg, value_dbi).
    std::pair<double, double> refine_minimum(const FarFieldPattern &p, std::size_t index);

    struct MonopulseCurve
    {
        std::vector<double> angles_deg;
        std::vector<double> ratio;                     // calibrated real part of diff/sum
        std::vector<std::complex<double>> raw_ratio;   // diff/sum, uncalibrated
        double calibration_phase_deg = 0.0;
        double null_angle_deg = 0.0;
        double null_depth_db = 0.0; // sum peak minus refined difference minimum
    };

    // Ratio of difference to sum field. A constant boresight calibration phase,
    // fitted as the least-squares slope over the sum beam's half-power width,
    // rotates the ratio so that slope is real and positive; the curve is the
    // real part after that rotation. Throws InvalidArgument when
    // the two grids differ.
    MonopulseCurve monopulse_curve(const FarFieldPattern &sum, const FarFieldPattern &diff);

    // True when `values` is strictly increasing or strictly decreasing over
    // all grid samples with lo_deg <= angle <= hi_deg.
    bool strictly_monotone(const std::vector<double> &angles_deg, const std::vector<double> &values, double lo_deg,
                           double hi_deg);

    struct GainScalingRow
    {
        double amaf_gain = 0.0; // E_A(0)
        double ris_gain = 0.0;  // E_R(0)
        double gamma_dbi = 0.0;
        double predicted_dbi = 0.0; // first row shifted by 10log(E_A) + 20log(E_R)
        double residual_db = 0.0;
    };

    struct GainScalingReport
    {
        std::vector<GainScalingRow> rows;
        double max_abs_residual_db = 0.0;
    };

    // Recomputes Gamma for each (AMAF element, RIS element) pair on a fixed
    // geometry and compares against the Gamma ~ E_A(0) E_R(0)^2 law, using
    // the first pair as reference.
    GainScalingReport element_gain_scaling_report(int n_ris, int n_amaf, double distance,
                                                  const std::vector<std::pair<ElementPattern, ElementPattern>> &pairs,
                                                  PhaseConvention convention = PhaseConvention::CentralFeedElement);
}

#endif
