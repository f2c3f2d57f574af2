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

#ifndef RISFEED_DISTANCE_HPP
#define RISFEED_DISTANCE_HPP

#include "risfeed/arrays.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/error.hpp"
#include "risfeed/farfield.hpp"

#include <optional>
#include <span>
#include <vector>

namespace risfeed
{
    struct DistanceRecord
    {
        double distance = 0.0;
        double sigma1_sq_db = 0.0;
        int peak_count = 0; // of sigma_1 |u_1|
        bool unimodal = false;
    };

    struct DistanceScan
    {
        std::vector<DistanceRecord> records; // strictly increasing distance
    };

    class SearchFailure : public Error
    {
    public:
        SearchFailure(const std::string &what, DistanceScan scan) : Error(what), scan_(std::move(scan)) {}
        const DistanceScan &scan() const { return scan_; }

    private:
        DistanceScan scan_;
    };

    struct DistanceOptions
    {
        double d_step = 1.0;
        // consecutive unimodal candidates required before the scan stops
        int persistence = 10;
        double plateau_tol = 1e-9;
        double ris_spacing = 1.0;
        double amaf_spacing = 1.0;
        PhaseConvention convention = PhaseConvention::CentralFeedElement;
        double grid_step_deg = default_grid_step_deg;
    };

    struct DistanceSearch
    {
        double d_opt = 0.0;
        DistanceScan scan;
    };

    // Number of maximal plateaus that are strict local maxima. Samples within
    // relative plateau_tol of each other merge into one plateau; the ends of
    // the profile count as lower than any sample. Throws InvalidArgument for
    // profiles shorter than three samples.
    int peak_count(std::span<const double> profile, double plateau_tol = 1e-9);

    // Scans d = d_step, 2 d_step, ... For small d the principal excitation is
    // one sharp peak; past that it splits into several peaks while the feeder
    // is too close, and merges back into a single bell once the feeder is far
    // enough. The optimum is the first distance after the multi-peaked band
    // that stays unimodal for `persistence` steps; sigma_1^2 only decays
    // beyond it.
    //
    // Throws SearchFailure (carrying the scan) when no multi-peaked distance
    // is followed by a persistent unimodal run below the Rayleigh distance.
    DistanceSearch find_optimal_distance(int n_ris, int n_amaf, const ElementPattern &ris_element,
                                         const ElementPattern &amaf_element, const DistanceOptions &options = {});

    struct SweepRow
    {
        int n_p = 0;
        double d_opt = 0.0;
        double gamma_dbi = 0.0;
        double array_factor_db = 0.0; // E_R(0) (sum |u_1|)^2
        double sigma1_sq_db = 0.0;
        double taper_db = 0.0;        // of sigma_1 |u_1|
        std::optional<double> sll_db; // design 1 pattern
        double v1_taper_db = 0.0;
        double f_over_d = 0.0;
    };

    // Design-1 figures of merit for one scene at its given distance.
    SweepRow sweep_row(const Scene &scene, PhaseConvention convention = PhaseConvention::CentralFeedElement,
                       double grid_step_deg = default_grid_step_deg);

    // find_optimal_distance followed by sweep_row for each RIS size. Errors
    // from the distance search propagate.
    std::vector<SweepRow> sweep_sizes(std::span<const int> n_p_list, int n_amaf, const ElementPattern &ris_element,
                                      const ElementPattern &amaf_element, const DistanceOptions &options = {});
}

#endif
