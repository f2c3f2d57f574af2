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

#include "risfeed/distance.hpp"

#include "risfeed/channel.hpp"
#include "risfeed/units.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace risfeed
{
    int peak_count(std::span<const double> profile, double plateau_tol)
    {
        const std::size_t n = profile.size();
        if (n < 3)
            throw InvalidArgument("peak_count needs a profile of at least three samples");

        const auto same = [plateau_tol](double a, double b) {
            return std::abs(a - b) <= plateau_tol * std::max(std::abs(a), std::abs(b));
        };

        int peaks = 0;
        std::size_t i = 0;
        while (i < n)
        {
            std::size_t j = i;
            while (j + 1 < n && same(profile[i], profile[j + 1]))
                ++j;
            const double level = profile[i];
            const bool above_left = i == 0 || level > profile[i - 1];
            const bool above_right = j + 1 == n || level > profile[j + 1];
            if (above_left && above_right)
                ++peaks;
            i = j + 1;
        }
        return peaks;
    }

    namespace
    {
        DistanceRecord inspect(int n_ris, int n_amaf, const ElementPattern &ris_element,
                               const ElementPattern &amaf_element, const DistanceOptions &options, double d)
        {
            const Scene scene{LinearArray(n_ris, options.ris_spacing, ris_element),
                              LinearArray(n_amaf, options.amaf_spacing, amaf_element), d, 0.0};
            const EigenDecomposition dec = decompose(build_channel(scene), options.convention);
            const double s1 = dec.sigmas(0);
            std::vector<double> profile(static_cast<std::size_t>(dec.ris_size()));
            for (int k = 0; k < dec.ris_size(); ++k)
                profile[static_cast<std::size_t>(k)] = s1 * std::abs(dec.u(k, 0));

            DistanceRecord r;
            r.distance = d;
            r.sigma1_sq_db = pow_to_db(s1 * s1);
            r.peak_count = n_ris >= 3 ? peak_count(profile, options.plateau_tol) : 1;
            r.unimodal = r.peak_count == 1;
            return r;
        }
    }

    DistanceSearch find_optimal_distance(int n_ris, int n_amaf, const ElementPattern &ris_element,
                                         const ElementPattern &amaf_element, const DistanceOptions &options)
    {
        if (n_amaf < 1 || n_ris < n_amaf)
            throw InvalidArgument("distance search needs n_p >= n_a >= 1");
        if (!(options.d_step > 0.0) || !std::isfinite(options.d_step))
            throw InvalidArgument("distance step must be positive");
        if (options.persistence < 1)
            throw InvalidArgument("persistence must be at least one step");

        const double limit = rayleigh_distance(n_ris, options.ris_spacing);
        DistanceScan scan;
        bool seen_split = false;
        int run = 0;
        double candidate = 0.0;

        for (long k = 1;; ++k)
        {
            const double d = static_cast<double>(k) * options.d_step;
            if (d > limit)
                break;
            const DistanceRecord rec = inspect(n_ris, n_amaf, ris_element, amaf_element, options, d);
            scan.records.push_back(rec);

            if (!rec.unimodal)
            {
                seen_split = true;
                run = 0;
                continue;
            }
            if (!seen_split)
                continue;
            if (run == 0)
                candidate = d;
            if (++run >= options.persistence)
                return DistanceSearch{candidate, std::move(scan)};
        }

        const std::string reason = seen_split
                                       ? "profile never settles to a single peak below the Rayleigh distance"
                                       : "profile is unimodal at every distance below the Rayleigh distance";
        throw SearchFailure("no optimal distance for n_p=" + std::to_string(n_ris) +
                                ", n_a=" + std::to_string(n_amaf) + ": " + reason,
                            std::move(scan));
    }

    SweepRow sweep_row(const Scene &scene, PhaseConvention convention, double grid_step_deg)
    {
        const PropagationMatrix t = build_channel(scene);
        const EigenDecomposition dec = decompose(t, convention);
        const double e_r0 = scene.ris.element().peak_gain;
        const double s1 = dec.sigmas(0);

        SweepRow row;
        row.n_p = scene.ris.size();
        row.d_opt = scene.distance;
        row.sigma1_sq_db = pow_to_db(s1 * s1);
        const double coherent = dec.u.col(0).cwiseAbs().sum();
        row.array_factor_db = pow_to_db(e_r0 * coherent * coherent);
        row.gamma_dbi = ris_gain(dec, e_r0);
        row.taper_db = taper_db(s1 * dec.u.col(0));
        row.v1_taper_db = taper_db(dec.v.col(0));
        row.f_over_d = scene.distance / scene.ris.aperture();

        const BeamDesign pencil = design1_pencil(dec);
        row.sll_db = pattern_metrics(evaluate_pattern(pencil, t, grid_step_deg)).sll_db;
        return row;
    }

    std::vector<SweepRow> sweep_sizes(std::span<const int> n_p_list, int n_amaf, const ElementPattern &ris_element,
                                      const ElementPattern &amaf_element, const DistanceOptions &options)
    {
        std::vector<SweepRow> rows;
        rows.reserve(n_p_list.size());
        for (const int n_p : n_p_list)
        {
            const DistanceSearch found = find_optimal_distance(n_p, n_amaf, ris_element, amaf_element, options);
            const Scene scene{LinearArray(n_p, options.ris_spacing, ris_element),
                              LinearArray(n_amaf, options.amaf_spacing, amaf_element), found.d_opt, 0.0};
            rows.push_back(sweep_row(scene, options.convention, options.grid_step_deg));
        }
        return rows;
    }
}
