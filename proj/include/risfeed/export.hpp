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

#ifndef RISFEED_EXPORT_HPP
#define RISFEED_EXPORT_HPP

#include "risfeed/distance.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/farfield.hpp"
#include "risfeed/link_power.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>
#include <string>

// Plot-ready CSV and JSON writers. CSV floats use six significant digits so
// repeated runs produce byte-identical files.

namespace risfeed
{
    std::string format_number(double value);

    // angle_deg,power_dbi
    void write_pattern_csv(std::ostream &out, const FarFieldPattern &p);

    // angle_deg,ratio,raw_re,raw_im
    void write_monopulse_csv(std::ostream &out, const MonopulseCurve &curve);

    // One row per RIS element, re/im column pair per AMAF element.
    void write_channel_csv(std::ostream &out, const PropagationMatrix &t);

    // n_p,d_opt,gamma_dbi,array_factor_db,sigma1_sq_db,taper_db,sll_db,v1_taper_db,f_over_d
    void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

    // distance,sigma1_sq_db,peak_count,unimodal
    void write_scan_csv(std::ostream &out, const DistanceScan &scan);

    nlohmann::json to_json(const PatternMetrics &m);
    // {label, b: [[re, im], ...], ris_phases_deg: [...]} with phases in [-180, 180).
    nlohmann::json to_json(const BeamDesign &d);
    nlohmann::json to_json(const ArchitectureComparison &c);

    // Wraps a phase in degrees into [-180, 180).
    double wrap_degrees(double deg);
}

#endif
