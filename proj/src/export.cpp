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

#include "risfeed/export.hpp"

#include "risfeed/units.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace risfeed
{
    std::string format_number(double value)
    {
        if (value == 0.0)
            value = 0.0; // drop the sign of negative zero
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", value);
        return buf;
    }

    void write_pattern_csv(std::ostream &out, const FarFieldPattern &p)
    {
        out << "angle_deg,power_dbi\n";
        for (std::size_t i = 0; i < p.size(); ++i)
            out << format_number(p.angles_deg[i]) << ',' << format_number(p.power_dbi[i]) << '\n';
    }

    void write_monopulse_csv(std::ostream &out, const MonopulseCurve &curve)
    {
        out << "angle_deg,ratio,raw_re,raw_im\n";
        for (std::size_t i = 0; i < curve.angles_deg.size(); ++i)
            out << format_number(curve.angles_deg[i]) << ',' << format_number(curve.ratio[i]) << ','
                << format_number(curve.raw_ratio[i].real()) << ',' << format_number(curve.raw_ratio[i].imag())
                << '\n';
    }

    void write_channel_csv(std::ostream &out, const PropagationMatrix &t)
    {
        out << "ris_index";
        for (int m = 0; m < t.cols(); ++m)
            out << ",t" << m << "_re,t" << m << "_im";
        out << '\n';
        for (int n = 0; n < t.rows(); ++n)
        {
            out << n;
            for (int m = 0; m < t.cols(); ++m)
                out << ',' << format_number(t.entries(n, m).real()) << ',' << format_number(t.entries(n, m).imag());
            out << '\n';
        }
    }

    void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows)
    {
        out << "n_p,d_opt,gamma_dbi,array_factor_db,sigma1_sq_db,taper_db,sll_db,v1_taper_db,f_over_d\n";
        for (const auto &r : rows)
        {
            out << r.n_p << ',' << format_number(r.d_opt) << ',' << format_number(r.gamma_dbi) << ','
                << format_number(r.array_factor_db) << ',' << format_number(r.sigma1_sq_db) << ','
                << format_number(r.taper_db) << ',' << (r.sll_db ? format_number(*r.sll_db) : std::string{})
                << ',' << format_number(r.v1_taper_db) << ',' << format_number(r.f_over_d) << '\n';
        }
    }

    void write_scan_csv(std::ostream &out, const DistanceScan &scan)
    {
        out << "distance,sigma1_sq_db,peak_count,unimodal\n";
        for (const auto &r : scan.records)
            out << format_number(r.distance) << ',' << format_number(r.sigma1_sq_db) << ',' << r.peak_count << ','
                << (r.unimodal ? 1 : 0) << '\n';
    }

    double wrap_degrees(double deg)
    {
        double w = std::fmod(deg + 180.0, 360.0);
        if (w < 0.0)
            w += 360.0;
        w -= 180.0;
        return w >= 180.0 ? -180.0 : w;
    }

    nlohmann::json to_json(const PatternMetrics &m)
    {
        nlohmann::json j{
            {"peak_dbi", m.peak_dbi},
            {"peak_angle_deg", m.peak_angle_deg},
            {"sll_db", m.sll_db ? nlohmann::json(*m.sll_db) : nlohmann::json(nullptr)},
            {"hpbw_deg", m.hpbw_deg},
            {"taper_db", m.taper_db},
            {"broadside_dbi", m.broadside_dbi},
            {"null_depth_db", m.null_depth_db ? nlohmann::json(*m.null_depth_db) : nlohmann::json(nullptr)},
            {"main_lobe_deg", {m.main_lobe_lo_deg, m.main_lobe_hi_deg}},
        };
        if (m.flat_sector)
        {
            const auto &s = *m.flat_sector;
            j["flat_sector"] = {{"half_width_deg", s.half_width_deg}, {"min_dbi", s.min_dbi},
                                {"max_dbi", s.max_dbi},               {"mean_dbi", s.mean_dbi},
                                {"ripple_db", s.ripple_db}};
        }
        return j;
    }

    nlohmann::json to_json(const BeamDesign &d)
    {
        nlohmann::json b = nlohmann::json::array();
        for (Eigen::Index i = 0; i < d.precoder.size(); ++i)
            b.push_back({d.precoder(i).real(), d.precoder(i).imag()});
        nlohmann::json phases = nlohmann::json::array();
        for (Eigen::Index i = 0; i < d.ris_phases.size(); ++i)
            phases.push_back(wrap_degrees(rad_to_deg(std::arg(d.ris_phases(i)))));
        return {{"label", d.label}, {"b", b}, {"ris_phases_deg", phases}};
    }

    nlohmann::json to_json(const ArchitectureComparison &c)
    {
        return {
            {"technology", c.technology},
            {"narrowband", c.narrowband},
            {"chain",
             {{"fspl_db", c.chain.fspl_db},
              {"thermal_noise_dbm", c.chain.thermal_noise_dbm},
              {"noise_dbm", c.chain.noise_dbm},
              {"rx_signal_dbm", c.chain.rx_signal_dbm},
              {"tx_power_dbm", c.chain.tx_power_dbm}}},
            {"ris_fed",
             {{"pa_count", c.pa_count_arch1},
              {"rf_power_per_pa_dbm", c.rf_power_arch1_dbm},
              {"feasible", c.arch1_feasible},
              {"total_dc_w", c.total_dc_arch1_w},
              {"total_dc_rounded_w", c.total_dc_arch1_rounded_w}}},
            {"phased_array",
             {{"pa_count", c.pa_count_arch2},
              {"rf_power_per_pa_dbm", c.rf_power_arch2_dbm},
              {"feasible", c.arch2_feasible},
              {"total_dc_w", c.total_dc_arch2_w},
              {"total_dc_rounded_w", c.total_dc_arch2_rounded_w}}},
            {"drive_dbm", c.drive_dbm},
            {"drive_feasible", c.drive_feasible},
            {"dc_per_pa_w", c.dc_per_pa_w},
        };
    }
}
