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

#include "risfeed/link_power.hpp"

#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include <array>
#include <cmath>

namespace risfeed
{
    namespace
    {
        const std::array<PATechnology, 5> technologies{{
            {"CMOS", 14.0, 0.10, 13.0},
            {"SiGe", 16.0, 0.14, 14.0},
            {"GaN", 27.0, 0.14, 20.0},
            {"GaAs", 27.0, 0.125, 27.0},
            {"InP", 20.0, 0.22, 28.0},
        }};
    }

    void LinkBudget::validate() const
    {
        if (!(carrier_hz > 0.0) || !(bandwidth_hz > 0.0) || !(range_m > 0.0))
            throw InvalidArgument("link budget needs positive carrier, bandwidth and range");
        if (!std::isfinite(rx_noise_figure_db) || !std::isfinite(required_snr_db) || !std::isfinite(noise_psd_dbm_hz))
            throw InvalidArgument("link budget values must be finite");
    }

    void PATechnology::validate() const
    {
        if (!(pae_fraction > 0.0 && pae_fraction < 1.0))
            throw InvalidArgument("PAE must lie strictly between 0 and 1");
        if (!(gain_db > 0.0))
            throw InvalidArgument("PA gain must be positive");
        if (!std::isfinite(psat_dbm))
            throw InvalidArgument("Psat must be finite");
    }

    std::span<const PATechnology> pa_technologies()
    {
        return technologies;
    }

    std::optional<PATechnology> find_pa_technology(std::string_view name)
    {
        for (const auto &t : technologies)
            if (t.name == name)
                return t;
        return std::nullopt;
    }

    double fspl_db(double carrier_hz, double range_m)
    {
        if (!(carrier_hz > 0.0) || !(range_m > 0.0))
            throw InvalidArgument("FSPL needs positive frequency and range");
        const double wavelength = speed_of_light / carrier_hz;
        return 20.0 * std::log10(4.0 * pi * range_m / wavelength);
    }

    LinkChain link_chain(const LinkBudget &lb)
    {
        lb.validate();
        LinkChain c;
        c.fspl_db = fspl_db(lb.carrier_hz, lb.range_m);
        c.thermal_noise_dbm = lb.noise_psd_dbm_hz + 10.0 * std::log10(lb.bandwidth_hz);
        c.noise_dbm = c.thermal_noise_dbm + lb.rx_noise_figure_db;
        c.rx_signal_dbm = c.noise_dbm + lb.required_snr_db;
        c.tx_power_dbm = c.rx_signal_dbm + c.fspl_db;
        return c;
    }

    double required_tx_power_dbm(const LinkBudget &lb)
    {
        return link_chain(lb).tx_power_dbm;
    }

    double per_pa_power(Architecture arch, double p_t_dbm, const EigenDecomposition &dec, double e_r0)
    {
        const double coherent = dec.u.col(0).cwiseAbs().sum();
        const double array_gain_db = pow_to_db(e_r0 * coherent * coherent);
        const double s1 = dec.sigmas(0);
        const double feed_loss_db = pow_to_db(s1 * s1); // negative
        switch (arch)
        {
        case Architecture::RisFed:
            return p_t_dbm - array_gain_db - feed_loss_db;
        case Architecture::PhasedArray:
            return p_t_dbm - array_gain_db;
        }
        throw InvalidArgument("unknown architecture");
    }

    DcPower dc_power_w(double p_out_dbm, const PATechnology &tech)
    {
        tech.validate();
        const double p_out = dbm_to_watt(p_out_dbm);
        const double p_in = p_out / db_to_pow(tech.gain_db);
        return DcPower{(p_out - p_in) / tech.pae_fraction, p_out_dbm <= tech.psat_dbm};
    }

    ArchitectureComparison compare_architectures(const LinkBudget &lb, const Scene &scene, const PATechnology &tech,
                                                 const ComparisonOptions &options)
    {
        tech.validate();
        ArchitectureComparison out;
        out.technology = tech.name;
        out.chain = link_chain(lb);
        out.narrowband = lb.narrowband();

        const EigenDecomposition dec = decompose(build_channel(scene), options.convention);
        const double e_r0 = scene.ris.element().peak_gain;
        out.pa_count_arch1 = scene.amaf.size();
        out.pa_count_arch2 = scene.ris.size();
        out.rf_power_arch1_dbm = per_pa_power(Architecture::RisFed, out.chain.tx_power_dbm, dec, e_r0);
        out.rf_power_arch2_dbm = per_pa_power(Architecture::PhasedArray, out.chain.tx_power_dbm, dec, e_r0);

        const double ceiling = tech.psat_dbm - options.backoff_db;
        out.arch1_feasible = out.rf_power_arch1_dbm <= ceiling;
        out.arch2_feasible = out.rf_power_arch2_dbm <= ceiling;

        out.drive_dbm = options.drive_dbm.value_or(tech.psat_dbm);
        const DcPower dc = dc_power_w(out.drive_dbm, tech);
        out.dc_per_pa_w = dc.watts;
        out.drive_feasible = dc.feasible;
        out.total_dc_arch1_w = out.pa_count_arch1 * out.dc_per_pa_w;
        out.total_dc_arch2_w = out.pa_count_arch2 * out.dc_per_pa_w;
        const double rounded = std::round(out.dc_per_pa_w * 100.0) / 100.0;
        out.total_dc_arch1_rounded_w = out.pa_count_arch1 * rounded;
        out.total_dc_arch2_rounded_w = out.pa_count_arch2 * rounded;
        return out;
    }
}
