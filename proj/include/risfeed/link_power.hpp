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

#ifndef RISFEED_LINK_POWER_HPP
#define RISFEED_LINK_POWER_HPP

#include "risfeed/channel.hpp"
#include "risfeed/eigenmodes.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risfeed
{
    inline constexpr double speed_of_light = 299792458.0;

    struct LinkBudget
    {
        double carrier_hz = 100e9;
        double bandwidth_hz = 5e9;
        double range_m = 20.0;
        double rx_noise_figure_db = 5.0;
        double required_snr_db = 3.0;
        double noise_psd_dbm_hz = -174.0;

        // Throws InvalidArgument on non-positive frequency, bandwidth or range.
        void validate() const;
        // Bandwidth at or above 10 % of the carrier breaks the narrowband model.
        bool narrowband() const { return bandwidth_hz < 0.1 * carrier_hz; }
    };

    struct PATechnology
    {
        std::string name;
        double psat_dbm = 0.0;
        double pae_fraction = 0.0;
        double gain_db = 0.0;

        void validate() const;
    };

    // State-of-the-art 100 GHz power amplifiers: CMOS, SiGe, GaN, GaAs, InP.
    std::span<const PATechnology> pa_technologies();
    std::optional<PATechnology> find_pa_technology(std::string_view name);

    // 20 log10(4 pi R / lambda).
    double fspl_db(double carrier_hz, double range_m);

    struct LinkChain
    {
        double fspl_db = 0.0;
        double thermal_noise_dbm = 0.0; // psd + 10 log10(B)
        double noise_dbm = 0.0;         // thermal + noise figure
        double rx_signal_dbm = 0.0;
        double tx_power_dbm = 0.0;
    };

    LinkChain link_chain(const LinkBudget &lb);
    double required_tx_power_dbm(const LinkBudget &lb);

    enum class Architecture
    {
        RisFed = 1,       // N_a PAs at the feeder
        PhasedArray = 2,  // one PA per radiating element
    };

    // RF power the PAs must deliver to reach p_t_dbm at the far-field user.
    // The array gain term is E_R(0) (sum_k |u_1[k]|)^2; the RIS-fed
    // architecture additionally makes up the feeder-to-RIS loss sigma_1^2.
    double per_pa_power(Architecture arch, double p_t_dbm, const EigenDecomposition &dec, double e_r0);

    struct DcPower
    {
        double watts = 0.0;
        bool feasible = true; // p_out <= psat
    };

    // PAE = (P_out - P_in) / P_DC with P_in = P_out / gain.
    DcPower dc_power_w(double p_out_dbm, const PATechnology &tech);

    struct ComparisonOptions
    {
        // drive level used for the DC figures; the technology's Psat when empty
        std::optional<double> drive_dbm;
        // required headroom below Psat for the feasibility flags
        double backoff_db = 0.0;
        PhaseConvention convention = PhaseConvention::CentralFeedElement;
    };

    struct ArchitectureComparison
    {
        LinkChain chain;
        int pa_count_arch1 = 0;
        int pa_count_arch2 = 0;
        double rf_power_arch1_dbm = 0.0;
        double rf_power_arch2_dbm = 0.0;
        double drive_dbm = 0.0;
        double dc_per_pa_w = 0.0;
        double total_dc_arch1_w = 0.0;
        double total_dc_arch2_w = 0.0;
        // per-PA DC rounded to 0.01 W before multiplying by the PA count
        double total_dc_arch1_rounded_w = 0.0;
        double total_dc_arch2_rounded_w = 0.0;
        bool arch1_feasible = false;
        bool arch2_feasible = false;
        bool drive_feasible = true; // drive_dbm <= Psat
        bool narrowband = true;
        std::string technology;
    };

    ArchitectureComparison compare_architectures(const LinkBudget &lb, const Scene &scene, const PATechnology &tech,
                                                 const ComparisonOptions &options = {});
}

#endif
