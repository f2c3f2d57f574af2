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

#ifndef RISFEED_UNITS_HPP
#define RISFEED_UNITS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

namespace risfeed
{
    inline constexpr double pi = std::numbers::pi;

    // Power values below this are reported at the -400 dB floor.
    inline constexpr double power_floor = 1e-40;
    inline constexpr double db_floor = -400.0;

    constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
    constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

    inline double pow_to_db(double linear) { return 10.0 * std::log10(std::max(linear, power_floor)); }
    inline double db_to_pow(double db) { return std::pow(10.0, db / 10.0); }

    inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }
}

#endif
