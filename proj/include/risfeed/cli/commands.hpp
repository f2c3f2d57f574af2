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

#ifndef RISFEED_CLI_COMMANDS_HPP
#define RISFEED_CLI_COMMANDS_HPP

#include "risfeed/cli/config.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace risfeed::cli
{
    enum ExitCode : int
    {
        exit_success = 0,
        exit_config_error = 2,
        exit_computation_failure = 3,
    };

    // A numerical step failed on a valid configuration. Maps to exit code 3.
    class ComputationFailure : public Error
    {
    public:
        ComputationFailure(const std::string &what, std::optional<std::filesystem::path> dump = std::nullopt)
            : Error(what), dump_(std::move(dump))
        {
        }
        const std::optional<std::filesystem::path> &dump_path() const { return dump_; }

    private:
        std::optional<std::filesystem::path> dump_;
    };

    struct CommandOutput
    {
        std::vector<std::filesystem::path> files; // in creation order
        nlohmann::json summary;
    };

    // Returns the configured distance, or runs the optimizer for "auto". A
    // failed search writes distance_scan.csv to out_dir and throws
    // ComputationFailure pointing at it.
    double resolve_distance(const RunConfig &config, const std::filesystem::path &out_dir);

    // pattern_<label>.csv, metrics_<label>.json and design_<label>.json per
    // design; monopulse adds monopulse_curve.csv and monopulse.json.
    CommandOutput cmd_pattern(const RunConfig &config, const std::filesystem::path &out_dir);

    // sweep.csv, one row per n_p in ascending order. The distance is optimized
    // per size when scene.d is "auto" and held fixed otherwise.
    CommandOutput cmd_sweep(const RunConfig &config, const std::filesystem::path &out_dir);

    // power.json; needs the link_budget block.
    CommandOutput cmd_power(const RunConfig &config, const std::filesystem::path &out_dir);

    // Same files as cmd_pattern with a steer_ prefix, after steering every
    // design to theta_s_deg.
    CommandOutput cmd_steer(const RunConfig &config, double theta_s_deg, const std::filesystem::path &out_dir);

    // Dispatches by name ("pattern", "sweep", "power", "steer"), prints a
    // short summary to `out` and a single-line diagnostic to `err` on
    // failure. Returns the process exit code.
    int run_command(std::string_view name, const RunConfig &config, const std::filesystem::path &out_dir,
                    std::ostream &out, std::ostream &err);
}

#endif
