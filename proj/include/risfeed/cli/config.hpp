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

#ifndef RISFEED_CLI_CONFIG_HPP
#define RISFEED_CLI_CONFIG_HPP

#include "risfeed/arrays.hpp"
#include "risfeed/distance.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/error.hpp"
#include "risfeed/link_power.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace risfeed::cli
{
    // Anything wrong with the user's configuration. Maps to exit code 2.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    struct SceneConfig
    {
        int n_p = 128;
        int n_a = 4;
        std::optional<double> distance = 80.0; // empty means "auto"
        double ris_spacing = 1.0;
        double amaf_spacing = 1.0;
        ElementPattern ris_element = patch_6dbi;
        ElementPattern amaf_element = patch_6dbi;
        double offset = 0.0;
    };

    enum class DesignKind
    {
        Pencil,
        Flattop,
        Monopulse,
        Custom,
    };

    std::string_view to_string(DesignKind k);
    std::optional<DesignKind> parse_design_kind(std::string_view name);

    struct DesignConfig
    {
        DesignKind kind = DesignKind::Pencil;
        std::vector<double> betas;      // custom only
        std::vector<double> phases_deg; // custom only; empty means D = I
    };

    struct OptimizerConfig
    {
        bool enabled = true;
        double d_step = 1.0;
        int persistence = 10;
    };

    struct SweepConfig
    {
        std::vector<int> n_p;
    };

    struct RunConfig
    {
        SceneConfig scene;
        DesignConfig design;
        OptimizerConfig optimizer;
        SweepConfig sweep;
        double grid_step_deg = default_grid_step_deg;
        double steer_deg = 0.0;
        double flat_half_width_deg = 15.0;
        PhaseConvention convention = PhaseConvention::CentralFeedElement;
        std::optional<LinkBudget> link_budget;
        PATechnology pa = *find_pa_technology("GaN");
        double backoff_db = 0.0;
        std::optional<double> drive_dbm;
        bool export_channel = false;
    };

    // Merges a JSON object into `config`. Unknown keys and wrongly typed
    // values raise ConfigError naming the offending key.
    void apply_json(RunConfig &config, const nlohmann::json &j);

    RunConfig load_config_file(const std::filesystem::path &path, RunConfig base = {});

    // "table1", "table2", "paper", "fig3", "fig5", "fig6".
    std::vector<std::string> preset_names();
    RunConfig preset(std::string_view name);

    // Single-value overrides collected from the command line.
    struct Overrides
    {
        std::optional<int> n_p;
        std::optional<int> n_a;
        std::optional<std::string> distance; // number or "auto"
        std::optional<std::string> design;
        std::optional<double> grid_step_deg;
        std::optional<double> steer_deg;
        std::optional<std::string> phase_convention;
        std::optional<std::vector<int>> sweep_n_p;
        std::optional<double> snr_db;
        std::optional<std::string> pa;
        std::optional<double> backoff_db;
        std::optional<double> drive_dbm;
        bool export_channel = false;
    };

    void apply_overrides(RunConfig &config, const Overrides &o);

    // Throws ConfigError on the first violated constraint.
    void validate(const RunConfig &config);

    Scene make_scene(const RunConfig &config, double distance);
    DistanceOptions distance_options(const RunConfig &config);
}

#endif
