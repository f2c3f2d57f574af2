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

#include "risfeed/cli/commands.hpp"
#include "risfeed/cli/config.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{
    struct CommonOptions
    {
        std::string config_path;
        std::string preset;
        std::string out_dir = "out";
        risfeed::cli::Overrides overrides;
    };

    template <typename T>
    void optional_option(CLI::App *app, const std::string &name, std::optional<T> &target, const std::string &help)
    {
        app->add_option_function<T>(name, [&target](const T &v) { target = v; }, help);
    }

    void add_common(CLI::App *sub, CommonOptions &o)
    {
        sub->add_option("--config", o.config_path, "JSON run configuration");
        sub->add_option("--preset", o.preset, "named experiment: table1, table2, paper, fig3, fig5, fig6");
        sub->add_option("--out-dir", o.out_dir, "directory for CSV and JSON outputs")->capture_default_str();
        auto &ov = o.overrides;
        optional_option(sub, "--n-p", ov.n_p, "RIS elements");
        optional_option(sub, "--n-a", ov.n_a, "feeder elements");
        optional_option(sub, "--distance", ov.distance, "feeder distance in half wavelengths, or auto");
        optional_option(sub, "--design", ov.design, "pencil, flattop, monopulse or custom");
        optional_option(sub, "--grid-step", ov.grid_step_deg, "pattern grid step in degrees");
        optional_option(sub, "--phase-convention", ov.phase_convention, "central-feed or largest-ris-entry");
        optional_option(sub, "--sweep-n-p", ov.sweep_n_p, "RIS sizes for the sweep");
        optional_option(sub, "--snr", ov.snr_db, "required receive SNR in dB");
        optional_option(sub, "--pa", ov.pa, "PA technology: CMOS, SiGe, GaN, GaAs, InP");
        optional_option(sub, "--backoff", ov.backoff_db, "PA back-off below Psat in dB");
        optional_option(sub, "--drive", ov.drive_dbm, "PA drive level in dBm (default Psat)");
        sub->add_flag("--export-channel", ov.export_channel, "also write the propagation matrix as CSV");
    }
}

int main(int argc, char **argv)
{
    using namespace risfeed::cli;

    CLI::App app{"risfeed: near-field fed RIS beamforming simulator"};
    app.require_subcommand(1);

    CommonOptions options;
    std::optional<double> theta;
    for (const char *name : {"pattern", "sweep", "power", "steer"})
    {
        CLI::App *sub = app.add_subcommand(name);
        add_common(sub, options);
        if (std::string_view(name) == "steer")
            optional_option(sub, "--theta", theta, "steering angle in degrees");
    }
    app.get_subcommand("pattern")->description("far-field patterns and metrics for one design");
    app.get_subcommand("sweep")->description("optimal distance and figures of merit over RIS sizes");
    app.get_subcommand("power")->description("link budget and PA power comparison");
    app.get_subcommand("steer")->description("pattern of a design steered to --theta");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "risfeed: config error: " << e.what() << '\n';
        return exit_config_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    RunConfig config;
    try
    {
        if (!options.preset.empty())
            config = preset(options.preset);
        if (!options.config_path.empty())
            config = load_config_file(options.config_path, config);
        if (command == "steer")
        {
            if (!theta)
                throw ConfigError("steer needs --theta");
            options.overrides.steer_deg = theta;
        }
        apply_overrides(config, options.overrides);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "risfeed: config error: " << e.what() << '\n';
        return exit_config_error;
    }

    return run_command(command, config, options.out_dir, std::cout, std::cerr);
}
