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

#include "risfeed/channel.hpp"
#include "risfeed/distance.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/export.hpp"
#include "risfeed/farfield.hpp"
#include "risfeed/link_power.hpp"
#include "risfeed/units.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>

namespace risfeed::cli
{
    namespace fs = std::filesystem;
    using json = nlohmann::json;

    namespace
    {
        void write_file(CommandOutput &out, const fs::path &path, const std::function<void(std::ostream &)> &body)
        {
            fs::create_directories(path.parent_path());
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw ComputationFailure("cannot write " + path.string());
            body(f);
            if (!f)
                throw ComputationFailure("write failed for " + path.string());
            out.files.push_back(path);
        }

        void write_json(CommandOutput &out, const fs::path &path, const json &j)
        {
            write_file(out, path, [&](std::ostream &f) { f << j.dump(2) << '\n'; });
        }

        fs::path dump_scan(const fs::path &dir, const std::string &name, const DistanceScan &scan)
        {
            fs::create_directories(dir);
            const fs::path path = dir / name;
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            write_scan_csv(f, scan);
            return path;
        }

        std::vector<BeamDesign> build_designs(const RunConfig &config, const EigenDecomposition &dec)
        {
            switch (config.design.kind)
            {
            case DesignKind::Pencil:
                return {design1_pencil(dec)};
            case DesignKind::Flattop:
                return {design2_flattop(dec)};
            case DesignKind::Monopulse:
            {
                auto m = design3_monopulse(dec);
                return {m.sum, m.diff};
            }
            case DesignKind::Custom:
            {
                Eigen::VectorXcd phases = identity_phases(dec.ris_size());
                const auto &deg = config.design.phases_deg;
                for (std::size_t k = 0; k < deg.size(); ++k)
                    phases(static_cast<Eigen::Index>(k)) = std::polar(1.0, deg_to_rad(deg[k]));
                return {custom_design(dec, config.design.betas, phases)};
            }
            }
            throw ConfigError("unknown design kind");
        }

        // Shared body of pattern and steer.
        CommandOutput emit_patterns(const RunConfig &config, std::optional<double> theta_s, const fs::path &out_dir)
        {
            CommandOutput out;
            const std::string prefix = theta_s ? "steer_" : "";
            const double d = resolve_distance(config, out_dir);
            const Scene scene = make_scene(config, d);
            const PropagationMatrix t = build_channel(scene);
            const EigenDecomposition dec = decompose(t, config.convention);

            std::vector<BeamDesign> designs = build_designs(config, dec);
            if (theta_s)
                for (auto &design : designs)
                    design = steer(design, *theta_s);

            if (config.export_channel)
                write_file(out, out_dir / "channel.csv", [&](std::ostream &f) { write_channel_csv(f, t); });

            std::vector<FarFieldPattern> patterns;
            std::vector<PatternMetrics> metrics;
            for (const auto &design : designs)
            {
                patterns.push_back(evaluate_pattern(design, t, config.grid_step_deg));
                metrics.push_back(pattern_metrics(patterns.back()));
                if (config.design.kind == DesignKind::Flattop)
                    metrics.back().flat_sector = flat_sector(patterns.back(), config.flat_half_width_deg);
            }

            json summary{{"distance", d}, {"designs", json::array()}};
            std::optional<MonopulseCurve> curve;
            if (config.design.kind == DesignKind::Monopulse)
            {
                curve = monopulse_curve(patterns[0], patterns[1]);
                metrics[1].null_depth_db = curve->null_depth_db;
            }

            for (std::size_t i = 0; i < designs.size(); ++i)
            {
                const std::string &label = designs[i].label;
                write_file(out, out_dir / (prefix + "pattern_" + label + ".csv"),
                           [&](std::ostream &f) { write_pattern_csv(f, patterns[i]); });
                json m = to_json(metrics[i]);
                m["label"] = label;
                m["distance"] = d;
                m["gamma_dbi"] = ris_gain(dec, scene.ris.element().peak_gain);
                if (theta_s)
                    m["steer_deg"] = *theta_s;
                write_json(out, out_dir / (prefix + "metrics_" + label + ".json"), m);
                write_json(out, out_dir / (prefix + "design_" + label + ".json"), to_json(designs[i]));
                summary["designs"].push_back(m);
            }

            if (curve)
            {
                write_file(out, out_dir / (prefix + "monopulse_curve.csv"),
                           [&](std::ostream &f) { write_monopulse_csv(f, *curve); });
                const double lo = metrics[0].peak_angle_deg - metrics[0].hpbw_deg / 2.0;
                const double hi = metrics[0].peak_angle_deg + metrics[0].hpbw_deg / 2.0;
                json mono{
                    {"calibration_phase_deg", curve->calibration_phase_deg},
                    {"null_angle_deg", curve->null_angle_deg},
                    {"null_depth_db", curve->null_depth_db},
                    {"sum_hpbw_deg", metrics[0].hpbw_deg},
                    {"monotone_over_sum_hpbw", strictly_monotone(curve->angles_deg, curve->ratio, lo, hi)},
                };
                write_json(out, out_dir / (prefix + "monopulse.json"), mono);
                summary["monopulse"] = mono;
            }
            out.summary = std::move(summary);
            return out;
        }
    }

    double resolve_distance(const RunConfig &config, const fs::path &out_dir)
    {
        if (config.scene.distance)
            return *config.scene.distance;
        try
        {
            return find_optimal_distance(config.scene.n_p, config.scene.n_a, config.scene.ris_element,
                                         config.scene.amaf_element, distance_options(config))
                .d_opt;
        }
        catch (const SearchFailure &e)
        {
            const fs::path dump = dump_scan(out_dir, "distance_scan.csv", e.scan());
            throw ComputationFailure(std::string(e.what()) + "; scan written to " + dump.string(), dump);
        }
    }

    CommandOutput cmd_pattern(const RunConfig &config, const fs::path &out_dir)
    {
        validate(config);
        return emit_patterns(config, std::nullopt, out_dir);
    }

    CommandOutput cmd_steer(const RunConfig &config, double theta_s_deg, const fs::path &out_dir)
    {
        validate(config);
        if (!(std::abs(theta_s_deg) < 90.0))
            throw ConfigError("steer angle must lie strictly between -90 and 90 degrees");
        return emit_patterns(config, theta_s_deg, out_dir);
    }

    CommandOutput cmd_sweep(const RunConfig &config, const fs::path &out_dir)
    {
        validate(config);
        if (config.sweep.n_p.empty())
            throw ConfigError("sweep.n_p: needs at least one RIS size");
        std::vector<int> sizes = config.sweep.n_p;
        std::sort(sizes.begin(), sizes.end());

        std::vector<SweepRow> rows;
        for (int n_p : sizes)
        {
            RunConfig c = config;
            c.scene.n_p = n_p;
            double d = 0.0;
            if (c.scene.distance)
                d = *c.scene.distance;
            else
            {
                try
                {
                    d = find_optimal_distance(n_p, c.scene.n_a, c.scene.ris_element, c.scene.amaf_element,
                                              distance_options(c))
                            .d_opt;
                }
                catch (const SearchFailure &e)
                {
                    const fs::path dump =
                        dump_scan(out_dir, "distance_scan_np" + std::to_string(n_p) + ".csv", e.scan());
                    throw ComputationFailure("n_p=" + std::to_string(n_p) + ": " + e.what() + "; scan written to " +
                                                 dump.string(),
                                             dump);
                }
            }
            rows.push_back(sweep_row(make_scene(c, d), c.convention, c.grid_step_deg));
        }

        CommandOutput out;
        write_file(out, out_dir / "sweep.csv", [&](std::ostream &f) { write_sweep_csv(f, rows); });
        out.summary = json{{"rows", rows.size()}};
        return out;
    }

    CommandOutput cmd_power(const RunConfig &config, const fs::path &out_dir)
    {
        validate(config);
        if (!config.link_budget)
            throw ConfigError("power needs a link_budget block");
        const double d = resolve_distance(config, out_dir);
        const Scene scene = make_scene(config, d);

        ComparisonOptions options;
        options.drive_dbm = config.drive_dbm;
        options.backoff_db = config.backoff_db;
        options.convention = config.convention;
        const ArchitectureComparison cmp = compare_architectures(*config.link_budget, scene, config.pa, options);

        const EigenDecomposition dec = decompose(build_channel(scene), config.convention);
        const double coherent = dec.u.col(0).cwiseAbs().sum();
        json report = to_json(cmp);
        report["scene"] = {{"n_p", scene.ris.size()}, {"n_a", scene.amaf.size()}, {"distance", d}};
        report["array_factor_db"] = pow_to_db(scene.ris.element().peak_gain * coherent * coherent);
        report["sigma1_sq_db"] = pow_to_db(dec.sigmas(0) * dec.sigmas(0));
        report["backoff_db"] = config.backoff_db;

        CommandOutput out;
        if (config.export_channel)
            write_file(out, out_dir / "channel.csv",
                       [&](std::ostream &f) { write_channel_csv(f, build_channel(scene)); });
        write_json(out, out_dir / "power.json", report);
        out.summary = report;
        return out;
    }

    int run_command(std::string_view name, const RunConfig &config, const fs::path &out_dir, std::ostream &out,
                    std::ostream &err)
    {
        try
        {
            CommandOutput result;
            if (name == "pattern")
                result = cmd_pattern(config, out_dir);
            else if (name == "steer")
                result = cmd_steer(config, config.steer_deg, out_dir);
            else if (name == "sweep")
                result = cmd_sweep(config, out_dir);
            else if (name == "power")
                result = cmd_power(config, out_dir);
            else
                throw ConfigError("unknown command '" + std::string(name) + "'");

            if (name == "pattern" || name == "steer")
                for (const auto &m : result.summary["designs"])
                    out << m["label"].get<std::string>() << ": peak " << format_number(m["peak_dbi"].get<double>())
                        << " dBi at " << format_number(m["peak_angle_deg"].get<double>()) << " deg\n";
            else if (name == "power")
                out << "P_T " << format_number(result.summary["chain"]["tx_power_dbm"].get<double>())
                    << " dBm, DC " << format_number(result.summary["ris_fed"]["total_dc_w"].get<double>())
                    << " W vs " << format_number(result.summary["phased_array"]["total_dc_w"].get<double>())
                    << " W\n";
            for (const auto &f : result.files)
                out << "wrote " << f.string() << '\n';
            return exit_success;
        }
        catch (const ConfigError &e)
        {
            err << "risfeed: config error: " << e.what() << '\n';
            return exit_config_error;
        }
        catch (const std::exception &e)
        {
            err << "risfeed: " << e.what() << '\n';
            return exit_computation_failure;
        }
    }
}
