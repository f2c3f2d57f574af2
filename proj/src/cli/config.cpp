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

#include "risfeed/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace risfeed::cli
{
    namespace
    {
        using json = nlohmann::json;

        void check_keys(const json &j, std::string_view where, std::initializer_list<std::string_view> allowed)
        {
            if (!j.is_object())
                throw ConfigError(std::string(where) + ": expected an object");
            for (const auto &item : j.items())
                if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
                    throw ConfigError(std::string(where) + ": unknown key '" + item.key() + "'");
        }

        double number(const json &j, std::string_view key)
        {
            if (!j.is_number())
                throw ConfigError(std::string(key) + ": expected a number");
            const double v = j.get<double>();
            if (!std::isfinite(v))
                throw ConfigError(std::string(key) + ": must be finite");
            return v;
        }

        int integer(const json &j, std::string_view key)
        {
            if (!j.is_number_integer())
                throw ConfigError(std::string(key) + ": expected an integer");
            return j.get<int>();
        }

        bool boolean(const json &j, std::string_view key)
        {
            if (!j.is_boolean())
                throw ConfigError(std::string(key) + ": expected true or false");
            return j.get<bool>();
        }

        std::string string(const json &j, std::string_view key)
        {
            if (!j.is_string())
                throw ConfigError(std::string(key) + ": expected a string");
            return j.get<std::string>();
        }

        std::vector<double> numbers(const json &j, std::string_view key)
        {
            if (!j.is_array())
                throw ConfigError(std::string(key) + ": expected an array of numbers");
            std::vector<double> out;
            for (const auto &v : j)
                out.push_back(number(v, key));
            return out;
        }

        std::vector<int> integers(const json &j, std::string_view key)
        {
            if (!j.is_array())
                throw ConfigError(std::string(key) + ": expected an array of integers");
            std::vector<int> out;
            for (const auto &v : j)
                out.push_back(integer(v, key));
            return out;
        }

        ElementPattern element(const json &j, std::string_view key)
        {
            if (j.is_string())
            {
                const auto name = j.get<std::string>();
                if (auto p = element_preset(name))
                    return *p;
                throw ConfigError(std::string(key) + ": unknown element preset '" + name + "'");
            }
            check_keys(j, key, {"peak_gain", "exponent"});
            ElementPattern p;
            if (j.contains("peak_gain"))
                p.peak_gain = number(j["peak_gain"], "peak_gain");
            if (j.contains("exponent"))
                p.exponent = number(j["exponent"], "exponent");
            return p;
        }

        std::optional<double> distance_value(const std::string &text)
        {
            if (text == "auto")
                return std::nullopt;
            try
            {
                std::size_t used = 0;
                const double d = std::stod(text, &used);
                if (used == text.size())
                    return d;
            }
            catch (const std::exception &)
            {
            }
            throw ConfigError("distance: expected a number or \"auto\", got '" + text + "'");
        }

        PATechnology technology(const std::string &name)
        {
            if (auto t = find_pa_technology(name))
                return *t;
            throw ConfigError("pa: unknown technology '" + name + "'");
        }

        void apply_scene(SceneConfig &s, const json &j)
        {
            check_keys(j, "scene",
                       {"n_p", "n_a", "d", "ris_spacing", "amaf_spacing", "ris_element", "amaf_element", "offset"});
            if (j.contains("n_p"))
                s.n_p = integer(j["n_p"], "scene.n_p");
            if (j.contains("n_a"))
                s.n_a = integer(j["n_a"], "scene.n_a");
            if (j.contains("d"))
                s.distance = j["d"].is_string() ? distance_value(j["d"].get<std::string>())
                                                : std::optional<double>(number(j["d"], "scene.d"));
            if (j.contains("ris_spacing"))
                s.ris_spacing = number(j["ris_spacing"], "scene.ris_spacing");
            if (j.contains("amaf_spacing"))
                s.amaf_spacing = number(j["amaf_spacing"], "scene.amaf_spacing");
            if (j.contains("ris_element"))
                s.ris_element = element(j["ris_element"], "scene.ris_element");
            if (j.contains("amaf_element"))
                s.amaf_element = element(j["amaf_element"], "scene.amaf_element");
            if (j.contains("offset"))
                s.offset = number(j["offset"], "scene.offset");
        }

        void apply_design(DesignConfig &d, const json &j)
        {
            check_keys(j, "design", {"kind", "betas", "phases_deg"});
            if (j.contains("kind"))
            {
                const auto name = string(j["kind"], "design.kind");
                const auto kind = parse_design_kind(name);
                if (!kind)
                    throw ConfigError("design.kind: unknown design '" + name + "'");
                d.kind = *kind;
            }
            if (j.contains("betas"))
                d.betas = numbers(j["betas"], "design.betas");
            if (j.contains("phases_deg"))
                d.phases_deg = numbers(j["phases_deg"], "design.phases_deg");
        }

        void apply_link_budget(LinkBudget &lb, const json &j)
        {
            check_keys(j, "link_budget",
                       {"carrier_hz", "bandwidth_hz", "range_m", "rx_noise_figure_db", "required_snr_db",
                        "noise_psd_dbm_hz"});
            if (j.contains("carrier_hz"))
                lb.carrier_hz = number(j["carrier_hz"], "link_budget.carrier_hz");
            if (j.contains("bandwidth_hz"))
                lb.bandwidth_hz = number(j["bandwidth_hz"], "link_budget.bandwidth_hz");
            if (j.contains("range_m"))
                lb.range_m = number(j["range_m"], "link_budget.range_m");
            if (j.contains("rx_noise_figure_db"))
                lb.rx_noise_figure_db = number(j["rx_noise_figure_db"], "link_budget.rx_noise_figure_db");
            if (j.contains("required_snr_db"))
                lb.required_snr_db = number(j["required_snr_db"], "link_budget.required_snr_db");
            if (j.contains("noise_psd_dbm_hz"))
                lb.noise_psd_dbm_hz = number(j["noise_psd_dbm_hz"], "link_budget.noise_psd_dbm_hz");
        }

        void apply_pa(PATechnology &pa, const json &j)
        {
            if (j.is_string())
            {
                pa = technology(j.get<std::string>());
                return;
            }
            check_keys(j, "pa", {"name", "psat_dbm", "pae_fraction", "gain_db"});
            if (j.contains("name"))
                pa.name = string(j["name"], "pa.name");
            if (j.contains("psat_dbm"))
                pa.psat_dbm = number(j["psat_dbm"], "pa.psat_dbm");
            if (j.contains("pae_fraction"))
                pa.pae_fraction = number(j["pae_fraction"], "pa.pae_fraction");
            if (j.contains("gain_db"))
                pa.gain_db = number(j["gain_db"], "pa.gain_db");
        }

        PhaseConvention convention(const std::string &name)
        {
            if (auto c = parse_phase_convention(name))
                return *c;
            throw ConfigError("phase_convention: unknown convention '" + name + "'");
        }
    }

    std::string_view to_string(DesignKind k)
    {
        switch (k)
        {
        case DesignKind::Pencil:
            return "pencil";
        case DesignKind::Flattop:
            return "flattop";
        case DesignKind::Monopulse:
            return "monopulse";
        case DesignKind::Custom:
            return "custom";
        }
        return "unknown";
    }

    std::optional<DesignKind> parse_design_kind(std::string_view name)
    {
        for (auto k : {DesignKind::Pencil, DesignKind::Flattop, DesignKind::Monopulse, DesignKind::Custom})
            if (to_string(k) == name)
                return k;
        return std::nullopt;
    }

    void apply_json(RunConfig &config, const nlohmann::json &j)
    {
        check_keys(j, "config",
                   {"scene", "design", "optimizer", "sweep", "grid_step_deg", "steer_deg", "flat_half_width_deg",
                    "phase_convention", "link_budget", "pa", "backoff_db", "drive_dbm", "export_channel"});
        if (j.contains("scene"))
            apply_scene(config.scene, j["scene"]);
        if (j.contains("design"))
            apply_design(config.design, j["design"]);
        if (j.contains("optimizer"))
        {
            const auto &o = j["optimizer"];
            check_keys(o, "optimizer", {"enabled", "d_step", "persistence"});
            if (o.contains("enabled"))
                config.optimizer.enabled = boolean(o["enabled"], "optimizer.enabled");
            if (o.contains("d_step"))
                config.optimizer.d_step = number(o["d_step"], "optimizer.d_step");
            if (o.contains("persistence"))
                config.optimizer.persistence = integer(o["persistence"], "optimizer.persistence");
        }
        if (j.contains("sweep"))
        {
            const auto &s = j["sweep"];
            check_keys(s, "sweep", {"n_p"});
            if (s.contains("n_p"))
                config.sweep.n_p = integers(s["n_p"], "sweep.n_p");
        }
        if (j.contains("grid_step_deg"))
            config.grid_step_deg = number(j["grid_step_deg"], "grid_step_deg");
        if (j.contains("steer_deg"))
            config.steer_deg = number(j["steer_deg"], "steer_deg");
        if (j.contains("flat_half_width_deg"))
            config.flat_half_width_deg = number(j["flat_half_width_deg"], "flat_half_width_deg");
        if (j.contains("phase_convention"))
            config.convention = convention(string(j["phase_convention"], "phase_convention"));
        if (j.contains("link_budget"))
        {
            if (j["link_budget"].is_null())
                config.link_budget.reset();
            else
            {
                LinkBudget lb = config.link_budget.value_or(LinkBudget{});
                apply_link_budget(lb, j["link_budget"]);
                config.link_budget = lb;
            }
        }
        if (j.contains("pa"))
            apply_pa(config.pa, j["pa"]);
        if (j.contains("backoff_db"))
            config.backoff_db = number(j["backoff_db"], "backoff_db");
        if (j.contains("drive_dbm"))
            config.drive_dbm = j["drive_dbm"].is_null() ? std::nullopt
                                                        : std::optional<double>(number(j["drive_dbm"], "drive_dbm"));
        if (j.contains("export_channel"))
            config.export_channel = boolean(j["export_channel"], "export_channel");
    }

    RunConfig load_config_file(const std::filesystem::path &path, RunConfig base)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file " + path.string());
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
        }
        apply_json(base, j);
        return base;
    }

    std::vector<std::string> preset_names()
    {
        return {"table1", "table2", "paper", "fig3", "fig5", "fig6"};
    }

    RunConfig preset(std::string_view name)
    {
        RunConfig c;
        if (name == "table1" || name == "table2")
        {
            c.sweep.n_p = {16, 32, 64, 128, 192};
            c.scene.distance.reset();
            if (name == "table2")
                c.scene.ris_element = c.scene.amaf_element = patch_8dbi;
        }
        else if (name == "paper")
            c.link_budget = LinkBudget{};
        else if (name == "fig3")
            c.design.kind = DesignKind::Pencil;
        else if (name == "fig5")
            c.design.kind = DesignKind::Flattop;
        else if (name == "fig6")
            c.design.kind = DesignKind::Monopulse;
        else
            throw ConfigError("unknown preset '" + std::string(name) + "'");
        return c;
    }

    void apply_overrides(RunConfig &config, const Overrides &o)
    {
        if (o.n_p)
            config.scene.n_p = *o.n_p;
        if (o.n_a)
            config.scene.n_a = *o.n_a;
        if (o.distance)
            config.scene.distance = distance_value(*o.distance);
        if (o.design)
        {
            const auto kind = parse_design_kind(*o.design);
            if (!kind)
                throw ConfigError("design: unknown design '" + *o.design + "'");
            config.design.kind = *kind;
        }
        if (o.grid_step_deg)
            config.grid_step_deg = *o.grid_step_deg;
        if (o.steer_deg)
            config.steer_deg = *o.steer_deg;
        if (o.phase_convention)
            config.convention = convention(*o.phase_convention);
        if (o.sweep_n_p)
            config.sweep.n_p = *o.sweep_n_p;
        if (o.snr_db)
        {
            LinkBudget lb = config.link_budget.value_or(LinkBudget{});
            lb.required_snr_db = *o.snr_db;
            config.link_budget = lb;
        }
        if (o.pa)
            config.pa = technology(*o.pa);
        if (o.backoff_db)
            config.backoff_db = *o.backoff_db;
        if (o.drive_dbm)
            config.drive_dbm = *o.drive_dbm;
        if (o.export_channel)
            config.export_channel = true;
    }

    void validate(const RunConfig &c)
    {
        const auto &s = c.scene;
        if (s.n_p < 1 || s.n_a < 1)
            throw ConfigError("scene: n_p and n_a must be at least 1");
        if (s.distance && !(*s.distance > 0.0 && std::isfinite(*s.distance)))
            throw ConfigError("scene.d: must be positive");
        if (!s.distance && !c.optimizer.enabled)
            throw ConfigError("scene.d: \"auto\" needs the distance optimizer enabled");
        if (!s.distance && s.offset != 0.0)
            throw ConfigError("scene.d: \"auto\" assumes a centered feeder (offset 0)");
        if (!(s.ris_spacing > 0.0) || !(s.amaf_spacing > 0.0))
            throw ConfigError("scene: spacings must be positive");
        if (!std::isfinite(s.offset))
            throw ConfigError("scene.offset: must be finite");
        for (const auto *e : {&s.ris_element, &s.amaf_element})
            if (!(e->peak_gain > 0.0) || !(e->exponent >= 0.0))
                throw ConfigError("scene: element gain must be positive and exponent non-negative");
        if (!(c.optimizer.d_step > 0.0) || c.optimizer.persistence < 1)
            throw ConfigError("optimizer: d_step must be positive and persistence at least 1");
        if (!(c.grid_step_deg > 0.0 && c.grid_step_deg <= 1.0))
            throw ConfigError("grid_step_deg: must lie in (0, 1]");
        if (!(std::abs(c.steer_deg) < 90.0))
            throw ConfigError("steer_deg: must lie strictly between -90 and 90");
        if (!(c.flat_half_width_deg > 0.0 && c.flat_half_width_deg < 90.0))
            throw ConfigError("flat_half_width_deg: must lie in (0, 90)");
        if (c.design.kind == DesignKind::Custom)
        {
            if (c.design.betas.empty())
                throw ConfigError("design.betas: required for a custom design");
            if (c.design.betas.size() > static_cast<std::size_t>(std::min(s.n_p, s.n_a)))
                throw ConfigError("design.betas: more entries than eigenmodes");
            if (!c.design.phases_deg.empty() && c.design.phases_deg.size() != static_cast<std::size_t>(s.n_p))
                throw ConfigError("design.phases_deg: needs one entry per RIS element");
        }
        for (int n : c.sweep.n_p)
            if (n < 1)
                throw ConfigError("sweep.n_p: sizes must be at least 1");
        if (std::set<int>(c.sweep.n_p.begin(), c.sweep.n_p.end()).size() != c.sweep.n_p.size())
            throw ConfigError("sweep.n_p: duplicate sizes");
        if (c.link_budget)
        {
            try
            {
                c.link_budget->validate();
            }
            catch (const InvalidArgument &e)
            {
                throw ConfigError(std::string("link_budget: ") + e.what());
            }
        }
        try
        {
            c.pa.validate();
        }
        catch (const InvalidArgument &e)
        {
            throw ConfigError(std::string("pa: ") + e.what());
        }
        if (!std::isfinite(c.backoff_db) || c.backoff_db < 0.0)
            throw ConfigError("backoff_db: must be non-negative");
    }

    Scene make_scene(const RunConfig &config, double distance)
    {
        const auto &s = config.scene;
        return Scene{LinearArray(s.n_p, s.ris_spacing, s.ris_element), LinearArray(s.n_a, s.amaf_spacing, s.amaf_element),
                     distance, s.offset};
    }

    DistanceOptions distance_options(const RunConfig &config)
    {
        DistanceOptions o;
        o.d_step = config.optimizer.d_step;
        o.persistence = config.optimizer.persistence;
        o.ris_spacing = config.scene.ris_spacing;
        o.amaf_spacing = config.scene.amaf_spacing;
        o.convention = config.convention;
        o.grid_step_deg = config.grid_step_deg;
        return o;
    }
}
