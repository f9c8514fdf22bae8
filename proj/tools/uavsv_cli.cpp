// SPDX-License-Identifier: Apache-2.0
//
// uavsv: UWB air-to-ground channel modelling toolkit
// Copyright (C) 2026 The uavsv authors
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

// Command-line front end. Exit codes: 0 success, 2 validation or parse error, 3 I/O error.

#include "uavsv/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{
    constexpr int kExitValidation = 2;
    constexpr int kExitIo = 3;

    struct Overrides
    {
        std::string config;
        std::uint64_t seed = 0;
        std::size_t scans = 0;
        std::string scenario, rx, orientation;
        int x = 0;
        std::string out;
        unsigned threads = 1;
        bool decay_as_time_constant = false;
        bool harmonize_gains = false;
        bool deterministic = false;
        double min_duration = 0.0, min_drop = 0.0;
    };

    void add_config_flags(CLI::App *cmd, Overrides &o)
    {
        cmd->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
        cmd->add_option("--out", o.out, "Output directory");
        cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores (results do not depend on it)");
    }

    void add_rule_flags(CLI::App *cmd, Overrides &o)
    {
        cmd->add_option("--min-duration", o.min_duration, "Minimum cluster duration in ns");
        cmd->add_option("--min-drop", o.min_drop, "Drop in dB that separates clusters");
    }

    uavsv::RunConfig resolve(CLI::App *cmd, const Overrides &o)
    {
        uavsv::RunConfig cfg;
        if (!o.config.empty())
            cfg = uavsv::run_config_from_json(uavsv::read_text_file(o.config));
        auto given = [&](const char *flag) { return cmd->get_option_no_throw(flag) && cmd->count(flag) > 0; };
        if (given("--seed"))
            cfg.seed = o.seed;
        if (given("--scans"))
            cfg.n_scans = o.scans;
        if (given("--scenario"))
            cfg.key.scenario = uavsv::parse_scenario(o.scenario);
        if (given("--rx"))
            cfg.key.rx = uavsv::parse_receiver(o.rx);
        if (given("--orientation"))
            cfg.key.orientation = uavsv::parse_orientation(o.orientation);
        if (given("--x") && cmd->get_name() == "synthesize")
            cfg.key.x_m = o.x;
        if (given("--out"))
            cfg.output_dir = o.out;
        if (given("--threads"))
            cfg.threads = o.threads;
        if (given("--decay-as-time-constant"))
            cfg.synthesis.decay_as_time_constant = o.decay_as_time_constant;
        if (given("--deterministic"))
            cfg.synthesis.amplitude = uavsv::AmplitudeModel::Deterministic;
        if (given("--harmonize-gains"))
            cfg.rf.harmonize_gains = o.harmonize_gains;
        if (given("--min-duration"))
            cfg.rule.min_duration_ns = o.min_duration;
        if (given("--min-drop"))
            cfg.rule.min_drop_db = o.min_drop;
        return cfg;
    }

    // Writes result files when an output directory was requested, else prints them.
    void emit(const uavsv::CommandResult &r, CLI::App *cmd, const uavsv::RunConfig &cfg, bool stdout_default)
    {
        const bool to_dir = !stdout_default || cmd->count("--out") > 0;
        if (to_dir)
        {
            uavsv::write_outputs(r, cfg.output_dir);
            std::cout << r.summary;
            return;
        }
        for (std::size_t i = 0; i < r.files.size(); ++i)
        {
            if (i > 0)
                std::cout << "\n";
            std::cout << r.files[i].content;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"uavsv: UWB air-to-ground channel modelling toolkit"};
    app.require_subcommand(1);
    Overrides o;

    auto *syn = app.add_subcommand("synthesize", "Synthesize a CIR ensemble from a catalog row");
    add_config_flags(syn, o);
    syn->add_option("--seed", o.seed, "64-bit seed");
    syn->add_option("--scans", o.scans, "Number of scans");
    syn->add_option("--scenario", o.scenario, "HoverOpen, HoverFoliage or MovingOpen");
    syn->add_option("--rx", o.rx, "RX1 or RX2");
    syn->add_option("--orientation", o.orientation, "VV or VH");
    syn->add_option("--x", o.x, "Horizontal distance of the catalog row (15 or 30 m)");
    syn->add_flag("--decay-as-time-constant", o.decay_as_time_constant, "Read eta and gamma as time constants");
    syn->add_flag("--deterministic", o.deterministic, "Use sqrt(mean power) amplitudes instead of Rayleigh");

    std::string cir_path;
    auto *ana = app.add_subcommand("analyze", "PDP, clusters and channel statistics of a CIR file");
    ana->add_option("cir", cir_path, "CIR file")->required();
    add_config_flags(ana, o);
    add_rule_flags(ana, o);

    std::vector<double> xs{15.0, 30.0}, hs{10.0, 20.0, 30.0};
    auto *pl = app.add_subcommand("pathloss", "Analytical path-loss sweep");
    pl->set_help_flag("--help", "Print this help message and exit"); // frees -h for heights
    add_config_flags(pl, o);
    pl->add_option("--scenario", o.scenario, "HoverOpen, HoverFoliage or MovingOpen");
    pl->add_option("--rx", o.rx, "RX1 or RX2");
    pl->add_option("--orientation", o.orientation, "VV or VH");
    pl->add_option("--x", xs, "Horizontal distances in m")->expected(1, -1);
    pl->add_option("--h", hs, "UAV heights in m")->expected(1, -1);
    pl->add_flag("--harmonize-gains", o.harmonize_gains, "Square every per-antenna elevation gain factor");

    auto *est = app.add_subcommand("estimate", "Estimate SV parameters from a CIR file");
    est->add_option("cir", cir_path, "CIR file")->required();
    add_config_flags(est, o);
    add_rule_flags(est, o);

    auto *cat = app.add_subcommand("catalog", "Dump the built-in parameter tables");
    add_config_flags(cat, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitValidation;
    }

    try
    {
        if (syn->parsed())
        {
            const auto cfg = resolve(syn, o);
            emit(uavsv::cmd_synthesize(cfg), syn, cfg, false);
        }
        else if (ana->parsed())
        {
            const auto cfg = resolve(ana, o);
            const auto file = uavsv::parse_cir_file(uavsv::read_text_file(cir_path));
            emit(uavsv::cmd_analyze(file, cfg), ana, cfg, false);
        }
        else if (pl->parsed())
        {
            const auto cfg = resolve(pl, o);
            uavsv::PathlossRequest req;
            req.scenario = cfg.key.scenario;
            req.rx = cfg.key.rx;
            req.orientation = cfg.key.orientation;
            req.x_m = xs;
            req.h_m = hs;
            req.rf = cfg.rf;
            emit(uavsv::cmd_pathloss(req), pl, cfg, true);
        }
        else if (est->parsed())
        {
            const auto cfg = resolve(est, o);
            const auto file = uavsv::parse_cir_file(uavsv::read_text_file(cir_path));
            emit(uavsv::cmd_estimate(file, cfg.rule), est, cfg, true);
        }
        else if (cat->parsed())
        {
            const auto cfg = resolve(cat, o);
            emit(uavsv::cmd_catalog(), cat, cfg, true);
        }
    }
    catch (const uavsv::ParseError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    catch (const uavsv::IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
