// SPDX-License-Identifier: Apache-2.0
//
// dapb - deployment planning for distributed-antenna power beacons
// Copyright (C) 2026 The dapb Authors
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

// dapb command-line front end. Every subcommand writes RFC 4180 CSV (or a
// key=value report for comply) to --out or stdout.
//
// Exit codes: 0 success/compliant, 1 non-compliant, 2 usage or input
// error, 3 numeric failure.

#include "dapb/commands.hpp"
#include "dapb/errors.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

struct Common
{
    std::string config;
    std::string out;
    bool no_strict = false;
};

void emit(const std::string &text, const std::string &out)
{
    if (out.empty() || out == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw dapb::InputError("cannot open output file " + out);
    f << text;
    if (!f)
        throw dapb::InputError("write to " + out + " failed");
}

dapb::Config load(const Common &c)
{
    const bool strict = !c.no_strict;
    dapb::Config cfg = c.config.empty() ? dapb::Config{} : dapb::load_config(c.config, strict);
    dapb::validate(cfg, strict);
    return cfg;
}

std::optional<dapb::Grid> r_grid(const std::string &sweep)
{
    if (sweep.empty())
        return std::nullopt;
    const auto sw = dapb::parse_sweep(sweep);
    if (sw.axis != "r")
        throw dapb::InputError("this command only sweeps r (got " + sw.axis + ")");
    return sw.grid;
}

void add_common(CLI::App *app, Common &c)
{
    app->add_option("--config", c.config, "key=value scenario file (defaults when omitted)");
    app->add_option("--out", c.out, "output path, stdout when omitted");
    app->add_flag("--no-strict", c.no_strict, "relax the diode ideality range check");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Deployment planning for distributed-antenna power beacons"};
    app.set_version_flag("--version", std::string(dapb::version_string()));
    app.require_subcommand(1);

    Common common;
    std::string sweep;
    std::vector<double> alphas;
    std::vector<double> h_cs;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    double target = 1e-3;
    bool simulate = false;

    auto *height = app.add_subcommand("height", "DA antenna height versus ring radius");
    add_common(height, common);
    height->add_option("--sweep", sweep, "r=lo:hi:step");
    height->add_option("--hc", h_cs, "CA reference heights (repeatable)")->delimiter(',');

    auto *power = app.add_subcommand("power", "average harvested power along one sweep axis");
    add_common(power, common);
    power->add_option("--sweep", sweep, "AXIS=lo:hi:step with AXIS in P, N, h_C, r_MS")->required();
    power->add_option("--alpha", alphas, "path-loss exponents (repeatable)")->delimiter(',');
    power->add_flag("--simulate", simulate, "add Monte Carlo DA columns");
    power->add_option("--samples", samples, "Monte Carlo samples per point")->default_str("100000");
    power->add_option("--seed", seed, "random seed");
    power->add_option("--threads", threads, "worker threads, 0 for all cores");

    auto *optimize = app.add_subcommand("optimize", "efficiency versus ring radius with optimal radii");
    add_common(optimize, common);
    optimize->add_option("--sweep", sweep, "r=lo:hi:step");

    auto *budget = app.add_subcommand("budget", "transmit power needed for a target harvested power");
    add_common(budget, common);
    budget->add_option("--target", target, "target average harvested power [W]")->default_str("0.001");
    budget->add_option("--sweep", sweep, "r=lo:hi:step");

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo validation and efficiency CDF");
    add_common(simulate_cmd, common);
    simulate_cmd->add_option("--samples", samples, "samples per run (at least 1000)")->default_str("1000000");
    simulate_cmd->add_option("--seed", seed, "random seed");
    simulate_cmd->add_option("--alpha", alphas, "path-loss exponents (repeatable)")->delimiter(',');
    simulate_cmd->add_option("--threads", threads, "worker threads, 0 for all cores");

    auto *comply = app.add_subcommand("comply", "radiation safety compliance report");
    add_common(comply, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return dapb::kExitUsage;
    }

    try {
        const auto cfg = load(common);
        if (*height) {
            dapb::HeightOptions opt;
            opt.r_grid = r_grid(sweep);
            opt.h_C = h_cs;
            emit(dapb::to_csv(dapb::cmd_height(cfg, opt)), common.out);
        } else if (*power) {
            dapb::PowerOptions opt;
            opt.sweep = dapb::parse_sweep(sweep);
            opt.alphas = alphas;
            opt.simulate = simulate;
            opt.samples = samples ? samples : 100000;
            opt.seed = seed;
            opt.threads = threads;
            emit(dapb::to_csv(dapb::cmd_power(cfg, opt)), common.out);
        } else if (*optimize) {
            dapb::OptimizeOptions opt;
            opt.r_grid = r_grid(sweep);
            emit(dapb::to_csv(dapb::cmd_optimize(cfg, opt)), common.out);
        } else if (*budget) {
            dapb::BudgetOptions opt;
            opt.target = target;
            opt.r_grid = r_grid(sweep);
            emit(dapb::to_csv(dapb::cmd_budget(cfg, opt)), common.out);
        } else if (*simulate_cmd) {
            dapb::SimulateOptions opt;
            opt.samples = samples ? samples : 1000000;
            if (opt.samples < 1000)
                throw dapb::InputError("--samples must be at least 1000");
            opt.seed = seed;
            opt.threads = threads;
            if (!alphas.empty())
                opt.alphas = alphas;
            emit(dapb::to_csv(dapb::cmd_simulate(cfg, opt)), common.out);
        } else if (*comply) {
            const auto rep = dapb::cmd_comply(cfg);
            emit(dapb::format_report(rep, cfg), common.out);
            return rep.compliant ? dapb::kExitOk : dapb::kExitNonCompliant;
        }
    } catch (const std::exception &e) {
        const int code = dapb::exit_code_for(e);
        std::cerr << (code == dapb::kExitUsage ? "error: " : "numeric failure: ") << e.what() << '\n';
        return code;
    }
    return dapb::kExitOk;
}
