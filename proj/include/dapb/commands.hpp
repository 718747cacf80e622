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

#ifndef DAPB_COMMANDS_HPP
#define DAPB_COMMANDS_HPP

#include "dapb/scenario.hpp"
#include "dapb/sweep_table.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dapb
{

// lo:hi:step, points lo + i step for i = 0, 1, ... while <= hi.
struct Grid
{
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;
};

Grid parse_grid(std::string_view text);
std::vector<double> grid_points(const Grid &g);
std::string format_grid(const Grid &g);

// AXIS=lo:hi:step
struct Sweep
{
    std::string axis;
    Grid grid;
};

Sweep parse_sweep(std::string_view text);

struct HeightOptions
{
    std::optional<Grid> r_grid;   // default 0:R:0.5
    std::vector<double> h_C;      // default: the configured h_C
};

struct PowerOptions
{
    Sweep sweep;                  // axis one of P, N, h_C, r_MS
    std::vector<double> alphas;   // default: the configured alpha
    bool simulate = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

struct OptimizeOptions
{
    std::optional<Grid> r_grid;   // default 0:R:R/300
};

struct BudgetOptions
{
    double target = 1e-3;         // [W]
    std::optional<Grid> r_grid;   // default 0:R:R/300
};

struct SimulateOptions
{
    std::vector<double> alphas{2.0, 4.0};
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    int cdf_points = 201;
};

struct ComplianceReport
{
    double P = 0.0;
    double h_C = 0.0;
    double r = 0.0;
    double h_D = 0.0;
    double psi0 = 0.0;
    double ca_density = 0.0;
    double da_density_asymptotic = 0.0;
    double da_density_finite = 0.0;
    double da_hotspot_radius = 0.0;
    double max_density = 0.0;
    double ca_power_limit = 0.0;
    double min_compliant_h_C = 0.0;
    // Verdict: P below the CA boundary 4 pi h_C^2 psi0.
    bool compliant = false;
    // Advisory: the finite ring's own peak also stays under psi0.
    bool finite_ring_within_limit = false;
};

// Commands re-check the config structurally. The diode ideality range is
// a load-time policy (see load_config), so it is not enforced here.
SweepTable cmd_height(const Config &cfg, const HeightOptions &opt = {});
SweepTable cmd_power(const Config &cfg, const PowerOptions &opt);
SweepTable cmd_optimize(const Config &cfg, const OptimizeOptions &opt = {});
SweepTable cmd_budget(const Config &cfg, const BudgetOptions &opt = {});
SweepTable cmd_simulate(const Config &cfg, const SimulateOptions &opt = {});
ComplianceReport cmd_comply(const Config &cfg);

/// key=value lines, one per report field, plus a verdict line.
std::string format_report(const ComplianceReport &rep, const Config &cfg);

inline constexpr int kExitOk = 0;
inline constexpr int kExitNonCompliant = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Process exit code for an exception escaping a subcommand.
int exit_code_for(const std::exception &e) noexcept;

/// Version string compiled into the binary.
std::string_view version_string();

} // namespace dapb

#endif
