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

#ifndef DAPB_SCENARIO_HPP
#define DAPB_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace dapb
{

// Cell and beacon parameters. Defaults are the reference deployment
// (30 m cell, 100 antennas, 20 W, free-space path loss, 10 W/m^2 limit).
struct Scenario
{
    double R = 30.0;      // cell radius [m]
    double P = 20.0;      // total transmit power [W]
    int N = 100;          // antenna count
    double alpha = 2.0;   // path-loss exponent
    double psi0 = 10.0;   // safety radiation density [W/m^2]
    double d_ref = 1.0;   // far-field reference distance [m]

    bool operator==(const Scenario &) const = default;
};

// Rectifier and channel constants.
struct Rectenna
{
    double I_s = 1e-3;       // reverse saturation current [A]
    double rho = 1.0;        // diode ideality factor
    double V_T = 0.02885;    // thermal voltage [V]
    double xi = 0.85;        // DC conversion efficiency
    double c = 1.0;          // path-loss scaling constant
    double sigma_h2 = 1.0;   // mean multipath power gain

    bool operator==(const Rectenna &) const = default;
};

// Co-located antennas at the cell centre.
struct CaDeployment
{
    double h_C = 7.75;
    bool operator==(const CaDeployment &) const = default;
};

// Antennas on a ring of radius r, all at height h_D.
struct DaDeployment
{
    double r = 20.0;
    double h_D = 1.0;
    bool operator==(const DaDeployment &) const = default;
};

using Deployment = std::variant<CaDeployment, DaDeployment>;

// Everything a config file can set. The CA height doubles as the safety
// reference for the DA height law, so the DA deployment is carried as a
// ring radius and its height is derived where needed.
struct Config
{
    Scenario scenario;
    Rectenna rectenna;
    CaDeployment ca;
    double r = 20.0;

    bool operator==(const Config &) const = default;
};

/// K0 = xi I_s c sigma_h2 / (2 (rho V_T)^2), the factor converting
/// path-loss-weighted transmit power into average harvested DC power.
double k0(const Rectenna &rect);

void validate(const Scenario &s);
// strict = false skips the ideality factor range check.
void validate(const Rectenna &rect, bool strict = true);
void validate(const Deployment &dep, const Scenario &s);
void validate(const Config &cfg, bool strict = true);

/// True iff sqrt(2 R d_ref) <= h_C < R.
bool validate_height_regime(const Scenario &s, double h_C);

// key=value text, '#' comments. Missing keys keep their defaults.
Config parse_config(std::string_view text, bool strict = true);
Config load_config(const std::filesystem::path &path, bool strict = true);

// Round-trips bit-identically through parse_config.
std::string format_config(const Config &cfg);
void save_config(const Config &cfg, const std::filesystem::path &path);

} // namespace dapb

#endif
