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

#include "dapb/scenario.hpp"

#include "dapb/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dapb
{

namespace
{

void require(bool ok, const char *key, const std::string &msg)
{
    if (!ok)
        throw ValidationError(key, std::string("invalid ") + key + ": " + msg);
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view value, int line_no)
{
    double out = 0.0;
    const auto *first = value.data();
    const auto *last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw ConfigParseError(std::string(key), "line " + std::to_string(line_no) + ": cannot parse value '" +
                                                     std::string(value) + "' for key " + std::string(key));
    return out;
}

int parse_int(std::string_view key, std::string_view value, int line_no)
{
    int out = 0;
    const auto *first = value.data();
    const auto *last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw ConfigParseError(std::string(key), "line " + std::to_string(line_no) + ": key " + std::string(key) +
                                                     " expects an integer, got '" + std::string(value) + "'");
    return out;
}

double *field(Config &cfg, std::string_view key)
{
    if (key == "R") return &cfg.scenario.R;
    if (key == "P") return &cfg.scenario.P;
    if (key == "alpha") return &cfg.scenario.alpha;
    if (key == "psi0") return &cfg.scenario.psi0;
    if (key == "d_ref") return &cfg.scenario.d_ref;
    if (key == "h_C") return &cfg.ca.h_C;
    if (key == "r") return &cfg.r;
    if (key == "I_s") return &cfg.rectenna.I_s;
    if (key == "V_T") return &cfg.rectenna.V_T;
    if (key == "rho") return &cfg.rectenna.rho;
    if (key == "xi") return &cfg.rectenna.xi;
    if (key == "sigma_h2") return &cfg.rectenna.sigma_h2;
    if (key == "c") return &cfg.rectenna.c;
    return nullptr;
}

std::string shortest(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

double k0(const Rectenna &rect)
{
    const double rv = rect.rho * rect.V_T;
    return rect.xi * rect.I_s * rect.c * rect.sigma_h2 / (2.0 * rv * rv);
}

void validate(const Scenario &s)
{
    require(s.R > 0.0, "R", "cell radius must be positive");
    require(s.P > 0.0, "P", "transmit power must be positive");
    require(s.N >= 1, "N", "antenna count must be at least 1");
    require(s.alpha >= 2.0, "alpha", "path-loss exponent must be >= 2");
    require(s.psi0 > 0.0, "psi0", "safety density must be positive");
    require(s.d_ref > 0.0, "d_ref", "reference distance must be positive");
}

void validate(const Rectenna &rect, bool strict)
{
    require(rect.I_s > 0.0, "I_s", "saturation current must be positive");
    require(rect.V_T > 0.0, "V_T", "thermal voltage must be positive");
    require(rect.c > 0.0, "c", "scaling constant must be positive");
    require(rect.sigma_h2 > 0.0, "sigma_h2", "mean gain must be positive");
    require(rect.xi > 0.0 && rect.xi < 1.0, "xi", "conversion efficiency must lie in (0,1)");
    require(rect.rho > 0.0, "rho", "ideality factor must be positive");
    if (strict)
        require(rect.rho >= 1.0 && rect.rho <= 2.0, "rho", "ideality factor must lie in [1,2] (use --no-strict to override)");
}

void validate(const Deployment &dep, const Scenario &s)
{
    if (const auto *ca = std::get_if<CaDeployment>(&dep)) {
        require(ca->h_C > 0.0, "h_C", "antenna height must be positive");
    } else {
        const auto &da = std::get<DaDeployment>(dep);
        require(da.h_D > 0.0, "h_D", "antenna height must be positive");
        require(da.r >= 0.0 && da.r <= s.R, "r", "ring radius must lie in [0, R]");
    }
}

void validate(const Config &cfg, bool strict)
{
    validate(cfg.scenario);
    validate(cfg.rectenna, strict);
    validate(Deployment{cfg.ca}, cfg.scenario);
    require(cfg.r >= 0.0 && cfg.r <= cfg.scenario.R, "r", "ring radius must lie in [0, R]");
}

bool validate_height_regime(const Scenario &s, double h_C)
{
    return std::sqrt(2.0 * s.R * s.d_ref) <= h_C && h_C < s.R;
}

Config parse_config(std::string_view text, bool strict)
{
    Config cfg;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigParseError("", "line " + std::to_string(line_no) + ": expected key=value, got '" +
                                           std::string(line) + "'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigParseError("", "line " + std::to_string(line_no) + ": missing key");

        if (key == "N") {
            cfg.scenario.N = parse_int(key, value, line_no);
        } else if (double *dst = field(cfg, key)) {
            *dst = parse_double(key, value, line_no);
        } else {
            throw ConfigParseError(std::string(key),
                                   "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    validate(cfg, strict);
    return cfg;
}

Config load_config(const std::filesystem::path &path, bool strict)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), strict);
}

std::string format_config(const Config &cfg)
{
    std::ostringstream out;
    out << "# cell\n";
    out << "R=" << shortest(cfg.scenario.R) << '\n';
    out << "h_C=" << shortest(cfg.ca.h_C) << '\n';
    out << "r=" << shortest(cfg.r) << '\n';
    out << "N=" << cfg.scenario.N << '\n';
    out << "P=" << shortest(cfg.scenario.P) << '\n';
    out << "alpha=" << shortest(cfg.scenario.alpha) << '\n';
    out << "psi0=" << shortest(cfg.scenario.psi0) << '\n';
    out << "d_ref=" << shortest(cfg.scenario.d_ref) << '\n';
    out << "# rectenna\n";
    out << "I_s=" << shortest(cfg.rectenna.I_s) << '\n';
    out << "V_T=" << shortest(cfg.rectenna.V_T) << '\n';
    out << "rho=" << shortest(cfg.rectenna.rho) << '\n';
    out << "xi=" << shortest(cfg.rectenna.xi) << '\n';
    out << "sigma_h2=" << shortest(cfg.rectenna.sigma_h2) << '\n';
    out << "c=" << shortest(cfg.rectenna.c) << '\n';
    return out.str();
}

void save_config(const Config &cfg, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write config file " + path.string());
    out << format_config(cfg);
}

} // namespace dapb
