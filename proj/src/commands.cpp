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

#include "dapb/commands.hpp"

#include "dapb/errors.hpp"
#include "dapb/geometry.hpp"
#include "dapb/harvest.hpp"
#include "dapb/montecarlo.hpp"
#include "dapb/optimize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#ifndef DAPB_VERSION_STRING
#define DAPB_VERSION_STRING "unknown"
#endif

namespace dapb
{

using std::numbers::pi;

namespace
{

constexpr std::size_t kMaxGridPoints = 1000000;

double parse_number(std::string_view text, std::string_view what)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw InputError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

std::string alpha_tag(double alpha) { return "a" + format_number(alpha); }

void stamp(SweepTable &t, const Config &cfg, std::string_view command)
{
    t.set_meta("command", std::string(command));
    t.set_meta("version", std::string(version_string()));
    std::istringstream lines(format_config(cfg));
    for (std::string line; std::getline(lines, line);) {
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        t.set_meta("config." + line.substr(0, eq), line.substr(eq + 1));
    }
}

std::string join(const std::vector<double> &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += format_number(v[i]);
    }
    return out;
}

Grid default_r_grid(const Config &cfg, double step) { return {0.0, cfg.scenario.R, step}; }

void check_r_grid(const Config &cfg, const std::vector<double> &rs)
{
    for (double r : rs)
        if (r < 0.0 || r > cfg.scenario.R)
            throw InputError("ring radius " + format_number(r) + " outside [0, R]");
}

std::vector<double> alphas_or_default(const std::vector<double> &alphas, const Config &cfg)
{
    auto out = alphas.empty() ? std::vector<double>{cfg.scenario.alpha} : alphas;
    for (double a : out)
        check_alpha(a);
    return out;
}

} // namespace

std::string_view version_string() { return DAPB_VERSION_STRING; }

int exit_code_for(const std::exception &e) noexcept
{
    if (dynamic_cast<const InputError *>(&e) != nullptr)
        return kExitUsage;
    return kExitNumeric;
}

Grid parse_grid(std::string_view text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    Grid g;
    if (c2 == std::string_view::npos) {
        // A bare number is a one-point grid.
        g.lo = g.hi = parse_number(text, "grid value");
        g.step = 1.0;
        return g;
    }
    g.lo = parse_number(text.substr(0, c1), "grid start");
    g.hi = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "grid end");
    g.step = parse_number(text.substr(c2 + 1), "grid step");
    if (!(g.step > 0.0))
        throw InputError("grid step must be positive");
    if (g.hi < g.lo)
        throw InputError("grid end lies below grid start");
    return g;
}

std::vector<double> grid_points(const Grid &g)
{
    const double span = (g.hi - g.lo) / g.step;
    if (span + 1.0 > static_cast<double>(kMaxGridPoints))
        throw InputError("grid has too many points");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::min(g.hi, g.lo + static_cast<double>(i) * g.step);
    return out;
}

std::string format_grid(const Grid &g)
{
    return format_number(g.lo) + ":" + format_number(g.hi) + ":" + format_number(g.step);
}

Sweep parse_sweep(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw InputError("sweep must look like AXIS=lo:hi:step");
    return {std::string(text.substr(0, eq)), parse_grid(text.substr(eq + 1))};
}

SweepTable cmd_height(const Config &cfg, const HeightOptions &opt)
{
    validate(cfg, false);
    const Grid grid = opt.r_grid.value_or(default_r_grid(cfg, 0.5));
    const auto rs = grid_points(grid);
    check_r_grid(cfg, rs);
    const auto hcs = opt.h_C.empty() ? std::vector<double>{cfg.ca.h_C} : opt.h_C;
    for (double h : hcs)
        if (!(h > 0.0))
            throw InputError("h_C must be positive");

    std::vector<std::string> cols{"r"};
    for (double h : hcs) {
        const std::string tag = hcs.size() == 1 ? "" : "_hC" + format_number(h);
        cols.push_back("h_D_asymptotic" + tag);
        cols.push_back("h_D_finite" + tag);
    }
    SweepTable t(cols);
    stamp(t, cfg, "height");
    t.set_meta("sweep", "r=" + format_grid(grid));
    t.set_meta("h_C", join(hcs));

    for (double r : rs) {
        std::vector<double> row{r};
        for (double h : hcs) {
            row.push_back(da_height_asymptotic(r, h));
            row.push_back(da_height_finite(cfg.scenario, r, h));
        }
        t.add_row(std::move(row));
    }
    return t;
}

SweepTable cmd_power(const Config &cfg, const PowerOptions &opt)
{
    validate(cfg, false);
    const std::string &axis = opt.sweep.axis;
    if (axis != "P" && axis != "N" && axis != "h_C" && axis != "r_MS")
        throw InputError("unknown sweep axis '" + axis + "' (expected P, N, h_C or r_MS)");
    const auto xs = grid_points(opt.sweep.grid);
    const auto alphas = alphas_or_default(opt.alphas, cfg);
    if (opt.simulate && opt.samples < 1)
        throw InputError("--samples must be at least 1");

    std::vector<std::string> cols{axis};
    for (double a : alphas) {
        cols.push_back("ca_" + alpha_tag(a));
        cols.push_back("da_" + alpha_tag(a));
        if (opt.simulate) {
            cols.push_back("da_sim_" + alpha_tag(a));
            cols.push_back("da_sim_se_" + alpha_tag(a));
        }
    }
    SweepTable t(cols);
    stamp(t, cfg, "power");
    t.set_meta("sweep", axis + "=" + format_grid(opt.sweep.grid));
    t.set_meta("alpha", join(alphas));
    if (opt.simulate) {
        t.set_meta("samples", std::to_string(opt.samples));
        t.set_meta("seed", std::to_string(opt.seed));
    }

    const SimOptions sim{opt.threads, false};
    for (double x : xs) {
        Config c = cfg;
        double r_ms = 0.0;
        if (axis == "P") {
            c.scenario.P = x;
        } else if (axis == "N") {
            if (x != std::floor(x) || x < 1.0)
                throw InputError("N sweep values must be positive integers");
            c.scenario.N = static_cast<int>(x);
        } else if (axis == "h_C") {
            c.ca.h_C = x;
        } else {
            if (x < 0.0 || x > cfg.scenario.R)
                throw OutOfCellError("r_MS sweep leaves the cell");
            r_ms = x;
        }
        validate(c, false);
        const auto da = safe_da_deployment(c.r, c.ca.h_C);

        std::vector<double> row{x};
        for (double a : alphas) {
            Scenario s = c.scenario;
            s.alpha = a;
            if (axis == "r_MS") {
                row.push_back(ergodic_power_at(s, c.rectenna, c.ca, {r_ms, 0.0}));
                row.push_back(radial_profile_da(s, c.rectenna, da.r, da.h_D, r_ms));
            } else {
                row.push_back(avg_power_ca(s, c.rectenna, c.ca.h_C));
                row.push_back(avg_power_da(s, c.rectenna, da.r, da.h_D));
            }
            if (opt.simulate) {
                const auto res = axis == "r_MS"
                                     ? simulate_ring_power(s, c.rectenna, da, r_ms, opt.samples, opt.seed, sim)
                                     : simulate_avg_power(s, c.rectenna, da, opt.samples, opt.seed, sim);
                row.push_back(res.mean);
                row.push_back(res.std_error);
            }
        }
        t.add_row(std::move(row));
    }
    return t;
}

SweepTable cmd_optimize(const Config &cfg, const OptimizeOptions &opt)
{
    validate(cfg, false);
    const Scenario &s = cfg.scenario;
    const double h_C = cfg.ca.h_C;
    require_height_regime(s, h_C);
    const Grid grid = opt.r_grid.value_or(default_r_grid(cfg, s.R / 300.0));
    const auto rs = grid_points(grid);
    check_r_grid(cfg, rs);

    const auto sol2 = optimal_radius_alpha2(s, cfg.rectenna, h_C);
    const auto sol4 = optimal_radius_alpha4(s, cfg.rectenna, h_C);

    Scenario s2 = s, s4 = s;
    s2.alpha = 2.0;
    s4.alpha = 4.0;
    const double ca2 = efficiency(s2, cfg.rectenna, cfg.ca);
    const double ca4 = efficiency(s4, cfg.rectenna, cfg.ca);

    SweepTable t({"r", "eta_da_a2", "eta_da_a4", "eta_ca_a2", "eta_ca_a4", "marker"});
    stamp(t, cfg, "optimize");
    t.set_meta("sweep", "r=" + format_grid(grid));
    t.set_meta("r_star_a2", sol2.r_star);
    t.set_meta("eta_star_a2", sol2.efficiency_at_r_star);
    t.set_meta("method_a2", std::string(to_string(sol2.method)));
    t.set_meta("r_star_a4", sol4.r_star);
    t.set_meta("eta_star_a4", sol4.efficiency_at_r_star);
    t.set_meta("method_a4", std::string(to_string(sol4.method)));
    t.set_meta("candidates_a4", std::to_string(sol4.candidates.size()));

    struct Entry
    {
        double r;
        int marker;
    };
    std::vector<Entry> entries;
    for (double r : rs)
        entries.push_back({r, 0});
    entries.push_back({sol2.r_star, 2});
    entries.push_back({sol4.r_star, 4});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) { return a.r < b.r; });

    for (const auto &e : entries)
        t.add_row({e.r, objective(s, cfg.rectenna, 2, h_C, e.r), objective(s, cfg.rectenna, 4, h_C, e.r), ca2, ca4,
                   static_cast<double>(e.marker)});
    return t;
}

SweepTable cmd_budget(const Config &cfg, const BudgetOptions &opt)
{
    validate(cfg, false);
    if (!(opt.target > 0.0))
        throw InputError("target power must be positive");
    const Scenario &s = cfg.scenario;
    const double h_C = cfg.ca.h_C;
    require_height_regime(s, h_C);
    const Grid grid = opt.r_grid.value_or(default_r_grid(cfg, s.R / 300.0));
    const auto rs = grid_points(grid);
    check_r_grid(cfg, rs);

    Scenario s2 = s, s4 = s;
    s2.alpha = 2.0;
    s4.alpha = 4.0;
    const double ca2 = required_power(opt.target, s2, cfg.rectenna, cfg.ca);
    const double ca4 = required_power(opt.target, s4, cfg.rectenna, cfg.ca);

    SweepTable t({"r", "power_da_a2", "power_da_a4", "power_ca_a2", "power_ca_a4"});
    stamp(t, cfg, "budget");
    t.set_meta("sweep", "r=" + format_grid(grid));
    t.set_meta("target", opt.target);

    const auto sol2 = optimal_radius_alpha2(s, cfg.rectenna, h_C);
    const auto sol4 = optimal_radius_alpha4(s, cfg.rectenna, h_C);
    const double opt2 = required_power(opt.target, s2, cfg.rectenna, safe_da_deployment(sol2.r_star, h_C));
    const double opt4 = required_power(opt.target, s4, cfg.rectenna, safe_da_deployment(sol4.r_star, h_C));
    t.set_meta("r_star_a2", sol2.r_star);
    t.set_meta("power_star_a2", opt2);
    t.set_meta("saving_db_a2", 10.0 * std::log10(ca2 / opt2));
    t.set_meta("r_star_a4", sol4.r_star);
    t.set_meta("power_star_a4", opt4);
    t.set_meta("saving_db_a4", 10.0 * std::log10(ca4 / opt4));

    for (double r : rs) {
        const auto da = safe_da_deployment(r, h_C);
        t.add_row({r, required_power(opt.target, s2, cfg.rectenna, da),
                   required_power(opt.target, s4, cfg.rectenna, da), ca2, ca4});
    }
    return t;
}

SweepTable cmd_simulate(const Config &cfg, const SimulateOptions &opt)
{
    validate(cfg, false);
    if (opt.samples < 1)
        throw InputError("--samples must be at least 1");
    if (opt.cdf_points < 2)
        throw InputError("CDF grid needs at least two points");
    const auto alphas = alphas_or_default(opt.alphas, cfg);
    const double h_C = cfg.ca.h_C;
    const Deployment ca = cfg.ca;
    const Deployment da = safe_da_deployment(cfg.r, h_C);
    const SimOptions sim{opt.threads, false};

    std::vector<std::string> cols{"efficiency"};
    for (double a : alphas) {
        cols.push_back("cdf_ca_" + alpha_tag(a));
        cols.push_back("cdf_da_" + alpha_tag(a));
    }
    SweepTable t(cols);
    stamp(t, cfg, "simulate");
    t.set_meta("alpha", join(alphas));
    t.set_meta("samples", std::to_string(opt.samples));
    t.set_meta("seed", std::to_string(opt.seed));
    t.set_meta("h_D", std::get<DaDeployment>(da).h_D);

    std::vector<std::vector<CdfPoint>> cdfs;
    for (double a : alphas) {
        Scenario s = cfg.scenario;
        s.alpha = a;
        const std::string tag = alpha_tag(a);
        for (const auto &[name, dep] : {std::pair{"ca", ca}, std::pair{"da", da}}) {
            const auto res = simulate_avg_power(s, cfg.rectenna, dep, opt.samples, opt.seed, sim);
            const double closed = power_report(s, cfg.rectenna, dep).avg_power;
            const std::string key = std::string("validation.") + tag + "." + name;
            t.set_meta(key + ".sim_mean", res.mean);
            t.set_meta(key + ".std_error", res.std_error);
            t.set_meta(key + ".closed_form", closed);
            t.set_meta(key + ".z", res.std_error > 0.0 ? (res.mean - closed) / res.std_error : 0.0);
            t.set_meta(key + ".rel_error", (res.mean - closed) / closed);

            cdfs.push_back(efficiency_cdf(s, cfg.rectenna, dep, opt.samples, opt.seed, sim));
            t.set_meta(std::string("cdf.") + tag + "." + name + ".p_gt_0.005", exceedance(cdfs.back(), 0.005));
            t.set_meta(std::string("cdf.") + tag + "." + name + ".median", quantile(cdfs.back(), 0.5));
        }
    }

    // Common logarithmic efficiency grid spanning every sample.
    double lo = cdfs.front().front().efficiency;
    double hi = cdfs.front().back().efficiency;
    for (const auto &c : cdfs) {
        lo = std::min(lo, c.front().efficiency);
        hi = std::max(hi, c.back().efficiency);
    }
    if (hi <= lo)
        hi = lo * (1.0 + 1e-9) + 1e-300;
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < opt.cdf_points; ++i) {
        const double e = i == opt.cdf_points - 1 ? hi : std::exp(llo + (lhi - llo) * i / (opt.cdf_points - 1));
        std::vector<double> row{e};
        for (const auto &c : cdfs)
            row.push_back(1.0 - exceedance(c, e));
        t.add_row(std::move(row));
    }
    return t;
}

ComplianceReport cmd_comply(const Config &cfg)
{
    validate(cfg, false);
    const Scenario &s = cfg.scenario;
    ComplianceReport rep;
    rep.P = s.P;
    rep.h_C = cfg.ca.h_C;
    rep.r = cfg.r;
    rep.h_D = da_height_asymptotic(cfg.r, cfg.ca.h_C);
    rep.psi0 = s.psi0;
    rep.ca_density = s.P / (4.0 * pi * rep.h_C * rep.h_C);
    rep.da_density_asymptotic = hotspot_asymptotic(s.P, cfg.r, rep.h_C).density;
    const auto finite = max_density_finite(s.P, dae_positions(cfg.r, s.N, rep.h_D), s.R);
    rep.da_density_finite = finite.density;
    rep.da_hotspot_radius = finite.nu_star;
    rep.max_density = std::max({rep.ca_density, rep.da_density_asymptotic, rep.da_density_finite});
    rep.ca_power_limit = ca_power_limit(rep.h_C, s.psi0);
    rep.min_compliant_h_C = std::sqrt(s.P / (4.0 * pi * s.psi0));
    rep.compliant = s.P < rep.ca_power_limit;
    rep.finite_ring_within_limit = rep.da_density_finite < s.psi0;
    return rep;
}

std::string format_report(const ComplianceReport &rep, const Config &cfg)
{
    std::string out;
    auto line = [&](std::string_view k, const std::string &v) { out += std::string(k) + "=" + v + "\n"; };
    line("version", std::string(version_string()));
    line("P", format_number(rep.P));
    line("N", std::to_string(cfg.scenario.N));
    line("h_C", format_number(rep.h_C));
    line("r", format_number(rep.r));
    line("h_D", format_number(rep.h_D));
    line("psi0", format_number(rep.psi0));
    line("ca_density", format_number(rep.ca_density));
    line("da_density_asymptotic", format_number(rep.da_density_asymptotic));
    line("da_density_finite", format_number(rep.da_density_finite));
    line("da_hotspot_radius", format_number(rep.da_hotspot_radius));
    line("max_density", format_number(rep.max_density));
    line("ca_power_limit", format_number(rep.ca_power_limit));
    line("min_compliant_h_C", format_number(rep.min_compliant_h_C));
    line("da_finite_within_limit", rep.finite_ring_within_limit ? "yes" : "no");
    line("verdict", rep.compliant ? "PASS" : "FAIL");
    return out;
}

} // namespace dapb
