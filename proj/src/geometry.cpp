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

#include "dapb/geometry.hpp"

#include "dapb/errors.hpp"
#include "dapb/numerics.hpp"

#include <cmath>
#include <numbers>

namespace dapb
{

using std::numbers::pi;

DaeLayout dae_positions(double r, int N, double h_D)
{
    DaeLayout layout;
    layout.positions.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        const double phi = 2.0 * pi * i / N;
        layout.positions.push_back({r * std::cos(phi), r * std::sin(phi), h_D});
    }
    return layout;
}

double density_finite(double P, const DaeLayout &layout, Point2 point)
{
    const double per_element = P / (4.0 * pi * static_cast<double>(layout.positions.size()));
    double sum = 0.0;
    for (const auto &o : layout.positions) {
        const double dx = point.x - o.x;
        const double dy = point.y - o.y;
        sum += 1.0 / (dx * dx + dy * dy + o.z * o.z);
    }
    return per_element * sum;
}

double density_asymptotic(double P, double r, double h_D, double nu)
{
    // (r^2 + nu^2 + h^2)^2 - 4 r^2 nu^2 written as ((r-nu)^2 + h^2)((r+nu)^2 + h^2)
    // to avoid cancellation near the hotspot.
    const double a = (r - nu) * (r - nu) + h_D * h_D;
    const double b = (r + nu) * (r + nu) + h_D * h_D;
    return P / (4.0 * pi) / std::sqrt(a * b);
}

double da_height_asymptotic(double r, double h_C)
{
    if (r * r <= 0.5 * h_C * h_C)
        return std::sqrt(h_C * h_C - r * r);
    return h_C * h_C / (2.0 * r);
}

DaDeployment safe_da_deployment(double r, double h_C)
{
    return {r, da_height_asymptotic(r, h_C)};
}

Hotspot hotspot_asymptotic(double P, double r, double h_C)
{
    Hotspot h;
    if (r * r > 0.5 * h_C * h_C) {
        const double t = h_C * h_C / (2.0 * r);
        h.nu_star = std::sqrt(std::max(0.0, r * r - t * t));
    }
    h.density = density_asymptotic(P, r, da_height_asymptotic(r, h_C), h.nu_star);
    return h;
}

Hotspot max_density_finite(double P, const DaeLayout &layout, double R)
{
    const auto n = layout.positions.size();
    if (n == 0)
        throw InputError("empty antenna layout");

    // Element 0 lies on the +x axis; rays at 0 and pi/N cover both the
    // element azimuth and the gap between neighbours.
    const double half_gap = n > 1 ? pi / static_cast<double>(n) : 0.0;
    const double ring = std::hypot(layout.positions[0].x, layout.positions[0].y);
    const double h = layout.positions[0].z;

    Hotspot best{0.0, -1.0};
    for (const double theta : {0.0, half_gap}) {
        const double c = std::cos(theta), s = std::sin(theta);
        auto along = [&](double nu) { return density_finite(P, layout, {nu * c, nu * s}); };

        auto found = numerics::scan_then_maximize(along, 0.0, R, 1001);
        // Second candidate seeded from the continuous-ring hotspot.
        const double t = ring * ring - h * h;
        if (t > 0.0) {
            const double seed = std::min(R, std::sqrt(t));
            const double w = 1e-3 * R;
            auto local = numerics::maximize(along, std::max(0.0, seed - w), std::min(R, seed + w));
            if (local.value > found.value)
                found = local;
        }
        if (found.value > best.density)
            best = {found.x, found.value};
    }
    return best;
}

double da_height_finite(const Scenario &s, double r, double h_C)
{
    const double target = s.P / (4.0 * pi * h_C * h_C);
    auto excess = [&](double h_D) {
        const auto layout = dae_positions(r, s.N, h_D);
        return max_density_finite(s.P, layout, s.R).density - target;
    };

    // Peak density is strictly decreasing in h_D.
    double lo = 1e-6 * h_C;
    double hi = 10.0 * h_C;
    const double f_lo = excess(lo);
    const double f_hi = excess(hi);
    if (f_hi == 0.0)
        return hi;
    if (!(f_lo > 0.0 && f_hi < 0.0))
        throw NonBracketingError("no DA height in (0, 10 h_C] matches the CA hotspot density");

    while (hi - lo > 1e-13 * h_C) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double f = excess(mid);
        if (f == 0.0)
            return mid;
        (f > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ca_power_limit(double h_C, double psi0)
{
    return 4.0 * pi * h_C * h_C * psi0;
}

} // namespace dapb
