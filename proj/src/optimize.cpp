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

#include "dapb/optimize.hpp"

#include "dapb/errors.hpp"
#include "dapb/geometry.hpp"
#include "dapb/harvest.hpp"
#include "dapb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dapb
{

std::string_view to_string(RadiusMethod m)
{
    switch (m) {
    case RadiusMethod::closed_form_alpha2: return "closed_form_alpha2";
    case RadiusMethod::sturm_alpha4: return "sturm_alpha4";
    case RadiusMethod::numeric_oracle: return "numeric_oracle";
    }
    return "unknown";
}

void require_height_regime(const Scenario &s, double h_C)
{
    if (!validate_height_regime(s, h_C)) {
        std::ostringstream msg;
        msg << "h_C = " << h_C << " outside the legal regime [" << std::sqrt(2.0 * s.R * s.d_ref) << ", " << s.R
            << ")";
        throw RegimeError(msg.str());
    }
}

double objective(const Scenario &s, const Rectenna &rect, int alpha, double h_C, double r)
{
    require_height_regime(s, h_C);
    if (!(r >= 0.0 && r <= s.R))
        throw InputError("ring radius outside [0, R]");

    const double K0 = k0(rect);
    const double R2 = s.R * s.R;
    const double h = da_height_asymptotic(r, h_C);
    const double h2 = h * h;
    const double r2 = r * r;

    if (alpha == 2) {
        const double a = R2 + h2 - r2;
        return K0 / R2 * std::log((a + std::sqrt(a * a + 4.0 * r2 * h2)) / (2.0 * h2));
    }
    if (alpha == 4) {
        const double B = std::sqrt(R2 * R2 + R2 * (2.0 * h2 - 2.0 * r2) + (r2 + h2) * (r2 + h2));
        return K0 / (2.0 * R2) * (R2 - h2 - r2 + B) / (h2 * B);
    }
    throw UnsupportedAlphaError("objective is defined for alpha = 2 and alpha = 4");
}

RadiusSolution optimal_radius_alpha2(const Scenario &s, const Rectenna &rect, double h_C)
{
    require_height_regime(s, h_C);
    const double R2 = s.R * s.R;
    const double h4 = h_C * h_C * h_C * h_C;
    RadiusSolution sol;
    sol.method = RadiusMethod::closed_form_alpha2;
    sol.r_star = 0.5 * std::sqrt(R2 + std::sqrt(R2 * R2 + 4.0 * h4));
    sol.efficiency_at_r_star = objective(s, rect, 2, h_C, sol.r_star);
    sol.candidates.push_back({sol.r_star, sol.efficiency_at_r_star});
    return sol;
}

Polynomial build_octic(double R, double h_C)
{
    const double R2 = R * R, R4 = R2 * R2, R6 = R4 * R2;
    const double h4 = h_C * h_C * h_C * h_C, h8 = h4 * h4, h12 = h8 * h4, h16 = h8 * h8;
    return Polynomial({
        -h16,
        -10.0 * R2 * h12,
        -8.0 * h8 * (4.0 * R4 + h4),
        -32.0 * R2 * h4 * (R4 + 2.0 * h4),
        -192.0 * R4 * h4,
        224.0 * h4 * R2 - 256.0 * R6,
        128.0 * (6.0 * R4 + h4),
        -768.0 * R2,
        256.0,
    });
}

Polynomial build_octic_scaled(double R, double h_C)
{
    // p(R^2 u) / R^16 is the unit-cell octic with h_C replaced by h_C / R.
    return build_octic(1.0, h_C / R);
}

RadiusSolution optimal_radius_alpha4(const Scenario &s, const Rectenna &rect, double h_C, double eps)
{
    require_height_regime(s, h_C);
    const double eta = h_C / s.R;
    const auto p = build_octic_scaled(s.R, h_C);
    const double lo = 0.5 * eta * eta;
    const double hi = 1.0;

    const int n = count_roots(p, lo, hi);
    if (n < 1)
        throw NoRootError("octic has no root in (h_C^2/2, R^2]");

    // One root: the whole interval is its bracket. Otherwise isolate.
    const auto brackets = n == 1 ? std::vector<RootBracket>{{lo, hi}} : isolate_roots(p, lo, hi);
    const auto simple = square_free_part(p);

    RadiusSolution sol;
    sol.method = RadiusMethod::sturm_alpha4;
    for (const auto &b : brackets) {
        const double u = bisect_root(simple, b, eps);
        const double r = s.R * std::sqrt(u);
        sol.candidates.push_back({r, objective(s, rect, 4, h_C, r)});
    }

    // Ties within 1e-12 relative go to the smaller radius.
    const RadiusCandidate *best = &sol.candidates.front();
    for (const auto &c : sol.candidates) {
        const double gap = c.efficiency - best->efficiency;
        const double scale = std::max(std::fabs(c.efficiency), std::fabs(best->efficiency));
        if (gap > 1e-12 * scale || (std::fabs(gap) <= 1e-12 * scale && c.radius < best->radius))
            best = &c;
    }
    sol.r_star = best->radius;
    sol.efficiency_at_r_star = best->efficiency;
    return sol;
}

RadiusSolution optimal_radius_numeric(const Scenario &s, const Rectenna &rect, double h_C, double alpha)
{
    check_alpha(alpha);
    Scenario sa = s;
    sa.alpha = alpha;
    auto eta = [&](double r) { return efficiency(sa, rect, safe_da_deployment(r, h_C)); };

    constexpr int scan = 200;
    const double step = s.R / scan;
    int best = 1;
    double best_value = -1.0;
    RadiusSolution sol;
    sol.method = RadiusMethod::numeric_oracle;
    for (int i = 1; i <= scan; ++i) {
        const double r = i == scan ? s.R : i * step;
        const double v = eta(r);
        sol.candidates.push_back({r, v});
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double lo = (best - 1) * step;
    const double hi = std::min(s.R, (best + 1) * step);
    auto refined = numerics::maximize(eta, std::max(lo, 1e-12 * s.R), hi);
    if (refined.value >= best_value) {
        sol.r_star = refined.x;
        sol.efficiency_at_r_star = refined.value;
    } else {
        sol.r_star = best == scan ? s.R : best * step;
        sol.efficiency_at_r_star = best_value;
    }
    return sol;
}

} // namespace dapb
