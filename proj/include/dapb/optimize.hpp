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

#ifndef DAPB_OPTIMIZE_HPP
#define DAPB_OPTIMIZE_HPP

#include "dapb/polyroots.hpp"
#include "dapb/scenario.hpp"

#include <string_view>
#include <vector>

namespace dapb
{

enum class RadiusMethod
{
    closed_form_alpha2,
    sturm_alpha4,
    numeric_oracle,
};

std::string_view to_string(RadiusMethod m);

struct RadiusCandidate
{
    double radius = 0.0;
    double efficiency = 0.0;
};

struct RadiusSolution
{
    double r_star = 0.0;
    double efficiency_at_r_star = 0.0;
    RadiusMethod method = RadiusMethod::numeric_oracle;
    std::vector<RadiusCandidate> candidates;
};

/// Throws RegimeError unless sqrt(2 R d_ref) <= h_C < R.
void require_height_regime(const Scenario &s, double h_C);

/// DA efficiency at ring radius r with the height pinned by the safety law,
/// from the elementary alpha = 2 / alpha = 4 expressions.
double objective(const Scenario &s, const Rectenna &rect, int alpha, double h_C, double r);

/// r* = sqrt(R^2 + sqrt(R^4 + 4 h_C^4)) / 2.
RadiusSolution optimal_radius_alpha2(const Scenario &s, const Rectenna &rect, double h_C);

/// Degree-8 stationarity polynomial of the alpha = 4 objective in x = r^2.
Polynomial build_octic(double R, double h_C);

/// The same polynomial in u = x / R^2, divided through by R^16.
Polynomial build_octic_scaled(double R, double h_C);

// Bisection tolerance in the scaled variable u.
inline constexpr double kOcticEps = 1e-10;

/// Sturm count on (h_C^2/2, R^2], isolation and bisection of every root,
/// then the candidate radius with the best objective.
RadiusSolution optimal_radius_alpha4(const Scenario &s, const Rectenna &rect, double h_C, double eps = kOcticEps);

/// Derivative-free maximizer of the efficiency over (0, R]: 200-point scan
/// followed by Brent refinement. Any alpha in [2, 6].
RadiusSolution optimal_radius_numeric(const Scenario &s, const Rectenna &rect, double h_C, double alpha);

} // namespace dapb

#endif
