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

#ifndef DAPB_GEOMETRY_HPP
#define DAPB_GEOMETRY_HPP

#include "dapb/scenario.hpp"

#include <vector>

namespace dapb
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Uniform circular layout: element i (0-based) sits at angle 2 pi i / N.
struct DaeLayout
{
    std::vector<Point3> positions;
};

struct Hotspot
{
    double nu_star = 0.0;   // ground radius of peak density [m]
    double density = 0.0;   // [W/m^2]
};

DaeLayout dae_positions(double r, int N, double h_D);

/// Ground-level radiation density of an equal-power layout with total
/// power P, each element an isotropic radiator: sum_i (P/(4 pi N))/|p-O_i|^2.
double density_finite(double P, const DaeLayout &layout, Point2 point);

/// Limit of density_finite as N -> infinity at ground radius nu.
double density_asymptotic(double P, double r, double h_D, double nu);

/// Hotspot of the continuous ring whose height follows the safety law for
/// reference height h_C.
Hotspot hotspot_asymptotic(double P, double r, double h_C);

/// Ring height that pins the continuous-ring hotspot density to the CA
/// centre density P/(4 pi h_C^2). Continuous and non-increasing in r.
double da_height_asymptotic(double r, double h_C);

/// DA deployment at ring radius r with the asymptotic safety height.
DaDeployment safe_da_deployment(double r, double h_C);

/// Peak ground density of a finite layout over ground radii [0, R].
/// Searches the ray through element 0 and the ray halfway to element 1.
Hotspot max_density_finite(double P, const DaeLayout &layout, double R);

/// Finite-N ring height whose peak density matches P/(4 pi h_C^2).
/// Throws NonBracketingError when no height in (0, 10 h_C] works.
double da_height_finite(const Scenario &s, double r, double h_C);

/// Supremum of compliant CA transmit power: 4 pi h_C^2 psi0.
double ca_power_limit(double h_C, double psi0);

} // namespace dapb

#endif
