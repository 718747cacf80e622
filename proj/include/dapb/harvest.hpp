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

#ifndef DAPB_HARVEST_HPP
#define DAPB_HARVEST_HPP

#include "dapb/geometry.hpp"
#include "dapb/scenario.hpp"

namespace dapb
{

// Path-loss exponents accepted by the power and efficiency functions.
inline constexpr double kMinAlpha = 2.0;
inline constexpr double kMaxAlpha = 6.0;

// |alpha - 2| below this uses the logarithmic alpha = 2 forms.
inline constexpr double kAlphaTwoBand = 1e-9;

void check_alpha(double alpha);

struct PowerReport
{
    double avg_power = 0.0;   // [W]
    double efficiency = 0.0;  // avg_power / P
    Deployment deployment;
    double alpha = 2.0;
};

/// Ergodic harvested DC power at a ground point (fading and phases
/// averaged out). Throws OutOfCellError for points outside the cell.
double ergodic_power_at(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point);

/// Cell-averaged harvested power for co-located antennas at height h_C.
double avg_power_ca(const Scenario &s, const Rectenna &rect, double h_C);

/// Q = int_0^{2pi} int_0^R rho / d_1^alpha drho dtheta, closed form.
/// Only alpha = 2 and alpha = 4 have one; anything else throws
/// UnsupportedAlphaError.
double q_integral_closed(double alpha, double R, double r, double h_D);

/// The alpha = 2 value as a difference of inverse hyperbolic sines. Needs r > 0.
double q_integral_arcsinh(double R, double r, double h_D);

/// Q by adaptive quadrature (relative accuracy ~1e-10). For alpha = 2 the
/// angular integral is done analytically, otherwise both are numeric.
double q_integral_numeric(double alpha, double R, double r, double h_D);

/// Closed form where one exists, quadrature otherwise.
double q_integral(double alpha, double R, double r, double h_D);

/// Cell-averaged harvested power for a ring deployment. Independent of N.
double avg_power_da(const Scenario &s, const Rectenna &rect, double r, double h_D);

/// Ergodic power at distance r_ms from the centre for an infinitely dense
/// ring, i.e. the circular average of K0 P d^-alpha. Elementary for
/// alpha = 2 and 4, adaptive quadrature otherwise.
double radial_profile_da(const Scenario &s, const Rectenna &rect, double r, double h_D, double r_ms);

/// Same quantity written through the Legendre function:
/// K0 P D^{-alpha/4} P_{alpha/2-1}(chi).
double radial_profile_da_legendre(const Scenario &s, const Rectenna &rect, double r, double h_D, double r_ms);

/// Legendre function of the first kind P_nu(x) for x >= 1 from Laplace's
/// integral (1/pi) int_0^pi (x + sqrt(x^2-1) cos t)^nu dt.
double legendre_p(double nu, double x);

/// Average WPT efficiency avg_power / P; independent of P.
double efficiency(const Scenario &s, const Rectenna &rect, const Deployment &dep);

/// Transmit power needed for the cell-average harvested power to reach target.
double required_power(double target, const Scenario &s, const Rectenna &rect, const Deployment &dep);

PowerReport power_report(const Scenario &s, const Rectenna &rect, const Deployment &dep);

} // namespace dapb

#endif
