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

#ifndef DAPB_MONTECARLO_HPP
#define DAPB_MONTECARLO_HPP

#include "dapb/geometry.hpp"
#include "dapb/scenario.hpp"

#include <cstdint>
#include <vector>

namespace dapb
{

/// SplitMix64 stream keyed by (seed, stream index). Every Monte Carlo
/// sample draws from its own stream, so results do not depend on how
/// samples are distributed over threads.
class StreamRng
{
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;

private:
    std::uint64_t state_;
};

struct ChannelDraw
{
    std::vector<double> phases;  // composite phase per antenna, uniform on (-pi, pi]
    std::vector<double> gains;   // |h_i|^2, exponential with mean sigma_h2
};

struct SimResult
{
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    bool operator==(const SimResult &) const = default;
};

struct SimOptions
{
    unsigned threads = 0;          // 0: hardware concurrency
    bool coherent_phases = false;  // diagnostic: every antenna gets antenna 0's phase
};

/// Uniform point on the disc of radius R.
Point2 sample_user(StreamRng &rng, double R);

ChannelDraw draw_channel(StreamRng &rng, int N, double sigma_h2);

struct DcComponents
{
    double direct = 0.0;  // sum_i P_i |h_i|^2 / d_i^alpha
    double cross = 0.0;   // sum_{i != j} sqrt(...) cos(phi_i - phi_j)
};

/// Bracketed terms of the low-pass-filtered diode current (before the
/// xi I_s c / (2 (rho V_T)^2) prefactor).
DcComponents dc_components(const Scenario &s, const Deployment &dep, Point2 point, const ChannelDraw &draw);

/// Instantaneous harvested DC power for one block: quadratic diode
/// term with all cross products. Throws OutOfCellError.
double instantaneous_dc(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point,
                        const ChannelDraw &draw);

/// Mean of instantaneous_dc over independent (user, channel) draws.
SimResult simulate_avg_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, std::uint64_t samples,
                             std::uint64_t seed, const SimOptions &opt = {});

/// Mean of instantaneous_dc at a fixed user position over channel draws.
SimResult simulate_point_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point,
                               std::uint64_t samples, std::uint64_t seed, const SimOptions &opt = {});

/// Mean of instantaneous_dc for users uniform on the circle of radius
/// r_ms (random azimuth per sample) over channel draws.
SimResult simulate_ring_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, double r_ms,
                              std::uint64_t samples, std::uint64_t seed, const SimOptions &opt = {});

/// Empirical mean of the cross-term contribution alone (scaled like
/// instantaneous_dc). Zero for N = 1.
SimResult cross_term_bias(const Scenario &s, const Rectenna &rect, const Deployment &dep, std::uint64_t samples,
                          std::uint64_t seed, const SimOptions &opt = {});

struct CdfPoint
{
    double efficiency = 0.0;
    double probability = 0.0;
};

/// Empirical CDF of the per-user ergodic efficiency over uniformly placed
/// users, sorted by efficiency.
std::vector<CdfPoint> efficiency_cdf(const Scenario &s, const Rectenna &rect, const Deployment &dep,
                                     std::uint64_t user_samples, std::uint64_t seed, const SimOptions &opt = {});

/// Fraction of CDF mass strictly above the given efficiency.
double exceedance(const std::vector<CdfPoint> &cdf, double efficiency);

/// Efficiency at cumulative probability q (lower empirical quantile).
double quantile(const std::vector<CdfPoint> &cdf, double q);

} // namespace dapb

#endif
