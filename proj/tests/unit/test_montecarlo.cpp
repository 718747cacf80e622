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

#include "dapb/errors.hpp"
#include "dapb/geometry.hpp"
#include "dapb/harvest.hpp"
#include "dapb/montecarlo.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dapb;
using std::numbers::pi;

namespace
{

// xi I_s c / (2 (rho V_T)^2) = K0 / sigma_h2
double prefactor(const Rectenna &rect) { return k0(rect) / rect.sigma_h2; }

Scenario scenario(double alpha, int N = 100)
{
    Scenario s;
    s.alpha = alpha;
    s.N = N;
    return s;
}

double closed_form(const Scenario &s, const Rectenna &rect, const Deployment &dep)
{
    return power_report(s, rect, dep).avg_power;
}

} // namespace

TEST_CASE("stream generator")
{
    StreamRng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
    bool differs_stream = false, differs_seed = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(x == b.uniform());
        differs_stream = differs_stream || x != c.uniform();
        differs_seed = differs_seed || x != d.uniform();
    }
    CHECK(differs_stream);
    CHECK(differs_seed);
}

TEST_CASE("uniform disc sampling")
{
    const double R = 30.0;
    const int n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    std::vector<int> bins(36, 0);
    for (int k = 0; k < n; ++k) {
        StreamRng rng(42, static_cast<std::uint64_t>(k));
        const auto p = sample_user(rng, R);
        const double q = p.x * p.x + p.y * p.y;
        CHECK(q <= R * R * (1 + 1e-15));
        sum += q;
        sum2 += q * q;
        const double ang = std::atan2(p.y, p.x) + pi;
        bins[std::min(35, static_cast<int>(ang / (2 * pi) * 36))]++;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
    CHECK(std::fabs(mean - R * R / 2.0) < 3.0 * se);

    double chi2 = 0.0;
    const double expect = n / 36.0;
    for (int b : bins)
        chi2 += (b - expect) * (b - expect) / expect;
    // Upper 1% point of chi-square with 35 degrees of freedom.
    CHECK(chi2 < 57.3420734338592);
}

TEST_CASE("channel draws")
{
    const double sigma = 2.5;
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (int k = 0; k < 20000; ++k) {
        StreamRng rng(7, static_cast<std::uint64_t>(k));
        const auto d = draw_channel(rng, 50, sigma);
        REQUIRE(d.phases.size() == 50);
        REQUIRE(d.gains.size() == 50);
        for (int i = 0; i < 50; ++i) {
            CHECK(d.phases[i] > -pi);
            CHECK(d.phases[i] <= pi);
            CHECK(d.gains[i] >= 0.0);
            sum += d.gains[i];
            sum2 += d.gains[i] * d.gains[i];
            ++n;
        }
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
    CHECK(std::fabs(mean - sigma) < 3.0 * se);
    // Exponential law: variance equals the squared mean.
    CHECK((sum2 / n - mean * mean) == doctest::Approx(sigma * sigma).epsilon(0.02));
}

TEST_CASE("single antenna has no cross terms")
{
    const Scenario s = scenario(2.0, 1);
    const Rectenna rect;
    const Deployment dep = CaDeployment{7.75};
    StreamRng rng(3, 0);
    const auto draw = draw_channel(rng, 1, rect.sigma_h2);
    const Point2 p{4.0, -2.0};
    const auto c = dc_components(s, dep, p, draw);
    CHECK(c.cross == 0.0);
    const double d2 = 16.0 + 4.0 + 7.75 * 7.75;
    CHECK(instantaneous_dc(s, rect, dep, p, draw) ==
          doctest::Approx(prefactor(rect) * s.P * draw.gains[0] / d2).epsilon(1e-14));
}

TEST_CASE("cross terms match the literal double sum")
{
    const Rectenna rect;
    for (double alpha : {2.0, 3.0, 4.0}) {
        const Scenario s = scenario(alpha, 12);
        const DaDeployment dep{9.0, 1.3};
        const auto layout = dae_positions(dep.r, s.N, dep.h_D);
        for (int k = 0; k < 50; ++k) {
            StreamRng rng(11, static_cast<std::uint64_t>(k));
            const auto p = sample_user(rng, s.R);
            const auto draw = draw_channel(rng, s.N, rect.sigma_h2);
            std::vector<double> amp;
            double direct = 0.0;
            for (int i = 0; i < s.N; ++i) {
                const auto &o = layout.positions[i];
                const double d2 = (p.x - o.x) * (p.x - o.x) + (p.y - o.y) * (p.y - o.y) + o.z * o.z;
                const double pw = s.P / s.N * draw.gains[i] / std::pow(d2, alpha / 2.0);
                amp.push_back(std::sqrt(pw));
                direct += pw;
            }
            const auto c = dc_components(s, dep, p, draw);
            const double cross = oracle::cross_double_sum(amp, draw.phases);
            CHECK(c.direct == doctest::Approx(direct).epsilon(1e-12));
            CHECK(c.cross == doctest::Approx(cross).epsilon(1e-9).scale(direct));
        }
    }
}

TEST_CASE("coherent phases maximise the cross terms")
{
    const Scenario s = scenario(2.0, 16);
    const Rectenna rect;
    ChannelDraw draw;
    draw.phases.assign(16, 0.7);
    draw.gains.assign(16, rect.sigma_h2);
    const auto c = dc_components(s, DaDeployment{10.0, 2.0}, {3.0, 1.0}, draw);
    CHECK(c.cross > 0.0);
    // With equal phases the bracket collapses to (sum of amplitudes)^2, the
    // largest value any phase assignment can give.
    StreamRng rng(5, 0);
    auto other = draw_channel(rng, 16, rect.sigma_h2);
    other.gains = draw.gains;
    CHECK(dc_components(s, DaDeployment{10.0, 2.0}, {3.0, 1.0}, other).cross < c.cross);
}

TEST_CASE("out of cell points are rejected")
{
    const Scenario s = scenario(2.0, 4);
    StreamRng rng(1, 0);
    const auto draw = draw_channel(rng, 4, 1.0);
    CHECK_THROWS_AS(instantaneous_dc(s, Rectenna{}, CaDeployment{7.75}, {31.0, 0.0}, draw), OutOfCellError);
    CHECK_THROWS_AS(dc_components(s, CaDeployment{7.75}, {1.0, 0.0}, draw_channel(rng, 3, 1.0)), InputError);
}

TEST_CASE("fixed-point expectation converges to the ergodic power")
{
    const Scenario s = scenario(2.0);
    const Rectenna rect;
    const Deployment dep = safe_da_deployment(20.0, 7.75);
    for (Point2 p : {Point2{20.0, 0.0}, Point2{5.0, 5.0}}) {
        const auto res = simulate_point_power(s, rect, dep, p, 1000000, 9);
        CHECK(std::fabs(res.mean - ergodic_power_at(s, rect, dep, p)) < 3.0 * res.std_error);
    }
}

TEST_CASE("cell averages at 10^6 samples")
{
    const Rectenna rect;
    {
        const auto s = scenario(2.0);
        const Deployment dep = CaDeployment{7.75};
        const auto res = simulate_avg_power(s, rect, dep, 1000000, 2024);
        const double cf = avg_power_ca(s, rect, 7.75);
        CHECK(std::fabs(res.mean - cf) < 3.0 * res.std_error);
        CHECK(std::fabs(res.mean / cf - 1.0) < 0.01);
    }
    {
        const auto s = scenario(4.0);
        const Deployment dep = DaDeployment{20.0, 1.50156};
        const auto res = simulate_avg_power(s, rect, dep, 1000000, 2025);
        const double cf = avg_power_da(s, rect, 20.0, 1.50156);
        CHECK(std::fabs(res.mean - cf) < 3.0 * res.std_error);
        CHECK(std::fabs(res.mean / cf - 1.0) < 0.01);
    }
}

TEST_CASE("results are a pure function of seed and parameters")
{
    const auto s = scenario(2.0, 20);
    const Rectenna rect;
    const Deployment dep = safe_da_deployment(20.0, 7.75);
    const auto a = simulate_avg_power(s, rect, dep, 30001, 77, {1, false});
    const auto b = simulate_avg_power(s, rect, dep, 30001, 77, {1, false});
    const auto c = simulate_avg_power(s, rect, dep, 30001, 77, {4, false});
    const auto d = simulate_avg_power(s, rect, dep, 30001, 78, {1, false});
    CHECK(a == b);
    CHECK(a == c);
    CHECK_FALSE(a == d);
    CHECK(a.samples == 30001);
    CHECK(a.seed == 77);

    const auto e1 = efficiency_cdf(s, rect, dep, 20000, 5, {1, false});
    const auto e3 = efficiency_cdf(s, rect, dep, 20000, 5, {3, false});
    REQUIRE(e1.size() == e3.size());
    for (std::size_t i = 0; i < e1.size(); ++i) {
        CHECK(e1[i].efficiency == e3[i].efficiency);
        CHECK(e1[i].probability == e3[i].probability);
    }
}

TEST_CASE("single sample result")
{
    const auto res = simulate_avg_power(scenario(2.0, 4), Rectenna{}, CaDeployment{7.75}, 1, 3);
    CHECK(res.samples == 1);
    CHECK(res.std_error == 0.0);
    CHECK(res.mean > 0.0);
    CHECK_THROWS_AS(simulate_avg_power(scenario(2.0, 4), Rectenna{}, CaDeployment{7.75}, 0, 3), InputError);
}

TEST_CASE("cross terms average out")
{
    const Rectenna rect;
    const auto s2 = scenario(2.0, 2);
    const Deployment dep = DaDeployment{10.0, 2.0};
    const auto bias = cross_term_bias(s2, rect, dep, 1000000, 13);
    CHECK(std::fabs(bias.mean) < 4.0 * bias.std_error);

    const auto s1 = scenario(2.0, 1);
    const auto none = cross_term_bias(s1, rect, dep, 10000, 13);
    CHECK(none.mean == 0.0);
    CHECK(none.std_error == 0.0);

    const auto coherent = cross_term_bias(s2, rect, dep, 10000, 13, {0, true});
    CHECK(coherent.mean > 0.0);
    CHECK(coherent.mean > 10.0 * coherent.std_error);
}

TEST_CASE("unbiased across 100 independent seeds")
{
    const Rectenna rect;
    for (double alpha : {2.0, 4.0}) {
        const auto s = scenario(alpha, 8);
        for (const Deployment &dep : {Deployment{CaDeployment{7.75}}, Deployment{safe_da_deployment(20.0, 7.75)}}) {
            const double cf = closed_form(s, rect, dep);
            int inside = 0;
            for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                const auto res = simulate_avg_power(s, rect, dep, 50000, seed * 7919);
                inside += std::fabs(res.mean - cf) < 3.0 * res.std_error;
            }
            CHECK(inside >= 99);
        }
    }
}

TEST_CASE("ring cell average does not depend on N")
{
    const Rectenna rect;
    const Deployment dep = DaDeployment{20.0, 1.5015625};
    for (double alpha : {2.0, 4.0}) {
        std::vector<SimResult> res;
        for (int N : {4, 16, 100})
            res.push_back(simulate_avg_power(scenario(alpha, N), rect, dep, 200000, 31 + N));
        const double cf = closed_form(scenario(alpha), rect, dep);
        for (std::size_t i = 0; i < res.size(); ++i) {
            CHECK(std::fabs(res[i].mean - cf) < 4.0 * res[i].std_error);
            for (std::size_t j = i + 1; j < res.size(); ++j) {
                const double se = std::hypot(res[i].std_error, res[j].std_error);
                CHECK(std::fabs(res[i].mean - res[j].mean) < 4.0 * se);
            }
        }
    }
}

TEST_CASE("ring-user simulation matches the radial profile")
{
    const Rectenna rect;
    const auto s = scenario(3.0, 100);
    const DaDeployment dep{20.0, 1.5015625};
    for (double rm : {5.0, 20.0, 27.0}) {
        const auto res = simulate_ring_power(s, rect, dep, rm, 200000, 5);
        CHECK(std::fabs(res.mean - radial_profile_da(s, rect, dep.r, dep.h_D, rm)) < 4.0 * res.std_error);
    }
    CHECK_THROWS_AS(simulate_ring_power(s, rect, dep, 31.0, 10, 5), OutOfCellError);
}

TEST_CASE("efficiency CDF shape")
{
    const Rectenna rect;
    const auto s = scenario(2.0);
    const auto ca = efficiency_cdf(s, rect, CaDeployment{7.75}, 1000000, 1);
    const auto da = efficiency_cdf(s, rect, safe_da_deployment(20.0, 7.75), 1000000, 1);
    for (const auto *cdf : {&ca, &da}) {
        for (std::size_t i = 1; i < cdf->size(); ++i) {
            CHECK((*cdf)[i].efficiency >= (*cdf)[i - 1].efficiency);
            CHECK((*cdf)[i].probability > (*cdf)[i - 1].probability);
        }
        CHECK(cdf->front().efficiency >= 0.0);
        CHECK(cdf->back().efficiency <= 1.0);
        CHECK(cdf->back().probability == 1.0);
    }
    CHECK(exceedance(da, 0.005) == doctest::Approx(0.2).epsilon(0.25));
    CHECK(std::fabs(exceedance(da, 0.005) - 0.2) <= 0.05);
    CHECK(std::fabs(exceedance(ca, 0.005) - 0.05) <= 0.05);
    for (double q : {0.1, 0.3, 0.5, 0.7, 0.9})
        CHECK(quantile(da, q) > quantile(ca, q));
    CHECK(quantile(ca, 0.9) - quantile(ca, 0.1) < quantile(da, 0.9) - quantile(da, 0.1));
}

TEST_CASE("one-sample CDF is a single step")
{
    const Rectenna rect;
    const auto s = scenario(2.0, 10);
    const Deployment dep = CaDeployment{7.75};
    const auto cdf = efficiency_cdf(s, rect, dep, 1, 4);
    REQUIRE(cdf.size() == 1);
    StreamRng rng(4, 0);
    const auto p = sample_user(rng, s.R);
    CHECK(cdf[0].efficiency == doctest::Approx(ergodic_power_at(s, rect, dep, p) / s.P).epsilon(1e-13));
    CHECK(cdf[0].probability == 1.0);
    CHECK(exceedance(cdf, cdf[0].efficiency) == 0.0);
    CHECK(exceedance(cdf, cdf[0].efficiency * 0.999) == 1.0);
    CHECK(quantile(cdf, 0.3) == cdf[0].efficiency);
}
