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

#include "dapb/montecarlo.hpp"

#include "dapb/errors.hpp"
#include "dapb/harvest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace dapb
{

using std::numbers::pi;

namespace
{

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kBlock = 4096;

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Welford accumulator; blocks are merged in index order (Chan et al.) so
// the result is the same for any thread count.
struct Moments
{
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0.0)
            return;
        if (n == 0.0) {
            *this = o;
            return;
        }
        const double total = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / total;
        m2 += o.m2 + d * d * n * o.n / total;
        n = total;
    }
};

unsigned worker_count(unsigned requested, std::uint64_t blocks)
{
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(blocks, 1)));
}

// Runs fn(block_begin, block_end, block_index) over fixed-size blocks of
// [0, count) on a small thread pool.
template <class Fn>
void for_blocks(std::uint64_t count, unsigned threads, Fn &&fn)
{
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    const unsigned workers = worker_count(threads, blocks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t b = next++; b < blocks; b = next++)
            fn(b * kBlock, std::min(count, (b + 1) * kBlock), b);
    };
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i)
        pool.emplace_back(work);
    for (auto &t : pool)
        t.join();
}

template <class SampleFn>
SimResult run_moments(std::uint64_t samples, std::uint64_t seed, unsigned threads, SampleFn &&sample)
{
    if (samples < 1)
        throw InputError("simulation needs at least one sample");
    const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
    std::vector<Moments> partial(blocks);
    for_blocks(samples, threads, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t b) {
        Moments m;
        for (std::uint64_t k = begin; k < end; ++k)
            m.add(sample(k));
        partial[b] = m;
    });
    Moments total;
    for (const auto &m : partial)
        total.merge(m);

    SimResult out;
    out.samples = samples;
    out.seed = seed;
    out.mean = total.mean;
    out.std_error = samples > 1 ? std::sqrt(total.m2 / (total.n - 1.0)) / std::sqrt(total.n) : 0.0;
    return out;
}

double path_gain(double d2, double alpha)
{
    if (alpha == 2.0)
        return 1.0 / d2;
    if (alpha == 4.0)
        return 1.0 / (d2 * d2);
    return std::pow(d2, -0.5 * alpha);
}

double diode_prefactor(const Rectenna &rect)
{
    const double rv = rect.rho * rect.V_T;
    return rect.xi * rect.I_s * rect.c / (2.0 * rv * rv);
}

void check_in_cell(const Scenario &s, Point2 p)
{
    if (p.x * p.x + p.y * p.y > s.R * s.R * (1.0 + 1e-12))
        throw OutOfCellError("point outside the cell");
}

// Antenna positions for the deployment; CA puts all N at the centre.
DaeLayout layout_of(const Scenario &s, const Deployment &dep)
{
    if (const auto *ca = std::get_if<CaDeployment>(&dep))
        return dae_positions(0.0, s.N, ca->h_C);
    const auto &da = std::get<DaDeployment>(dep);
    return dae_positions(da.r, s.N, da.h_D);
}

DcComponents components_for(const DaeLayout &layout, double alpha, double P_i, Point2 point, const ChannelDraw &draw)
{
    DcComponents out;
    double cos_sum = 0.0, sin_sum = 0.0;
    for (std::size_t i = 0; i < layout.positions.size(); ++i) {
        const auto &o = layout.positions[i];
        const double dx = point.x - o.x;
        const double dy = point.y - o.y;
        const double d2 = dx * dx + dy * dy + o.z * o.z;
        const double path = path_gain(d2, alpha);
        const double power = P_i * draw.gains[i] * path;
        const double amp = std::sqrt(power);
        const double c = std::cos(draw.phases[i]);
        const double sn = std::sin(draw.phases[i]);
        // cos(phi_i - phi_j) = cos phi_i cos phi_j + sin phi_i sin phi_j,
        // summed against all earlier j and doubled for the (j, i) pairs.
        out.cross += 2.0 * amp * (c * cos_sum + sn * sin_sum);
        out.direct += power;
        cos_sum += amp * c;
        sin_sum += amp * sn;
    }
    return out;
}

void force_coherent(ChannelDraw &draw)
{
    std::fill(draw.phases.begin(), draw.phases.end(), draw.phases.front());
}

} // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : state_(mix64(seed + kGamma) ^ mix64((stream + 1) * kGamma))
{
}

std::uint64_t StreamRng::next() noexcept
{
    state_ += kGamma;
    return mix64(state_);
}

double StreamRng::uniform() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Point2 sample_user(StreamRng &rng, double R)
{
    const double rad = R * std::sqrt(rng.uniform());
    const double ang = 2.0 * pi * rng.uniform();
    return {rad * std::cos(ang), rad * std::sin(ang)};
}

ChannelDraw draw_channel(StreamRng &rng, int N, double sigma_h2)
{
    ChannelDraw d;
    d.phases.resize(static_cast<std::size_t>(N));
    d.gains.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        // 1 - u lies in (0, 1], so phases land in (-pi, pi] and the log is finite.
        d.phases[static_cast<std::size_t>(i)] = pi * (1.0 - 2.0 * rng.uniform());
        d.gains[static_cast<std::size_t>(i)] = -sigma_h2 * std::log(1.0 - rng.uniform());
    }
    return d;
}

DcComponents dc_components(const Scenario &s, const Deployment &dep, Point2 point, const ChannelDraw &draw)
{
    check_in_cell(s, point);
    if (draw.phases.size() != static_cast<std::size_t>(s.N) || draw.gains.size() != static_cast<std::size_t>(s.N))
        throw InputError("channel draw size does not match antenna count");
    return components_for(layout_of(s, dep), s.alpha, s.P / s.N, point, draw);
}

double instantaneous_dc(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point,
                        const ChannelDraw &draw)
{
    const auto c = dc_components(s, dep, point, draw);
    return diode_prefactor(rect) * (c.direct + c.cross);
}

SimResult simulate_avg_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, std::uint64_t samples,
                             std::uint64_t seed, const SimOptions &opt)
{
    const auto layout = layout_of(s, dep);
    const double scale = diode_prefactor(rect);
    const double P_i = s.P / s.N;
    return run_moments(samples, seed, opt.threads, [&](std::uint64_t k) {
        StreamRng rng(seed, k);
        const Point2 user = sample_user(rng, s.R);
        auto draw = draw_channel(rng, s.N, rect.sigma_h2);
        if (opt.coherent_phases)
            force_coherent(draw);
        const auto c = components_for(layout, s.alpha, P_i, user, draw);
        return scale * (c.direct + c.cross);
    });
}

SimResult simulate_point_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point,
                               std::uint64_t samples, std::uint64_t seed, const SimOptions &opt)
{
    check_in_cell(s, point);
    const auto layout = layout_of(s, dep);
    const double scale = diode_prefactor(rect);
    const double P_i = s.P / s.N;
    return run_moments(samples, seed, opt.threads, [&](std::uint64_t k) {
        StreamRng rng(seed, k);
        auto draw = draw_channel(rng, s.N, rect.sigma_h2);
        if (opt.coherent_phases)
            force_coherent(draw);
        const auto c = components_for(layout, s.alpha, P_i, point, draw);
        return scale * (c.direct + c.cross);
    });
}

SimResult simulate_ring_power(const Scenario &s, const Rectenna &rect, const Deployment &dep, double r_ms,
                              std::uint64_t samples, std::uint64_t seed, const SimOptions &opt)
{
    if (!(r_ms >= 0.0 && r_ms <= s.R))
        throw OutOfCellError("ring radius of the users lies outside the cell");
    const auto layout = layout_of(s, dep);
    const double scale = diode_prefactor(rect);
    const double P_i = s.P / s.N;
    return run_moments(samples, seed, opt.threads, [&](std::uint64_t k) {
        StreamRng rng(seed, k);
        const double ang = 2.0 * pi * rng.uniform();
        auto draw = draw_channel(rng, s.N, rect.sigma_h2);
        if (opt.coherent_phases)
            force_coherent(draw);
        const auto c = components_for(layout, s.alpha, P_i, {r_ms * std::cos(ang), r_ms * std::sin(ang)}, draw);
        return scale * (c.direct + c.cross);
    });
}

SimResult cross_term_bias(const Scenario &s, const Rectenna &rect, const Deployment &dep, std::uint64_t samples,
                          std::uint64_t seed, const SimOptions &opt)
{
    const auto layout = layout_of(s, dep);
    const double scale = diode_prefactor(rect);
    const double P_i = s.P / s.N;
    return run_moments(samples, seed, opt.threads, [&](std::uint64_t k) {
        StreamRng rng(seed, k);
        const Point2 user = sample_user(rng, s.R);
        auto draw = draw_channel(rng, s.N, rect.sigma_h2);
        if (opt.coherent_phases)
            force_coherent(draw);
        return scale * components_for(layout, s.alpha, P_i, user, draw).cross;
    });
}

std::vector<CdfPoint> efficiency_cdf(const Scenario &s, const Rectenna &rect, const Deployment &dep,
                                     std::uint64_t user_samples, std::uint64_t seed, const SimOptions &opt)
{
    if (user_samples < 1)
        throw InputError("CDF needs at least one user sample");
    check_alpha(s.alpha);
    const auto layout = layout_of(s, dep);
    const double K0 = k0(rect);
    const double per = 1.0 / s.N;

    std::vector<double> eff(user_samples);
    for_blocks(user_samples, opt.threads, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t) {
        for (std::uint64_t k = begin; k < end; ++k) {
            StreamRng rng(seed, k);
            const Point2 u = sample_user(rng, s.R);
            double sum = 0.0;
            for (const auto &o : layout.positions) {
                const double dx = u.x - o.x;
                const double dy = u.y - o.y;
                const double d2 = dx * dx + dy * dy + o.z * o.z;
                sum += path_gain(d2, s.alpha);
            }
            eff[k] = K0 * per * sum;
        }
    });
    std::sort(eff.begin(), eff.end());

    std::vector<CdfPoint> cdf(user_samples);
    const double n = static_cast<double>(user_samples);
    for (std::uint64_t k = 0; k < user_samples; ++k)
        cdf[k] = {eff[k], static_cast<double>(k + 1) / n};
    return cdf;
}

double exceedance(const std::vector<CdfPoint> &cdf, double efficiency)
{
    if (cdf.empty())
        return 0.0;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), efficiency,
                               [](double v, const CdfPoint &p) { return v < p.efficiency; });
    const double below = it == cdf.begin() ? 0.0 : std::prev(it)->probability;
    return 1.0 - below;
}

double quantile(const std::vector<CdfPoint> &cdf, double q)
{
    if (cdf.empty())
        throw InputError("quantile of an empty CDF");
    auto it = std::lower_bound(cdf.begin(), cdf.end(), q,
                               [](const CdfPoint &p, double v) { return p.probability < v; });
    if (it == cdf.end())
        return cdf.back().efficiency;
    return it->efficiency;
}

} // namespace dapb
