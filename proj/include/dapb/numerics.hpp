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

#ifndef DAPB_NUMERICS_HPP
#define DAPB_NUMERICS_HPP

#include "dapb/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace dapb::numerics
{

struct QuadResult
{
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;  // integral of |f|, the scale the tolerance is relative to
};

struct QuadOptions
{
    double rel_tol = 1e-10;
    double abs_tol = 1e-30;
    unsigned max_depth = 30;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b]. Throws
/// QuadratureError with the best estimate when the error estimate still
/// exceeds max(abs_tol, rel_tol * L1) at the depth limit.
template <class F>
QuadResult integrate(const F &f, double a, double b, const QuadOptions &opt = {})
{
    if (a == b)
        return {};
    QuadResult res;
    res.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, opt.max_depth, opt.rel_tol,
                                                                              &res.error, &res.l1);
    if (!(res.error <= std::max(opt.abs_tol, opt.rel_tol * res.l1)))
        throw QuadratureError("quadrature tolerance not met", res.value, res.error);
    return res;
}

struct Extremum
{
    double x = 0.0;
    double value = 0.0;
};

/// Brent's method for the maximum of a unimodal f on [a, b]. The abscissa
/// is resolved to about sqrt(eps) relative, the limit for a smooth peak.
template <class F>
Extremum maximize(const F &f, double a, double b)
{
    std::uintmax_t iterations = 500;
    const auto [x, neg] = boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, a, b,
                                                                std::numeric_limits<double>::digits, iterations);
    return {x, -neg};
}

/// Dense scan of [a, b] with `points` samples followed by Brent
/// refinement around the best sample.
template <class F>
Extremum scan_then_maximize(const F &f, double a, double b, int points)
{
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    const double step = (b - a) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double x = i + 1 == points ? b : a + i * step;
        const double v = f(x);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double lo = std::max(a, a + (best - 1) * step);
    const double hi = std::min(b, a + (best + 1) * step);
    auto refined = maximize(f, lo, hi);
    const double best_x = best + 1 == points ? b : a + best * step;
    if (best_value > refined.value)
        return {best_x, best_value};
    return refined;
}

} // namespace dapb::numerics

#endif
