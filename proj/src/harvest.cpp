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

#include "dapb/harvest.hpp"

#include "dapb/errors.hpp"
#include "dapb/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dapb
{

using std::numbers::pi;

namespace
{

bool is_alpha_two(double alpha) { return std::fabs(alpha - 2.0) < kAlphaTwoBand; }

// d^-alpha from d^2.
double inv_pow(double d2, double alpha)
{
    if (alpha == 2.0)
        return 1.0 / d2;
    if (alpha == 4.0)
        return 1.0 / (d2 * d2);
    return std::pow(d2, -0.5 * alpha);
}

// int_0^{2pi} int_0^R rho (rho^2 + h^2)^{-alpha/2}, the r = 0 value of Q.
double q_centred(double alpha, double R, double h)
{
    const double h2 = h * h;
    if (is_alpha_two(alpha))
        return pi * std::log1p(R * R / h2);
    // 2 pi [h^-(a-2) - (R^2+h^2)^{-(a-2)/2}] / (a-2)
    //   = 2 pi h^-(a-2) [1 - (1 + R^2/h^2)^{-(a-2)/2}] / (a-2),
    // the bracket via expm1/log1p so alpha near 2 keeps full accuracy.
    const double half_eps = 0.5 * (alpha - 2.0);
    const double bracket = -std::expm1(-half_eps * std::log1p(R * R / h2));
    return pi * std::pow(h2, -half_eps) * bracket / half_eps;
}

// a + sqrt(a^2 + c2) without cancellation for negative a.
double add_root(double a, double c2)
{
    const double root = std::sqrt(a * a + c2);
    return a >= 0.0 ? a + root : c2 / (root - a);
}

} // namespace

void check_alpha(double alpha)
{
    if (!(alpha >= kMinAlpha && alpha <= kMaxAlpha))
        throw InputError("path-loss exponent " + std::to_string(alpha) + " outside [2, 6]");
}

double ergodic_power_at(const Scenario &s, const Rectenna &rect, const Deployment &dep, Point2 point)
{
    check_alpha(s.alpha);
    const double rho2 = point.x * point.x + point.y * point.y;
    if (rho2 > s.R * s.R * (1.0 + 1e-12))
        throw OutOfCellError("point outside the cell");

    const double K0 = k0(rect);
    if (const auto *ca = std::get_if<CaDeployment>(&dep))
        return K0 * s.P * inv_pow(rho2 + ca->h_C * ca->h_C, s.alpha);

    const auto &da = std::get<DaDeployment>(dep);
    const auto layout = dae_positions(da.r, s.N, da.h_D);
    double sum = 0.0;
    for (const auto &o : layout.positions) {
        const double dx = point.x - o.x;
        const double dy = point.y - o.y;
        sum += inv_pow(dx * dx + dy * dy + o.z * o.z, s.alpha);
    }
    return K0 * s.P / s.N * sum;
}

double avg_power_ca(const Scenario &s, const Rectenna &rect, double h_C)
{
    check_alpha(s.alpha);
    return k0(rect) * s.P / (pi * s.R * s.R) * q_centred(s.alpha, s.R, h_C);
}

double q_integral_closed(double alpha, double R, double r, double h_D)
{
    const double h2 = h_D * h_D;
    if (alpha == 2.0) {
        const double a = R * R + h2 - r * r;
        return pi * std::log(add_root(a, 4.0 * r * r * h2) / (2.0 * h2));
    }
    if (alpha == 4.0) {
        const double c = R * R - h2 - r * r;
        const double four_r2h2 = 4.0 * R * R * h2;
        const double B = std::sqrt(c * c + four_r2h2);
        return pi * add_root(c, four_r2h2) / (2.0 * h2 * B);
    }
    throw UnsupportedAlphaError("closed-form Q exists only for alpha = 2 and alpha = 4");
}

double q_integral_arcsinh(double R, double r, double h_D)
{
    if (!(r > 0.0))
        throw InputError("arcsinh form of Q needs r > 0");
    const double h2 = h_D * h_D;
    const double den = 2.0 * r * h_D;
    return pi * (std::asinh((R * R + h2 - r * r) / den) - std::asinh((h2 - r * r) / den));
}

double q_integral_numeric(double alpha, double R, double r, double h_D)
{
    check_alpha(alpha);
    const double h2 = h_D * h_D;
    numerics::QuadOptions outer;
    outer.rel_tol = 1e-11;

    // Split the radial range at the ring, where the integrand peaks.
    auto radial = [&](auto &&g) {
        if (r > 0.0 && r < R)
            return numerics::integrate(g, 0.0, r, outer).value + numerics::integrate(g, r, R, outer).value;
        return numerics::integrate(g, 0.0, R, outer).value;
    };

    if (alpha == 2.0) {
        // Angular integral done analytically:
        // int_0^{2pi} drho / (rho^2 + r^2 + h^2 - 2 rho r cos t) = 2 pi / sqrt(((rho-r)^2+h^2)((rho+r)^2+h^2)).
        auto g = [&](double rho) {
            const double a = (rho - r) * (rho - r) + h2;
            const double b = (rho + r) * (rho + r) + h2;
            return 2.0 * pi * rho / std::sqrt(a * b);
        };
        return radial(g);
    }

    numerics::QuadOptions inner;
    inner.rel_tol = 1e-12;
    auto g = [&](double rho) {
        const double base = (rho - r) * (rho - r) + h2;
        auto f = [&](double t) {
            const double s = std::sin(0.5 * t);
            return std::pow(base + 4.0 * rho * r * s * s, -0.5 * alpha);
        };
        // Symmetric in t -> 2 pi - t.
        return 2.0 * rho * numerics::integrate(f, 0.0, pi, inner).value;
    };
    return radial(g);
}

double q_integral(double alpha, double R, double r, double h_D)
{
    if (is_alpha_two(alpha))
        return q_integral_closed(2.0, R, r, h_D);
    if (alpha == 4.0)
        return q_integral_closed(alpha, R, r, h_D);
    if (r == 0.0)
        return q_centred(alpha, R, h_D);
    return q_integral_numeric(alpha, R, r, h_D);
}

double avg_power_da(const Scenario &s, const Rectenna &rect, double r, double h_D)
{
    check_alpha(s.alpha);
    return k0(rect) * s.P / (pi * s.R * s.R) * q_integral(s.alpha, s.R, r, h_D);
}

double radial_profile_da(const Scenario &s, const Rectenna &rect, double r, double h_D, double r_ms)
{
    check_alpha(s.alpha);
    const double h2 = h_D * h_D;
    const double near = (r_ms - r) * (r_ms - r) + h2;
    const double far = (r_ms + r) * (r_ms + r) + h2;
    const double D = near * far;
    const double scale = k0(rect) * s.P;

    if (s.alpha == 2.0)
        return scale / std::sqrt(D);
    if (s.alpha == 4.0)
        return scale * (r_ms * r_ms + r * r + h2) / (D * std::sqrt(D));

    numerics::QuadOptions opt;
    opt.rel_tol = 1e-10;
    auto f = [&](double t) {
        const double sn = std::sin(0.5 * t);
        return std::pow(near + 4.0 * r * r_ms * sn * sn, -0.5 * s.alpha);
    };
    return scale / pi * numerics::integrate(f, 0.0, pi, opt).value;
}

double legendre_p(double nu, double x)
{
    if (!(x >= 1.0))
        throw InputError("legendre_p is implemented for x >= 1");
    const double root = std::sqrt((x - 1.0) * (x + 1.0));
    numerics::QuadOptions opt;
    opt.rel_tol = 1e-12;
    auto f = [&](double t) { return std::pow(x + root * std::cos(t), nu); };
    return numerics::integrate(f, 0.0, pi, opt).value / pi;
}

double radial_profile_da_legendre(const Scenario &s, const Rectenna &rect, double r, double h_D, double r_ms)
{
    check_alpha(s.alpha);
    const double h2 = h_D * h_D;
    const double D = ((r_ms - r) * (r_ms - r) + h2) * ((r_ms + r) * (r_ms + r) + h2);
    const double chi = (r_ms * r_ms + r * r + h2) / std::sqrt(D);
    return k0(rect) * s.P * std::pow(D, -0.25 * s.alpha) * legendre_p(0.5 * s.alpha - 1.0, chi);
}

double efficiency(const Scenario &s, const Rectenna &rect, const Deployment &dep)
{
    check_alpha(s.alpha);
    const double norm = k0(rect) / (pi * s.R * s.R);
    if (const auto *ca = std::get_if<CaDeployment>(&dep))
        return norm * q_centred(s.alpha, s.R, ca->h_C);
    const auto &da = std::get<DaDeployment>(dep);
    return norm * q_integral(s.alpha, s.R, da.r, da.h_D);
}

double required_power(double target, const Scenario &s, const Rectenna &rect, const Deployment &dep)
{
    if (!(target > 0.0))
        throw InputError("target power must be positive");
    return target / efficiency(s, rect, dep);
}

PowerReport power_report(const Scenario &s, const Rectenna &rect, const Deployment &dep)
{
    PowerReport rep;
    rep.avg_power = efficiency(s, rect, dep) * s.P;
    rep.efficiency = rep.avg_power / s.P;
    rep.deployment = dep;
    rep.alpha = s.alpha;
    return rep;
}

} // namespace dapb
