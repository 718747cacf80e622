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

#include "dapb/polyroots.hpp"

#include "dapb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dapb
{

namespace
{

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const double> roots)
{
    Polynomial p{1.0};
    for (double r : roots)
        p = p * Polynomial{-r, 1.0};
    return p;
}

double Polynomial::norm_inf() const noexcept
{
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::fabs(c));
    return m;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
    std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-b); }

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(double k, const Polynomial &a)
{
    std::vector<double> out(a.coeffs_);
    for (double &c : out)
        c *= k;
    return Polynomial(std::move(out));
}

double eval(const Polynomial &p, double x)
{
    const auto c = p.coeffs();
    if (c.empty())
        return 0.0;
    double s = c.back();
    double comp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        // TwoProduct via fma, TwoSum (Knuth).
        const double prod = s * x;
        const double prod_err = std::fma(s, x, -prod);
        const double sum = prod + c[i];
        const double bb = sum - prod;
        const double sum_err = (prod - (sum - bb)) + (c[i] - bb);
        comp = comp * x + (prod_err + sum_err);
        s = sum;
    }
    return s + comp;
}

Polynomial derivative(const Polynomial &p)
{
    if (p.degree() < 1)
        return {};
    std::vector<double> out(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        out[static_cast<std::size_t>(k - 1)] = k * p[k];
    return Polynomial(std::move(out));
}

Division divide(const Polynomial &a, const Polynomial &b)
{
    if (b.is_zero())
        throw DivisionByZeroPolynomial("polynomial division by zero polynomial");
    const int da = a.degree();
    const int db = b.degree();
    if (da < db)
        return {Polynomial{}, a};

    std::vector<double> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<double> q(static_cast<std::size_t>(da - db + 1), 0.0);
    const double lead = b.leading();
    for (int k = da - db; k >= 0; --k) {
        const double t = r[static_cast<std::size_t>(k + db)] / lead;
        q[static_cast<std::size_t>(k)] = t;
        for (int j = 0; j < db; ++j)
            r[static_cast<std::size_t>(k + j)] -= t * b[j];
        r[static_cast<std::size_t>(k + db)] = 0.0;
    }
    r.resize(static_cast<std::size_t>(db));
    const double cutoff = kRemainderPrune * a.norm_inf();
    for (double &c : r)
        if (std::fabs(c) <= cutoff)
            c = 0.0;
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial rem(const Polynomial &a, const Polynomial &b) { return divide(a, b).remainder; }

SturmChain sturm_chain(const Polynomial &p)
{
    if (p.degree() < 1)
        throw InputError("Sturm chain needs a non-constant polynomial");
    SturmChain chain;
    chain.sequence.push_back(p);
    chain.sequence.push_back(derivative(p));
    while (chain.sequence.back().degree() > 0) {
        const auto &prev = chain.sequence[chain.sequence.size() - 2];
        Polynomial next = -rem(prev, chain.sequence.back());
        if (next.is_zero())
            break;
        chain.sequence.push_back(std::move(next));
    }
    chain.repeated_roots = chain.sequence.back().degree() > 0;
    return chain;
}

int sign_changes(const SturmChain &chain, double x)
{
    int changes = 0;
    int last = 0;
    for (const auto &q : chain.sequence) {
        const int s = sign_of(eval(q, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

Polynomial square_free_part(const Polynomial &p)
{
    if (p.degree() < 1)
        return p;
    const auto chain = sturm_chain(p);
    if (!chain.repeated_roots)
        return p;
    return divide(p, chain.sequence.back()).quotient;
}

int count_roots(const Polynomial &p, double lo, double hi)
{
    if (!(lo < hi))
        throw InputError("count_roots needs lo < hi");
    if (p.is_zero())
        throw InputError("count_roots of the zero polynomial");
    if (p.degree() < 1)
        return 0;

    auto chain = sturm_chain(p);
    if (chain.repeated_roots) {
        const auto reduced = divide(p, chain.sequence.back()).quotient;
        if (reduced.degree() < 1)
            return 0;
        chain = sturm_chain(reduced);
    }
    if (eval(chain.sequence.front(), lo) == 0.0)
        lo += 1e-12 * (hi - lo);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

int descartes_positive_bound(const Polynomial &p)
{
    int changes = 0;
    int last = 0;
    for (double c : p.coeffs()) {
        const int s = sign_of(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

std::vector<RootBracket> isolate_roots(const Polynomial &p, double lo, double hi)
{
    if (!(lo < hi))
        throw InputError("isolate_roots needs lo < hi");
    const auto sf = square_free_part(p);
    std::vector<RootBracket> out;
    if (sf.degree() < 1)
        return out;

    struct Work
    {
        double lo, hi;
        int count, depth;
    };
    std::vector<Work> stack{{lo, hi, count_roots(sf, lo, hi), 0}};
    while (!stack.empty()) {
        const Work w = stack.back();
        stack.pop_back();
        if (w.count <= 0)
            continue;
        if (w.count == 1) {
            out.push_back({w.lo, w.hi});
            continue;
        }
        if (w.depth >= kMaxIsolationDepth)
            throw MaxDepthError("root isolation exceeded maximum bisection depth");
        const double mid = 0.5 * (w.lo + w.hi);
        const int left = count_roots(sf, w.lo, mid);
        // Push right first so brackets come out in ascending order.
        stack.push_back({mid, w.hi, w.count - left, w.depth + 1});
        stack.push_back({w.lo, mid, left, w.depth + 1});
    }
    return out;
}

double bisect_root(const Polynomial &p, RootBracket bracket, double eps)
{
    double a = bracket.lo;
    double b = bracket.hi;
    const int sa = sign_of(eval(p, a));
    const int sb = sign_of(eval(p, b));
    if (sa == 0)
        return a;
    if (sb == 0)
        return b;
    if (sa == sb)
        throw NonBracketingError("bisect_root: no sign change over the bracket");

    while (std::fabs(b - a) > eps) {
        const double m = 0.5 * (a + b);
        if (m <= std::min(a, b) || m >= std::max(a, b))
            break;
        const int sm = sign_of(eval(p, m));
        if (sm == 0)
            return m;
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

} // namespace dapb
