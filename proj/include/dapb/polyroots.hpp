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

#ifndef DAPB_POLYROOTS_HPP
#define DAPB_POLYROOTS_HPP

#include <initializer_list>
#include <span>
#include <vector>

namespace dapb
{

/// Real polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed on construction so the leading coefficient is always nonzero;
/// the zero polynomial has no coefficients and degree -1.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> ascending);
    Polynomial(std::initializer_list<double> ascending);

    static Polynomial from_roots(std::span<const double> roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    double leading() const { return coeffs_.back(); }
    double operator[](int k) const { return k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : 0.0; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double norm_inf() const noexcept;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(double k, const Polynomial &a);
    Polynomial operator-() const { return -1.0 * *this; }

    bool operator==(const Polynomial &) const = default;

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Horner evaluation with compensated (error-free transformation) summation.
double eval(const Polynomial &p, double x);

Polynomial derivative(const Polynomial &p);

struct Division
{
    Polynomial quotient;
    Polynomial remainder;
};

// Remainder coefficients with magnitude below this fraction of the
// dividend's infinity norm are set to zero.
inline constexpr double kRemainderPrune = 1e-12;

/// a = q b + r with deg r < deg b. Throws DivisionByZeroPolynomial.
Division divide(const Polynomial &a, const Polynomial &b);
Polynomial rem(const Polynomial &a, const Polynomial &b);

/// p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i) until the remainder
/// vanishes. A non-constant last element means p has repeated roots and
/// that element is gcd(p, p').
struct SturmChain
{
    std::vector<Polynomial> sequence;
    bool repeated_roots = false;
};

SturmChain sturm_chain(const Polynomial &p);

/// Sign alternations along the chain evaluated at x, zeros skipped.
int sign_changes(const SturmChain &chain, double x);

/// p with repeated roots collapsed to simple ones (p / gcd(p, p')).
Polynomial square_free_part(const Polynomial &p);

/// Number of distinct real roots in (lo, hi].
int count_roots(const Polynomial &p, double lo, double hi);

/// Sign alternations among the nonzero coefficients: an upper bound on
/// the positive-root count (with multiplicity) of the same parity.
int descartes_positive_bound(const Polynomial &p);

struct RootBracket
{
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr int kMaxIsolationDepth = 200;

/// Disjoint brackets (lo_k, hi_k], each holding exactly one distinct root,
/// covering every root in (lo, hi]. Throws MaxDepthError past 200 levels.
std::vector<RootBracket> isolate_roots(const Polynomial &p, double lo, double hi);

/// Bisection until the bracket is no wider than eps; returns the midpoint,
/// or the probe point itself if p vanishes there exactly.
/// Throws NonBracketingError when p has the same nonzero sign at both ends.
double bisect_root(const Polynomial &p, RootBracket bracket, double eps);

} // namespace dapb

#endif
