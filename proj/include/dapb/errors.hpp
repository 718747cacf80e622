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

#ifndef DAPB_ERRORS_HPP
#define DAPB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dapb
{

// Input problems: bad config text, invariant violations, out-of-domain
// arguments. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigParseError : public InputError
{
public:
    ConfigParseError(std::string key, const std::string &what)
        : InputError(what), key_(std::move(key)) {}
    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

class ValidationError : public InputError
{
public:
    ValidationError(std::string key, const std::string &what)
        : InputError(what), key_(std::move(key)) {}
    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

// h_C outside [sqrt(2 R d_ref), R).
class RegimeError : public InputError
{
public:
    using InputError::InputError;
};

class OutOfCellError : public InputError
{
public:
    using InputError::InputError;
};

class UnsupportedAlphaError : public InputError
{
public:
    using InputError::InputError;
};

// Numeric failures. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericError
{
public:
    QuadratureError(const std::string &what, double estimate, double error_estimate)
        : NumericError(what), estimate_(estimate), error_estimate_(error_estimate) {}
    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

class NonBracketingError : public NumericError
{
public:
    using NumericError::NumericError;
};

class DivisionByZeroPolynomial : public NumericError
{
public:
    using NumericError::NumericError;
};

class MaxDepthError : public NumericError
{
public:
    using NumericError::NumericError;
};

class NoRootError : public NumericError
{
public:
    using NumericError::NumericError;
};

} // namespace dapb

#endif
