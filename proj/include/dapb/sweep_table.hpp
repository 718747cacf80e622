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

#ifndef DAPB_SWEEP_TABLE_HPP
#define DAPB_SWEEP_TABLE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dapb
{

// Named numeric columns plus '#'-prefixed key=value metadata.
class SweepTable
{
public:
    SweepTable() = default;
    explicit SweepTable(std::vector<std::string> columns);

    const std::vector<std::string> &columns() const noexcept { return columns_; }
    const std::vector<std::vector<double>> &rows() const noexcept { return rows_; }
    const std::vector<std::pair<std::string, std::string>> &metadata() const noexcept { return metadata_; }

    // Throws InputError when the arity does not match the header.
    void add_row(std::vector<double> row);
    // Replaces an existing key in place, otherwise appends.
    void set_meta(std::string key, std::string value);
    void set_meta(std::string key, double value);
    // Empty string when absent.
    std::string meta(std::string_view key) const;

    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

/// 12 significant digits, '.' decimal separator.
std::string format_number(double v);

/// RFC 4180 CSV with CRLF line breaks; metadata lines come first.
std::string to_csv(const SweepTable &table);

} // namespace dapb

#endif
