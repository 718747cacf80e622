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

#include "dapb/sweep_table.hpp"

#include "dapb/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace dapb
{

namespace
{

std::string quote_field(std::string_view f)
{
    if (f.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(f);
    std::string out = "\"";
    for (char ch : f) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns))
{
    std::set<std::string> seen;
    for (const auto &c : columns_)
        if (!seen.insert(c).second)
            throw InputError("duplicate column name: " + c);
}

void SweepTable::add_row(std::vector<double> row)
{
    if (row.size() != columns_.size())
        throw InputError("row arity " + std::to_string(row.size()) + " does not match " +
                         std::to_string(columns_.size()) + " columns");
    rows_.push_back(std::move(row));
}

void SweepTable::set_meta(std::string key, std::string value)
{
    auto it = std::find_if(metadata_.begin(), metadata_.end(), [&](const auto &kv) { return kv.first == key; });
    if (it != metadata_.end())
        it->second = std::move(value);
    else
        metadata_.emplace_back(std::move(key), std::move(value));
}

void SweepTable::set_meta(std::string key, double value) { set_meta(std::move(key), format_number(value)); }

std::string SweepTable::meta(std::string_view key) const
{
    for (const auto &[k, v] : metadata_)
        if (k == key)
            return v;
    return {};
}

std::size_t SweepTable::column_index(std::string_view name) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name)
            return i;
    throw InputError("no column named " + std::string(name));
}

std::vector<double> SweepTable::column(std::string_view name) const
{
    const auto idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_)
        out.push_back(r[idx]);
    return out;
}

std::string format_number(double v)
{
    if (v == 0.0)
        return "0";  // also folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const SweepTable &table)
{
    std::string out;
    for (const auto &[k, v] : table.metadata())
        out += "# " + k + "=" + v + "\r\n";
    for (std::size_t i = 0; i < table.columns().size(); ++i) {
        if (i)
            out += ',';
        out += quote_field(table.columns()[i]);
    }
    out += "\r\n";
    for (const auto &row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_number(row[i]);
        }
        out += "\r\n";
    }
    return out;
}

} // namespace dapb
