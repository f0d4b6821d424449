// SPDX-License-Identifier: Apache-2.0
//
// ntnchannel: non-terrestrial network channel model and link budget library
// Copyright (C) 2026 The ntnchannel contributors
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

#include "ntn/csv.hpp"

#include "ntn/error.hpp"

#include <charconv>
#include <sstream>

namespace ntn
{

namespace
{

std::string_view
trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
    {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string>
split(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
        {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace

std::size_t
CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        if (header[i] == name)
        {
            return i;
        }
    }
    throw ConfigError(source + ": missing column '" + std::string(name) + "'");
}

const std::string&
CsvTable::text(std::size_t row, std::size_t col) const
{
    return rows.at(row).at(col);
}

double
CsvTable::number(std::size_t row, std::size_t col) const
{
    const std::string& s = text(row, col);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
    {
        throw ConfigError(source + ": row " + std::to_string(row + 1) + ", column '" +
                          header.at(col) + "': not a number: '" + s + "'");
    }
    return value;
}

CsvTable
parse_csv(std::string_view text, std::string_view source)
{
    CsvTable table;
    table.source = std::string(source);
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size())
    {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
        {
            end = text.size();
        }
        const auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty())
        {
            continue;
        }
        if (line.front() == '#')
        {
            table.comments.emplace_back(trim(line.substr(1)));
            continue;
        }
        auto fields = split(line);
        if (table.header.empty())
        {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size())
        {
            std::ostringstream msg;
            msg << source << ":" << line_no << ": expected " << table.header.size()
                << " fields, got " << fields.size();
            throw ConfigError(msg.str());
        }
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty())
    {
        throw ConfigError(std::string(source) + ": no header line");
    }
    return table;
}

} // namespace ntn
