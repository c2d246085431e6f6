// SPDX-License-Identifier: Apache-2.0
//
// wqmm - measurement calibration of Walfisch-type urban pathloss models
// Copyright (C) 2026 The wqmm Authors
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

#include "wqmm/io.hpp"

#include "wqmm/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace wqmm
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::ifstream open_input(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return in;
}

} // namespace

bool parse_double(std::string_view text, double &value)
{
    text = trim(text);
    if (text.empty())
        return false;
    if (text.front() == '+')
        text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size();
}

std::string format_fixed(double value, int decimals)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
    if (ec != std::errc())
        return std::to_string(value);
    std::string out(buf, ptr);
    if (!out.empty() && out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos)
        out.erase(0, 1);
    return out;
}

std::string format_exact(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        return std::to_string(value);
    return std::string(buf, ptr);
}

MeasurementSet parse_measurements(std::istream &in, const std::string &source)
{
    MeasurementSet meas;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty())
            continue;
        if (!header_seen)
        {
            if (text != kMeasurementHeader)
                throw ParseError(source, line_no, "expected header '" + std::string(kMeasurementHeader) + "'");
            header_seen = true;
            continue;
        }
        const auto cells = split(text, ',');
        if (cells.size() != 2)
            throw ParseError(source, line_no, "expected 2 columns, found " + std::to_string(cells.size()));
        Sample s;
        if (!parse_double(cells[0], s.d_km))
            throw ParseError(source, line_no, "non-numeric distance '" + std::string(cells[0]) + "'");
        if (!parse_double(cells[1], s.pathloss_db))
            throw ParseError(source, line_no, "non-numeric pathloss '" + std::string(cells[1]) + "'");
        if (!std::isfinite(s.d_km) || s.d_km <= 0.0)
            throw ParseError(source, line_no, "distance must be positive");
        if (!std::isfinite(s.pathloss_db) || s.pathloss_db <= 0.0)
            throw ParseError(source, line_no, "pathloss must be positive and finite");
        meas.samples.push_back(s);
    }
    if (!header_seen)
        throw ParseError(source, line_no, "missing header '" + std::string(kMeasurementHeader) + "'");
    if (meas.samples.empty())
        throw ParseError(source, line_no, "no measurement rows");
    return meas;
}

MeasurementSet load_measurements(const std::filesystem::path &path)
{
    auto in = open_input(path);
    MeasurementSet meas = parse_measurements(in, path.string());
    meas.label = path.stem().string();
    return meas;
}

void write_measurements(std::ostream &out, const MeasurementSet &meas)
{
    out << kMeasurementHeader << '\n';
    for (const Sample &s : meas.samples)
        out << format_exact(s.d_km) << ',' << format_exact(s.pathloss_db) << '\n';
}

void write_measurements(const std::filesystem::path &path, const MeasurementSet &meas)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write_measurements(out, meas);
}

void write_coefficients(std::ostream &out, const Calibration &c)
{
    out << "# model = " << to_string(c.kind()) << '\n';
    out << "# basis_size = " << c.basis().size() << '\n';
    out << "# rank = " << c.rank() << '\n';
    out << "# rank_tol = " << format_exact(c.rank_tolerance()) << '\n';
    out << "# samples = " << c.distances_km().size() << '\n';
    out << "# singular_values =";
    for (double s : c.singular_values())
        out << ' ' << format_exact(s);
    out << '\n';
    out << "index,group,label,alpha\n";
    for (std::size_t n = 0; n < c.basis().size(); ++n)
    {
        const BasisFunction &fn = c.basis()[n];
        out << fn.index << ',' << to_string(fn.group) << ',' << fn.label << ','
            << format_exact(c.coefficients()[n]) << '\n';
    }
}

SavedCoefficients parse_coefficients(std::istream &in, const std::string &source)
{
    SavedCoefficients saved;
    bool have_model = false;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string_view text = trim(line);
        if (text.empty())
            continue;
        if (text.front() == '#')
        {
            text.remove_prefix(1);
            const auto eq = text.find('=');
            if (eq == std::string_view::npos)
                continue;
            const auto key = trim(text.substr(0, eq));
            const auto value = trim(text.substr(eq + 1));
            if (key == "model")
            {
                const auto kind = parse_model_kind(value);
                if (!kind)
                    throw ParseError(source, line_no, "unknown model '" + std::string(value) + "'");
                saved.kind = *kind;
                have_model = true;
            }
            else if (key == "rank")
            {
                double r = 0.0;
                if (!parse_double(value, r))
                    throw ParseError(source, line_no, "bad rank");
                saved.rank = static_cast<int>(r);
            }
            else if (key == "rank_tol")
            {
                if (!parse_double(value, saved.rank_tol))
                    throw ParseError(source, line_no, "bad rank_tol");
            }
            continue;
        }
        if (!header_seen)
        {
            if (text != "index,group,label,alpha")
                throw ParseError(source, line_no, "expected header 'index,group,label,alpha'");
            header_seen = true;
            continue;
        }
        const auto cells = split(text, ',');
        if (cells.size() != 4)
            throw ParseError(source, line_no, "expected 4 columns");
        double index = 0.0;
        double alpha = 0.0;
        if (!parse_double(cells[0], index) || index != static_cast<double>(saved.coefficients.size()))
            throw ParseError(source, line_no, "coefficient index out of sequence");
        if (!parse_double(cells[3], alpha) || !std::isfinite(alpha))
            throw ParseError(source, line_no, "non-numeric alpha '" + std::string(cells[3]) + "'");
        saved.coefficients.push_back(alpha);
    }
    if (!have_model)
        throw ParseError(source, line_no, "missing '# model = ...' line");
    const std::size_t expected = is_walfisch_bertoni(saved.kind) ? 8 : 13;
    if (saved.coefficients.size() != expected)
        throw ParseError(source, line_no,
                         "expected " + std::to_string(expected) + " coefficients, found " +
                             std::to_string(saved.coefficients.size()));
    return saved;
}

SavedCoefficients load_coefficients(const std::filesystem::path &path)
{
    auto in = open_input(path);
    return parse_coefficients(in, path.string());
}

} // namespace wqmm
