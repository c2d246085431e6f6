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

#ifndef WQMM_IO_HPP
#define WQMM_IO_HPP

#include "wqmm/calib.hpp"
#include "wqmm/models.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wqmm
{

/// Header line of measurement files.
inline constexpr std::string_view kMeasurementHeader = "distance_km,pathloss_db";

/*!
 * Reads a two-column CSV measurement file. The first non-blank line must be
 * the header `distance_km,pathloss_db`; each following non-blank line holds
 * one sample. Errors carry the 1-based line number.
 */
MeasurementSet parse_measurements(std::istream &in, const std::string &source = "<stream>");
MeasurementSet load_measurements(const std::filesystem::path &path);

/// Writes samples with shortest round-trip formatting, so that
/// parse_measurements(write_measurements(m)) == m.
void write_measurements(std::ostream &out, const MeasurementSet &meas);
void write_measurements(const std::filesystem::path &path, const MeasurementSet &meas);

/// Fixed-point text with `decimals` places; values that round to zero print
/// without a sign.
std::string format_fixed(double value, int decimals = 4);

/// Shortest text that parses back to the same double.
std::string format_exact(double value);

/// Parses a whole token as a double. Returns false on trailing garbage.
bool parse_double(std::string_view text, double &value);

/// Coefficients of a saved calibration.
struct SavedCoefficients
{
    ModelKind kind = ModelKind::CwiMetro;
    std::vector<double> coefficients;
    int rank = 0;
    double rank_tol = 0.0;
};

/// Coefficient vector plus rank diagnostics as `# key = value` comment lines
/// followed by an `index,group,label,alpha` table.
void write_coefficients(std::ostream &out, const Calibration &c);
SavedCoefficients parse_coefficients(std::istream &in, const std::string &source = "<stream>");
SavedCoefficients load_coefficients(const std::filesystem::path &path);

} // namespace wqmm

#endif
