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

#ifndef WQMM_ERRORS_HPP
#define WQMM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqmm
{

// Input outside the domain of a model formula (non-positive distance, angle
// outside the supported orientation branches, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Distances at or beyond the Walfisch-Bertoni curvature limit d^2 < 17 * dh_tx.
class CurvatureDomainError : public DomainError
{
public:
    CurvatureDomainError(const std::string &what, std::vector<double> offending_km)
        : DomainError(what), offending_(std::move(offending_km)) {}

    const std::vector<double> &offending_distances_km() const noexcept { return offending_; }

private:
    std::vector<double> offending_;
};

// Malformed measurement, coefficient or configuration file.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &source, std::size_t line, const std::string &message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace wqmm

#endif
