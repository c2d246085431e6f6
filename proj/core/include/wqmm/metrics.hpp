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

#ifndef WQMM_METRICS_HPP
#define WQMM_METRICS_HPP

#include <optional>
#include <span>

namespace wqmm
{

/// Root-mean-square of (predicted - measured). Throws std::invalid_argument on
/// empty or mismatched input.
double rmse(std::span<const double> predicted, std::span<const double> measured);

/// Mean prediction error, mean of (predicted - measured).
double mpe(std::span<const double> predicted, std::span<const double> measured);

/// 100 * (basic - calibrated) / basic. Requires rmse_basic > 0.
double improvement_pct(double rmse_basic, double rmse_calibrated);

struct MetricsReport
{
    double rmse_db = 0.0;
    double mpe_db = 0.0;
    std::optional<double> rmse_basic_db;
    std::optional<double> improvement_pct;
};

/// RMSE/MPE of `predicted`; when `basic` predictions are given, also the basic
/// RMSE and the improvement over it (left empty if the basic RMSE is zero).
MetricsReport evaluate(std::span<const double> predicted, std::span<const double> measured,
                       std::optional<std::span<const double>> basic = std::nullopt);

} // namespace wqmm

#endif
