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

#include "wqmm/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace wqmm
{

namespace
{

void check_pair(std::span<const double> predicted, std::span<const double> measured)
{
    if (predicted.empty() || measured.empty())
        throw std::invalid_argument("metrics need at least one sample");
    if (predicted.size() != measured.size())
        throw std::invalid_argument("predicted and measured series differ in length");
}

} // namespace

double rmse(std::span<const double> predicted, std::span<const double> measured)
{
    check_pair(predicted, measured);
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < predicted.size(); ++k)
    {
        const double e = predicted[k] - measured[k];
        sum_sq += e * e;
    }
    return std::sqrt(sum_sq / static_cast<double>(predicted.size()));
}

double mpe(std::span<const double> predicted, std::span<const double> measured)
{
    check_pair(predicted, measured);
    double sum = 0.0;
    for (std::size_t k = 0; k < predicted.size(); ++k)
        sum += predicted[k] - measured[k];
    return sum / static_cast<double>(predicted.size());
}

double improvement_pct(double rmse_basic, double rmse_calibrated)
{
    if (!(rmse_basic > 0.0))
        throw std::invalid_argument("improvement_pct needs a positive basic RMSE");
    return 100.0 * (rmse_basic - rmse_calibrated) / rmse_basic;
}

MetricsReport evaluate(std::span<const double> predicted, std::span<const double> measured,
                       std::optional<std::span<const double>> basic)
{
    MetricsReport report;
    report.rmse_db = rmse(predicted, measured);
    report.mpe_db = mpe(predicted, measured);
    if (basic)
    {
        report.rmse_basic_db = rmse(*basic, measured);
        if (*report.rmse_basic_db > 0.0)
            report.improvement_pct = improvement_pct(*report.rmse_basic_db, report.rmse_db);
    }
    return report;
}

} // namespace wqmm
