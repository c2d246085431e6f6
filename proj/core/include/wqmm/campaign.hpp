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

#ifndef WQMM_CAMPAIGN_HPP
#define WQMM_CAMPAIGN_HPP

#include "wqmm/calib.hpp"
#include "wqmm/metrics.hpp"
#include "wqmm/models.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wqmm
{

/*!
 * Settings of one calibration run, read from a flat `key = value` file:
 *
 *   f_mhz, w_m, b_m, phi_deg, dh_rx_m, dh_tx_m   terrain (required)
 *   models                                       comma-separated, e.g. CWI-M, W-BERT (required)
 *   d_min_km, d_max_km, d_step_km                prediction grid (required)
 *   rank_tol                                     relative SVD cutoff (default 1e-10)
 *   measurements, output_dir                     optional paths, relative to the config file
 *
 * Blank lines and lines starting with '#' are ignored.
 */
struct CampaignConfig
{
    Terrain terrain;
    std::vector<ModelKind> models;
    std::filesystem::path measurements;
    std::filesystem::path output_dir;
    double d_min_km = 0.0;
    double d_max_km = 0.0;
    double d_step_km = 0.0;
    double rank_tol = kDefaultRankTolerance;

    /// Throws std::invalid_argument / DomainError on an invalid grid, empty model list or bad terrain.
    void validate() const;
};

CampaignConfig parse_config(std::istream &in, const std::string &source = "<stream>",
                            const std::filesystem::path &base_dir = {});
CampaignConfig load_config(const std::filesystem::path &path);

/// d_min + k * step for every k with d <= d_max.
std::vector<double> prediction_grid(double d_min_km, double d_max_km, double d_step_km);

/// Result of calibrating one model variant within a campaign.
struct ModelOutcome
{
    ModelKind kind = ModelKind::CwiMetro;
    std::optional<Calibration> calibration; ///< empty if the model failed
    std::string error;
    MetricsReport calibrated;
    MetricsReport basic;
    std::vector<double> grid_km; ///< prediction grid restricted to the model's domain
    std::vector<std::string> warnings;

    bool ok() const noexcept { return calibration.has_value(); }
};

/// Calibrates one model and evaluates it against the measurements. Never
/// throws for model-level failures; they are reported in `error`.
ModelOutcome calibrate_model(ModelKind kind, const CampaignConfig &config, const MeasurementSet &meas);

struct CampaignResult
{
    std::vector<ModelOutcome> outcomes;
    std::vector<std::filesystem::path> files;

    bool all_ok() const noexcept;
};

// Report tables. All dB values are written with 4 decimals.
void write_summary(std::ostream &out, const std::vector<ModelOutcome> &outcomes);
void write_profile(std::ostream &out, const ModelOutcome &outcome);
void write_disaggregation(std::ostream &out, const DisaggregationProfile &profile);

/*!
 * Calibrates every configured model (concurrently) and writes summary.csv plus
 * profile_<MODEL>.csv, disagg_<MODEL>.csv and coefficients_<MODEL>.csv for each
 * successful model into `output_dir`. Failures and warnings are reported on
 * `log` when given.
 */
CampaignResult run_calibration(const CampaignConfig &config, const MeasurementSet &meas,
                               const std::filesystem::path &output_dir, std::ostream *log = nullptr);

} // namespace wqmm

#endif
