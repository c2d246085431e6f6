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

#ifndef WQMM_CALIB_HPP
#define WQMM_CALIB_HPP

#include "wqmm/basis.hpp"
#include "wqmm/models.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace wqmm
{

struct Sample
{
    double d_km = 0.0;
    double pathloss_db = 0.0;

    bool operator==(const Sample &) const = default;
};

/// Measured pathloss samples in acquisition order. Distances may repeat and
/// need not be sorted.
struct MeasurementSet
{
    std::vector<Sample> samples;
    std::string label;

    /// Throws std::invalid_argument if empty, if a distance is not positive
    /// and finite, or if a pathloss value is not positive and finite.
    void validate() const;

    std::size_t size() const noexcept { return samples.size(); }
    std::vector<double> distances_km() const;
    std::vector<double> pathloss_db() const;
};

/// Inner products <f_i, f_j> and <f_i, P> over the measurement distances.
struct GramSystem
{
    Eigen::MatrixXd gram;
    Eigen::VectorXd rhs;
};

GramSystem gram_system(const DesignMatrix &m, std::span<const double> measured_db);

struct LeastSquaresSolution
{
    Eigen::VectorXd coefficients;
    Eigen::VectorXd singular_values;
    int rank = 0;
};

/*!
 * Minimum-norm least-squares solution of a * x ~= b via the SVD of a.
 * Singular values at or below tol * sigma_max are treated as zero. When
 * a has full column rank this is the solution of the Gram system
 * (a^T a) x = a^T b.
 */
LeastSquaresSolution solve_min_norm(const Eigen::MatrixXd &a, const Eigen::VectorXd &b,
                                    double tol = kDefaultRankTolerance);

/// Calibration coefficients of one model variant together with the fit they
/// produce at the measurement distances. Immutable.
class Calibration
{
public:
    /// A calibration without measurements (e.g. loaded from a coefficients file).
    Calibration(BasisSet basis, std::vector<double> coefficients, int rank = 0, double rank_tol = kDefaultRankTolerance);

    /// A calibration fitted against `measured` at `distances_km`.
    Calibration(BasisSet basis, std::vector<double> coefficients, int rank, double rank_tol,
                std::vector<double> singular_values, std::vector<double> distances_km,
                std::vector<double> measured_db);

    ModelKind kind() const noexcept { return basis_.kind(); }
    const Terrain &terrain() const noexcept { return basis_.terrain(); }
    const BasisSet &basis() const noexcept { return basis_; }
    const std::vector<double> &coefficients() const noexcept { return coefficients_; }
    int rank() const noexcept { return rank_; }
    double rank_tolerance() const noexcept { return rank_tol_; }
    const std::vector<double> &singular_values() const noexcept { return singular_values_; }

    const std::vector<double> &distances_km() const noexcept { return distances_km_; }
    const std::vector<double> &measured_db() const noexcept { return measured_db_; }
    const std::vector<double> &fitted_db() const noexcept { return fitted_db_; }
    /// fitted - measured
    const std::vector<double> &residuals_db() const noexcept { return residuals_db_; }

private:
    BasisSet basis_;
    std::vector<double> coefficients_;
    int rank_ = 0;
    double rank_tol_ = kDefaultRankTolerance;
    std::vector<double> singular_values_;
    std::vector<double> distances_km_;
    std::vector<double> measured_db_;
    std::vector<double> fitted_db_;
    std::vector<double> residuals_db_;
};

/// Fits the coefficients of the variant's basis functions to the measurements.
/// Throws CurvatureDomainError (listing every offending distance) for W-BERT
/// samples beyond the curvature limit, std::invalid_argument for invalid
/// measurements.
Calibration calibrate(ModelKind kind, const Terrain &terrain, const MeasurementSet &meas,
                      double rank_tol = kDefaultRankTolerance);

/// Sum of alpha_n * f_n(d).
double predict_calibrated(const Calibration &c, double d_km);

/// Net pathloss split into component-group contributions, for the calibrated
/// (alpha-weighted) and basic (unit-weighted) model.
struct DisaggregationProfile
{
    ModelKind kind = ModelKind::CwiMetro;
    std::vector<double> distances_km;
    std::vector<Group> groups;
    std::vector<std::vector<double>> calibrated; ///< [group][distance]
    std::vector<std::vector<double>> basic;      ///< [group][distance]
    std::vector<double> net_calibrated;
    std::vector<double> net_basic;
};

DisaggregationProfile disaggregate(const Calibration &c, std::span<const double> distances_km);

} // namespace wqmm

#endif
