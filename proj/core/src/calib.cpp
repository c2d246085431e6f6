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

#include "wqmm/calib.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wqmm
{

void MeasurementSet::validate() const
{
    if (samples.empty())
        throw std::invalid_argument("measurement set is empty");
    for (std::size_t k = 0; k < samples.size(); ++k)
    {
        const Sample &s = samples[k];
        if (!std::isfinite(s.d_km) || s.d_km <= 0.0 || !std::isfinite(s.pathloss_db) || s.pathloss_db <= 0.0)
        {
            std::ostringstream msg;
            msg << "measurement " << k << " (" << s.d_km << " km, " << s.pathloss_db
                << " dB) needs a positive finite distance and pathloss";
            throw std::invalid_argument(msg.str());
        }
    }
}

std::vector<double> MeasurementSet::distances_km() const
{
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](const Sample &s) { return s.d_km; });
    return out;
}

std::vector<double> MeasurementSet::pathloss_db() const
{
    std::vector<double> out(samples.size());
    std::transform(samples.begin(), samples.end(), out.begin(), [](const Sample &s) { return s.pathloss_db; });
    return out;
}

GramSystem gram_system(const DesignMatrix &m, std::span<const double> measured_db)
{
    if (static_cast<Eigen::Index>(measured_db.size()) != m.rows())
        throw std::invalid_argument("measurement count does not match design matrix rows");
    const Eigen::Map<const Eigen::VectorXd> p(measured_db.data(), m.rows());
    return {m.values.transpose() * m.values, m.values.transpose() * p};
}

LeastSquaresSolution solve_min_norm(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, double tol)
{
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_min_norm: row count mismatch");
    LeastSquaresSolution out;
    out.coefficients = Eigen::VectorXd::Zero(a.cols());
    if (a.rows() == 0 || a.cols() == 0)
        return out;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.singular_values = svd.singularValues();
    const double cutoff = tol * out.singular_values(0);
    for (Eigen::Index i = 0; i < out.singular_values.size(); ++i)
    {
        const double sigma = out.singular_values(i);
        if (sigma <= cutoff || sigma == 0.0)
            break;
        out.coefficients += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(b) / sigma);
        ++out.rank;
    }
    return out;
}

Calibration::Calibration(BasisSet basis, std::vector<double> coefficients, int rank, double rank_tol)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)), rank_(rank), rank_tol_(rank_tol)
{
    if (coefficients_.size() != basis_.size())
        throw std::invalid_argument("coefficient count does not match basis size");
}

Calibration::Calibration(BasisSet basis, std::vector<double> coefficients, int rank, double rank_tol,
                         std::vector<double> singular_values, std::vector<double> distances_km,
                         std::vector<double> measured_db)
    : Calibration(std::move(basis), std::move(coefficients), rank, rank_tol)
{
    if (distances_km.size() != measured_db.size())
        throw std::invalid_argument("distance and measurement counts differ");
    singular_values_ = std::move(singular_values);
    distances_km_ = std::move(distances_km);
    measured_db_ = std::move(measured_db);
    fitted_db_.reserve(distances_km_.size());
    residuals_db_.reserve(distances_km_.size());
    for (std::size_t k = 0; k < distances_km_.size(); ++k)
    {
        fitted_db_.push_back(basis_.combine(coefficients_, distances_km_[k]));
        residuals_db_.push_back(fitted_db_.back() - measured_db_[k]);
    }
}

Calibration calibrate(ModelKind kind, const Terrain &terrain, const MeasurementSet &meas, double rank_tol)
{
    meas.validate();
    BasisSet basis = build_basis(kind, terrain);
    std::vector<double> distances = meas.distances_km();
    std::vector<double> measured = meas.pathloss_db();

    const DesignMatrix m = design_matrix(basis, distances);
    const Eigen::Map<const Eigen::VectorXd> target(measured.data(), static_cast<Eigen::Index>(measured.size()));
    const LeastSquaresSolution sol = solve_min_norm(m.values, target, rank_tol);

    std::vector<double> alpha(sol.coefficients.data(), sol.coefficients.data() + sol.coefficients.size());
    std::vector<double> sv(sol.singular_values.data(), sol.singular_values.data() + sol.singular_values.size());
    return Calibration(std::move(basis), std::move(alpha), sol.rank, rank_tol, std::move(sv), std::move(distances),
                       std::move(measured));
}

double predict_calibrated(const Calibration &c, double d_km)
{
    return c.basis().combine(c.coefficients(), d_km);
}

DisaggregationProfile disaggregate(const Calibration &c, std::span<const double> distances_km)
{
    const BasisSet &basis = c.basis();
    DisaggregationProfile out;
    out.kind = c.kind();
    out.distances_km.assign(distances_km.begin(), distances_km.end());
    out.groups = basis.groups();
    out.calibrated.assign(out.groups.size(), std::vector<double>(distances_km.size(), 0.0));
    out.basic.assign(out.groups.size(), std::vector<double>(distances_km.size(), 0.0));
    out.net_calibrated.assign(distances_km.size(), 0.0);
    out.net_basic.assign(distances_km.size(), 0.0);

    for (std::size_t k = 0; k < distances_km.size(); ++k)
    {
        const std::vector<double> values = basis.evaluate(distances_km[k]);
        for (std::size_t n = 0; n < values.size(); ++n)
        {
            const auto g = static_cast<std::size_t>(
                std::find(out.groups.begin(), out.groups.end(), basis[n].group) - out.groups.begin());
            out.calibrated[g][k] += c.coefficients()[n] * values[n];
            out.basic[g][k] += values[n];
        }
        for (std::size_t g = 0; g < out.groups.size(); ++g)
        {
            out.net_calibrated[k] += out.calibrated[g][k];
            out.net_basic[k] += out.basic[g][k];
        }
    }
    return out;
}

} // namespace wqmm
