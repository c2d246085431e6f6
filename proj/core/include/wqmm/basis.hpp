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

#ifndef WQMM_BASIS_HPP
#define WQMM_BASIS_HPP

#include "wqmm/models.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wqmm
{

/// Component group a basis function belongs to. Walfisch-Ikegami sets use
/// Fsp/Rts/Msd; Walfisch-Bertoni sets use Core/Height/Geometry/Curvature.
enum class Group
{
    Fsp,
    Rts,
    Msd,
    Core,
    Height,
    Geometry,
    Curvature,
};

std::string_view to_string(Group group) noexcept;

struct BasisFunction
{
    std::size_t index = 0;
    std::string label;
    Group group = Group::Fsp;
    std::function<double(double d_km)> evaluate;
};

/*!
 * The component terms of one model variant for a fixed terrain, used as
 * both expansion and testing functions of the calibration.
 *
 * Walfisch-Ikegami variants have 13 functions in the order
 *   32.4, 20 log d, 20 log f, c_rts, -10 log w, 10 log f, 20 log dh_rx,
 *   orientation, -18 log(1 + dh_tx), k_a, 18 log d, k_f log f, -9 log b
 * and Walfisch-Bertoni has 8:
 *   89.5, 38 log d, -18 log dh_tx, 21 log f, 5 log((b/2)^2 + dh_rx^2),
 *   -9 log b, 20 log atan(2 dh_rx / b), -18 log(1 - d^2 / (17 dh_tx)).
 *
 * With unit weights the functions sum to predict_basic().
 */
class BasisSet
{
public:
    BasisSet(ModelKind kind, const Terrain &terrain, std::vector<BasisFunction> functions);

    ModelKind kind() const noexcept { return kind_; }
    const Terrain &terrain() const noexcept { return terrain_; }
    std::size_t size() const noexcept { return functions_.size(); }
    const BasisFunction &operator[](std::size_t n) const { return functions_.at(n); }
    const std::vector<BasisFunction> &functions() const noexcept { return functions_; }

    /// Groups in first-appearance order.
    std::vector<Group> groups() const;

    /// All f_n(d). Throws DomainError / CurvatureDomainError outside the variant's domain.
    std::vector<double> evaluate(double d_km) const;

    /// Sum of coefficient-weighted f_n(d). coefficients.size() must equal size().
    double combine(std::span<const double> coefficients, double d_km) const;

    /// Throws unless d_km is inside the variant's domain.
    void check_domain(double d_km) const;

private:
    ModelKind kind_;
    Terrain terrain_;
    std::vector<BasisFunction> functions_;
};

BasisSet build_basis(ModelKind kind, const Terrain &terrain);

/// K x N table of f_n(d_k).
struct DesignMatrix
{
    Eigen::MatrixXd values;
    std::vector<double> distances_km;

    Eigen::Index rows() const noexcept { return values.rows(); }
    Eigen::Index cols() const noexcept { return values.cols(); }
};

/// Evaluates every basis function at every distance. For W-BERT, all
/// distances outside the curvature domain are collected into one
/// CurvatureDomainError.
DesignMatrix design_matrix(const BasisSet &basis, std::span<const double> distances_km);

inline constexpr double kDefaultRankTolerance = 1e-10;

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const DesignMatrix &m);

/// Number of singular values above tol times the largest one.
int effective_rank(const DesignMatrix &m, double tol = kDefaultRankTolerance);

} // namespace wqmm

#endif
