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

#include "wqmm/basis.hpp"

#include "wqmm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wqmm
{

namespace
{

BasisFunction constant(std::size_t index, std::string label, Group group, double value)
{
    return {index, std::move(label), group, [value](double) { return value; }};
}

std::vector<BasisFunction> walfisch_ikegami_functions(ModelKind kind, const Terrain &t)
{
    const Family family = family_of(kind);
    const Density density = density_of(kind);
    const double log_f = std::log10(t.f_mhz);

    std::vector<BasisFunction> fns;
    fns.reserve(13);
    fns.push_back(constant(0, "32.4", Group::Fsp, 32.4));
    fns.push_back({1, "20 log10 d", Group::Fsp, [](double d) { return 20.0 * std::log10(d); }});
    fns.push_back(constant(2, "20 log10 f", Group::Fsp, 20.0 * log_f));

    const double c_rts = rooftop_constant(family);
    fns.push_back(constant(3, family == Family::Cost ? "-16.9" : "-8.2", Group::Rts, c_rts));
    fns.push_back(constant(4, "-10 log10 w", Group::Rts, -10.0 * std::log10(t.w_m)));
    fns.push_back(constant(5, "10 log10 f", Group::Rts, 10.0 * log_f));
    fns.push_back(constant(6, "20 log10 dh_rx", Group::Rts, 20.0 * std::log10(t.dh_rx_m)));
    fns.push_back(constant(7, "orientation", Group::Rts, orientation_loss(t.phi_deg)));

    fns.push_back(constant(8, "-18 log10(1 + dh_tx)", Group::Msd, -18.0 * std::log10(1.0 + t.dh_tx_m)));
    fns.push_back(constant(9, "k_a", Group::Msd, multiscreen_ka(t.f_mhz, family)));
    fns.push_back({10, "18 log10 d", Group::Msd, [](double d) { return 18.0 * std::log10(d); }});
    fns.push_back(constant(11, "k_f log10 f", Group::Msd, multiscreen_kf(t.f_mhz, density, family) * log_f));
    fns.push_back(constant(12, "-9 log10 b", Group::Msd, -9.0 * std::log10(t.b_m)));
    return fns;
}

std::vector<BasisFunction> walfisch_bertoni_functions(const Terrain &t)
{
    const double half_b = 0.5 * t.b_m;
    const double angle_deg = std::atan(2.0 * t.dh_rx_m / t.b_m) * 180.0 / std::numbers::pi;
    const double horizon_scale = 17.0 * t.dh_tx_m;

    std::vector<BasisFunction> fns;
    fns.reserve(8);
    fns.push_back(constant(0, "89.5", Group::Core, 89.5));
    fns.push_back({1, "38 log10 d", Group::Core, [](double d) { return 38.0 * std::log10(d); }});
    fns.push_back(constant(2, "-18 log10 dh_tx", Group::Height, -18.0 * std::log10(t.dh_tx_m)));
    fns.push_back(constant(3, "21 log10 f", Group::Core, 21.0 * std::log10(t.f_mhz)));
    fns.push_back(constant(4, "5 log10((b/2)^2 + dh_rx^2)", Group::Geometry,
                           5.0 * std::log10(half_b * half_b + t.dh_rx_m * t.dh_rx_m)));
    fns.push_back(constant(5, "-9 log10 b", Group::Geometry, -9.0 * std::log10(t.b_m)));
    fns.push_back(constant(6, "20 log10 atan(2 dh_rx / b)", Group::Geometry, 20.0 * std::log10(angle_deg)));
    fns.push_back({7, "-18 log10(1 - d^2 / (17 dh_tx))", Group::Curvature, [horizon_scale](double d) {
                       return -18.0 * std::log10(1.0 - d * d / horizon_scale);
                   }});
    return fns;
}

} // namespace

std::string_view to_string(Group group) noexcept
{
    switch (group)
    {
    case Group::Fsp:
        return "FSP";
    case Group::Rts:
        return "RTS";
    case Group::Msd:
        return "MSD";
    case Group::Core:
        return "CORE";
    case Group::Height:
        return "HEIGHT";
    case Group::Geometry:
        return "GEOMETRY";
    case Group::Curvature:
        return "CURVATURE";
    }
    return "?";
}

BasisSet::BasisSet(ModelKind kind, const Terrain &terrain, std::vector<BasisFunction> functions)
    : kind_(kind), terrain_(terrain), functions_(std::move(functions))
{
    for (std::size_t n = 0; n < functions_.size(); ++n)
        if (functions_[n].index != n || !functions_[n].evaluate)
            throw std::invalid_argument("basis functions must be indexed 0..N-1 and callable");
}

std::vector<Group> BasisSet::groups() const
{
    std::vector<Group> out;
    for (const auto &fn : functions_)
        if (std::find(out.begin(), out.end(), fn.group) == out.end())
            out.push_back(fn.group);
    return out;
}

void BasisSet::check_domain(double d_km) const
{
    if (in_domain(kind_, terrain_, d_km))
        return;
    std::ostringstream msg;
    if (std::isfinite(d_km) && d_km > 0.0)
    {
        msg << to_string(kind_) << ": distance " << d_km << " km is outside the curvature domain (limit "
            << wb_distance_limit_km(terrain_) << " km)";
        throw CurvatureDomainError(msg.str(), {d_km});
    }
    msg << to_string(kind_) << ": distance must be positive and finite (got " << d_km << ")";
    throw DomainError(msg.str());
}

std::vector<double> BasisSet::evaluate(double d_km) const
{
    check_domain(d_km);
    std::vector<double> out;
    out.reserve(functions_.size());
    for (const auto &fn : functions_)
        out.push_back(fn.evaluate(d_km));
    return out;
}

double BasisSet::combine(std::span<const double> coefficients, double d_km) const
{
    if (coefficients.size() != functions_.size())
        throw std::invalid_argument("coefficient count does not match basis size");
    check_domain(d_km);
    double sum = 0.0;
    for (std::size_t n = 0; n < functions_.size(); ++n)
        sum += coefficients[n] * functions_[n].evaluate(d_km);
    return sum;
}

BasisSet build_basis(ModelKind kind, const Terrain &terrain)
{
    terrain.validate();
    if (is_walfisch_bertoni(kind))
        return BasisSet(kind, terrain, walfisch_bertoni_functions(terrain));
    return BasisSet(kind, terrain, walfisch_ikegami_functions(kind, terrain));
}

DesignMatrix design_matrix(const BasisSet &basis, std::span<const double> distances_km)
{
    std::vector<double> outside;
    for (double d : distances_km)
    {
        if (!std::isfinite(d) || d <= 0.0)
        {
            std::ostringstream msg;
            msg << to_string(basis.kind()) << ": distance must be positive and finite (got " << d << ")";
            throw DomainError(msg.str());
        }
        if (!in_domain(basis.kind(), basis.terrain(), d))
            outside.push_back(d);
    }
    if (!outside.empty())
    {
        std::ostringstream msg;
        msg << to_string(basis.kind()) << ": " << outside.size()
            << " distance(s) at or beyond the curvature limit " << wb_distance_limit_km(basis.terrain())
            << " km:";
        for (double d : outside)
            msg << ' ' << d;
        throw CurvatureDomainError(msg.str(), std::move(outside));
    }

    DesignMatrix m;
    m.distances_km.assign(distances_km.begin(), distances_km.end());
    m.values.resize(static_cast<Eigen::Index>(distances_km.size()), static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index k = 0; k < m.values.rows(); ++k)
        for (Eigen::Index n = 0; n < m.values.cols(); ++n)
            m.values(k, n) = basis[static_cast<std::size_t>(n)].evaluate(m.distances_km[static_cast<std::size_t>(k)]);
    return m;
}

Eigen::VectorXd singular_values(const DesignMatrix &m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return {};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.values);
    return svd.singularValues();
}

int effective_rank(const DesignMatrix &m, double tol)
{
    const Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) <= 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0))
            ++rank;
    return rank;
}

} // namespace wqmm
