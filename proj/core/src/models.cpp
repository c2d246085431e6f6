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

#include "wqmm/models.hpp"

#include "wqmm/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wqmm
{

namespace
{

void require_positive(double value, const char *name)
{
    if (!std::isfinite(value) || value <= 0.0)
    {
        std::ostringstream msg;
        msg << name << " must be positive and finite (got " << value << ")";
        throw DomainError(msg.str());
    }
}

void require_distance(double d_km)
{
    require_positive(d_km, "distance d_km");
}

void require_curvature_domain(const Terrain &t, double d_km)
{
    if (d_km * d_km >= 17.0 * t.dh_tx_m)
    {
        std::ostringstream msg;
        msg << "distance " << d_km << " km is outside the Walfisch-Bertoni domain (d^2 < 17 * dh_tx = "
            << 17.0 * t.dh_tx_m << ")";
        throw CurvatureDomainError(msg.str(), {d_km});
    }
}

constexpr double kTwoGHz = 2000.0;

} // namespace

void Terrain::validate() const
{
    require_positive(f_mhz, "f_mhz");
    require_positive(w_m, "w_m");
    require_positive(b_m, "b_m");
    require_positive(dh_rx_m, "dh_rx_m");
    require_positive(dh_tx_m, "dh_tx_m");
    if (!std::isfinite(phi_deg) || phi_deg < 0.0 || phi_deg > 55.0)
    {
        std::ostringstream msg;
        msg << "phi_deg must lie in [0, 55] (got " << phi_deg << ")";
        throw DomainError(msg.str());
    }
}

std::string_view to_string(ModelKind kind) noexcept
{
    switch (kind)
    {
    case ModelKind::CwiMetro:
        return "CWI-M";
    case ModelKind::CwiSuburban:
        return "CWI-SU";
    case ModelKind::ItwiMetro:
        return "ITWI-M";
    case ModelKind::ItwiSuburban:
        return "ITWI-SU";
    case ModelKind::WalfischBertoni:
        return "W-BERT";
    }
    return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept
{
    for (ModelKind kind : kAllModelKinds)
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

bool is_walfisch_bertoni(ModelKind kind) noexcept
{
    return kind == ModelKind::WalfischBertoni;
}

Family family_of(ModelKind kind)
{
    switch (kind)
    {
    case ModelKind::CwiMetro:
    case ModelKind::CwiSuburban:
        return Family::Cost;
    case ModelKind::ItwiMetro:
    case ModelKind::ItwiSuburban:
        return Family::Itu;
    case ModelKind::WalfischBertoni:
        break;
    }
    throw std::invalid_argument("W-BERT has no Walfisch-Ikegami family");
}

Density density_of(ModelKind kind)
{
    switch (kind)
    {
    case ModelKind::CwiMetro:
    case ModelKind::ItwiMetro:
        return Density::Metro;
    case ModelKind::CwiSuburban:
    case ModelKind::ItwiSuburban:
        return Density::Suburban;
    case ModelKind::WalfischBertoni:
        break;
    }
    throw std::invalid_argument("W-BERT has no Walfisch-Ikegami density");
}

double wb_distance_limit_km(const Terrain &t)
{
    require_positive(t.dh_tx_m, "dh_tx_m");
    return std::sqrt(17.0 * t.dh_tx_m);
}

bool in_domain(ModelKind kind, const Terrain &t, double d_km) noexcept
{
    if (!std::isfinite(d_km) || d_km <= 0.0)
        return false;
    if (is_walfisch_bertoni(kind))
        return d_km * d_km < 17.0 * t.dh_tx_m;
    return true;
}

double free_space_loss(double d_km, double f_mhz)
{
    require_distance(d_km);
    require_positive(f_mhz, "f_mhz");
    return 32.4 + 20.0 * std::log10(d_km) + 20.0 * std::log10(f_mhz);
}

double orientation_loss(double phi_deg)
{
    if (!std::isfinite(phi_deg) || phi_deg < 0.0 || phi_deg > 55.0)
    {
        std::ostringstream msg;
        msg << "street orientation " << phi_deg << " deg is outside the supported range [0, 55]";
        throw DomainError(msg.str());
    }
    if (phi_deg < 35.0)
        return -10.0 + 0.354 * phi_deg;
    return 2.5 + 0.075 * (phi_deg - 35.0);
}

double rooftop_constant(Family family) noexcept
{
    return family == Family::Cost ? -16.9 : -8.2;
}

double rooftop_to_street_loss(const Terrain &t, Family family)
{
    require_positive(t.w_m, "w_m");
    require_positive(t.f_mhz, "f_mhz");
    require_positive(t.dh_rx_m, "dh_rx_m");
    return rooftop_constant(family) - 10.0 * std::log10(t.w_m) + 10.0 * std::log10(t.f_mhz) +
           20.0 * std::log10(t.dh_rx_m) + orientation_loss(t.phi_deg);
}

double multiscreen_ka(double f_mhz, Family family) noexcept
{
    return (family == Family::Itu && f_mhz > kTwoGHz) ? 71.4 : 54.0;
}

double multiscreen_kf(double f_mhz, Density density, Family family) noexcept
{
    if (family == Family::Itu && f_mhz > kTwoGHz)
        return -8.0;
    const double slope = density == Density::Metro ? 1.5 : 0.7;
    return slope * (f_mhz / 925.0 - 1.0) - 4.0;
}

double multiscreen_loss(const Terrain &t, double d_km, Density density, Family family)
{
    require_distance(d_km);
    require_positive(t.f_mhz, "f_mhz");
    require_positive(t.b_m, "b_m");
    require_positive(t.dh_tx_m, "dh_tx_m");
    return -18.0 * std::log10(1.0 + t.dh_tx_m) + multiscreen_ka(t.f_mhz, family) + 18.0 * std::log10(d_km) +
           multiscreen_kf(t.f_mhz, density, family) * std::log10(t.f_mhz) - 9.0 * std::log10(t.b_m);
}

double wb_building_geometry(const Terrain &t)
{
    require_positive(t.b_m, "b_m");
    require_positive(t.dh_rx_m, "dh_rx_m");
    const double half_b = 0.5 * t.b_m;
    const double angle_deg = std::atan(2.0 * t.dh_rx_m / t.b_m) * 180.0 / std::numbers::pi;
    return 5.0 * std::log10(half_b * half_b + t.dh_rx_m * t.dh_rx_m) - 9.0 * std::log10(t.b_m) +
           20.0 * std::log10(angle_deg);
}

double wb_excess_loss(const Terrain &t, double d_km)
{
    require_distance(d_km);
    require_positive(t.f_mhz, "f_mhz");
    require_positive(t.dh_tx_m, "dh_tx_m");
    require_curvature_domain(t, d_km);
    const double curvature = 1.0 - d_km * d_km / (17.0 * t.dh_tx_m);
    return 57.1 + std::log10(t.f_mhz) + 18.0 * std::log10(d_km) - 18.0 * std::log10(t.dh_tx_m) -
           18.0 * std::log10(curvature) + wb_building_geometry(t);
}

double predict_basic(ModelKind kind, const Terrain &t, double d_km)
{
    t.validate();
    const double fsp = free_space_loss(d_km, t.f_mhz);
    if (is_walfisch_bertoni(kind))
        return fsp + wb_excess_loss(t, d_km);
    const Family family = family_of(kind);
    return fsp + rooftop_to_street_loss(t, family) + multiscreen_loss(t, d_km, density_of(kind), family);
}

} // namespace wqmm
