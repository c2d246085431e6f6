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

#ifndef WQMM_MODELS_HPP
#define WQMM_MODELS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace wqmm
{

/// Fixed link and environment parameters of one measurement campaign.
/// Units: MHz for frequency, metres for lengths, degrees for angles.
struct Terrain
{
    double f_mhz = 0.0;   ///< operating frequency
    double w_m = 0.0;     ///< street width
    double b_m = 0.0;     ///< building separation
    double phi_deg = 0.0; ///< street orientation (incidence angle)
    double dh_rx_m = 0.0; ///< rooftop height minus mobile-station height
    double dh_tx_m = 0.0; ///< transmitter antenna height minus rooftop height

    /// Throws DomainError when a field violates its range; phi must lie in [0, 55].
    void validate() const;

    bool operator==(const Terrain &) const = default;
};

enum class ModelKind
{
    CwiMetro,    // COST231 Walfisch-Ikegami, metropolitan
    CwiSuburban, // COST231 Walfisch-Ikegami, suburban
    ItwiMetro,   // ITU-R Walfisch-Ikegami, metropolitan
    ItwiSuburban,
    WalfischBertoni,
};

inline constexpr std::array<ModelKind, 5> kAllModelKinds = {
    ModelKind::CwiMetro, ModelKind::CwiSuburban, ModelKind::ItwiMetro, ModelKind::ItwiSuburban,
    ModelKind::WalfischBertoni};

enum class Family
{
    Cost,
    Itu,
};

enum class Density
{
    Metro,
    Suburban,
};

/// Canonical names: CWI-M, CWI-SU, ITWI-M, ITWI-SU, W-BERT.
std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept;

bool is_walfisch_bertoni(ModelKind kind) noexcept;

/// Family and density of a Walfisch-Ikegami variant. Throws std::invalid_argument for W-BERT.
Family family_of(ModelKind kind);
Density density_of(ModelKind kind);

/// Upper distance bound of the Walfisch-Bertoni model, sqrt(17 * dh_tx) km (exclusive).
double wb_distance_limit_km(const Terrain &t);

/// True if d_km lies in the open domain of the given model for this terrain.
bool in_domain(ModelKind kind, const Terrain &t, double d_km) noexcept;

// Component losses. All results in dB.

/// 32.4 + 20 log10(d) + 20 log10(f).
double free_space_loss(double d_km, double f_mhz);

/// Roof-top-to-street diffraction and scatter loss, including the street
/// orientation term. Orientation ranges are [0, 35) and [35, 55].
double rooftop_to_street_loss(const Terrain &t, Family family);

/// Street orientation correction alone (the last term of the rooftop loss).
double orientation_loss(double phi_deg);

/// Leading constant of the rooftop loss: -16.9 (COST231) or -8.2 (ITU-R).
double rooftop_constant(Family family) noexcept;

/// k_a: 54, or 71.4 for the ITU-R family above 2 GHz.
double multiscreen_ka(double f_mhz, Family family) noexcept;

/// k_f: 1.5 (metro) or 0.7 (suburban) times (f/925 - 1), minus 4; -8 for ITU-R above 2 GHz.
double multiscreen_kf(double f_mhz, Density density, Family family) noexcept;

/// Multiscreen diffraction loss for a transmitter above the rooftops.
double multiscreen_loss(const Terrain &t, double d_km, Density density, Family family);

/// Building-geometry term A of the Walfisch-Bertoni excess loss; the arc
/// tangent is taken in degrees.
double wb_building_geometry(const Terrain &t);

/// Walfisch-Bertoni excess loss. Throws CurvatureDomainError when d^2 >= 17 * dh_tx.
double wb_excess_loss(const Terrain &t, double d_km);

/// Nominal (uncalibrated) prediction of a model variant.
double predict_basic(ModelKind kind, const Terrain &t, double d_km);

} // namespace wqmm

#endif
