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

// Test-only reference computations. Nothing here calls into the SVD path of
// the library: ranks come from pivoted Gram-Schmidt and least-squares fits from
// long-double normal equations on an explicitly chosen independent column set.

#ifndef WQMM_TESTS_ORACLES_HPP
#define WQMM_TESTS_ORACLES_HPP

#include "wqmm/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace wqmm::oracle
{

using Column = std::vector<long double>;

/// Indices of a maximal independent column subset, greedily chosen by largest
/// remaining norm (pivoted modified Gram-Schmidt). A column counts as
/// independent if its residual norm exceeds rel_tol times the largest column norm.
inline std::vector<std::size_t> independent_columns(const std::vector<Column> &cols, long double rel_tol)
{
    long double max_norm = 0.0L;
    for (const auto &c : cols)
    {
        long double s = 0.0L;
        for (long double v : c)
            s += v * v;
        max_norm = std::max(max_norm, std::sqrt(s));
    }
    std::vector<Column> work = cols;
    std::vector<bool> used(cols.size(), false);
    std::vector<std::size_t> picked;
    while (true)
    {
        std::size_t best = cols.size();
        long double best_norm = 0.0L;
        for (std::size_t j = 0; j < work.size(); ++j)
        {
            if (used[j])
                continue;
            long double s = 0.0L;
            for (long double v : work[j])
                s += v * v;
            if (std::sqrt(s) > best_norm)
            {
                best_norm = std::sqrt(s);
                best = j;
            }
        }
        if (best == cols.size() || best_norm <= rel_tol * max_norm)
            break;
        used[best] = true;
        picked.push_back(best);
        Column q = work[best];
        for (auto &v : q)
            v /= best_norm;
        for (std::size_t j = 0; j < work.size(); ++j)
        {
            if (used[j])
                continue;
            long double dot = 0.0L;
            for (std::size_t k = 0; k < q.size(); ++k)
                dot += q[k] * work[j][k];
            for (std::size_t k = 0; k < q.size(); ++k)
                work[j][k] -= dot * q[k];
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

inline std::size_t column_rank(const std::vector<Column> &cols, long double rel_tol)
{
    return independent_columns(cols, rel_tol).size();
}

/// Gaussian elimination with partial pivoting.
inline std::vector<long double> solve_dense(std::vector<std::vector<long double>> a, std::vector<long double> b)
{
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t p = i;
        for (std::size_t r = i + 1; r < n; ++r)
            if (std::fabs(a[r][i]) > std::fabs(a[p][i]))
                p = r;
        if (a[p][i] == 0.0L)
            throw std::runtime_error("singular system");
        std::swap(a[i], a[p]);
        std::swap(b[i], b[p]);
        for (std::size_t r = i + 1; r < n; ++r)
        {
            const long double f = a[r][i] / a[i][i];
            for (std::size_t c = i; c < n; ++c)
                a[r][c] -= f * a[i][c];
            b[r] -= f * b[i];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t i = n; i-- > 0;)
    {
        long double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Least-squares fitted values of `target` on span(cols), via the normal
/// equations of an independent column subset.
inline std::vector<double> fitted_values(const std::vector<Column> &cols, const std::vector<double> &target,
                                         long double rel_tol = 1e-12L)
{
    const auto idx = independent_columns(cols, rel_tol);
    const std::size_t r = idx.size();
    std::vector<std::vector<long double>> gram(r, std::vector<long double>(r, 0.0L));
    std::vector<long double> rhs(r, 0.0L);
    for (std::size_t i = 0; i < r; ++i)
    {
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < target.size(); ++k)
                gram[i][j] += cols[idx[i]][k] * cols[idx[j]][k];
        for (std::size_t k = 0; k < target.size(); ++k)
            rhs[i] += cols[idx[i]][k] * static_cast<long double>(target[k]);
    }
    const auto coef = solve_dense(gram, rhs);
    std::vector<double> fit(target.size(), 0.0);
    for (std::size_t k = 0; k < target.size(); ++k)
    {
        long double s = 0.0L;
        for (std::size_t i = 0; i < r; ++i)
            s += coef[i] * cols[idx[i]][k];
        fit[k] = static_cast<double>(s);
    }
    return fit;
}

/// Columns {1, log10 d} and, optionally, log10(1 - d^2 / (17 dh_tx)): the
/// spans any Walfisch-Ikegami / Walfisch-Bertoni combination reduces to for fixed terrain.
inline std::vector<Column> reduced_span(const std::vector<double> &d_km, bool with_curvature, double dh_tx_m = 1.0)
{
    std::vector<Column> cols(with_curvature ? 3 : 2, Column(d_km.size()));
    for (std::size_t k = 0; k < d_km.size(); ++k)
    {
        const long double d = d_km[k];
        cols[0][k] = 1.0L;
        cols[1][k] = std::log10(d);
        if (with_curvature)
            cols[2][k] = std::log10(1.0L - d * d / (17.0L * dh_tx_m));
    }
    return cols;
}

inline double rms(const std::vector<double> &a, const std::vector<double> &b)
{
    long double s = 0.0L;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += static_cast<long double>(a[k] - b[k]) * (a[k] - b[k]);
    return static_cast<double>(std::sqrt(s / a.size()));
}

// Direct-arithmetic component formulas, written out independently of the library.

inline double free_space(double d_km, double f_mhz)
{
    return 32.4 + 20.0 * std::log10(d_km) + 20.0 * std::log10(f_mhz);
}

inline double wb_total(const Terrain &t, double d)
{
    const double angle = std::atan(2.0 * t.dh_rx_m / t.b_m) * 180.0 / std::numbers::pi;
    const double a = 5.0 * std::log10(t.b_m * t.b_m / 4.0 + t.dh_rx_m * t.dh_rx_m) - 9.0 * std::log10(t.b_m) +
                     20.0 * std::log10(angle);
    return free_space(d, t.f_mhz) + 57.1 + std::log10(t.f_mhz) + 18.0 * std::log10(d) -
           18.0 * std::log10(t.dh_tx_m) - 18.0 * std::log10(1.0 - d * d / (17.0 * t.dh_tx_m)) + a;
}

/// A randomized measurement campaign inside every model's domain.
struct RandomCampaign
{
    Terrain terrain;
    std::vector<double> d_km;
    std::vector<double> pathloss_db;
};

inline Terrain random_terrain(std::mt19937_64 &rng, double f_min = 150.0, double f_max = 3500.0)
{
    std::uniform_real_distribution<double> f(f_min, f_max), w(5.0, 40.0), b(10.0, 80.0), phi(0.0, 55.0),
        rx(2.0, 30.0), tx(2.0, 60.0);
    return {f(rng), w(rng), b(rng), phi(rng), rx(rng), tx(rng)};
}

/// 30-300 distances spread over (0.05 km, 0.95 * min(5 km, curvature limit)),
/// measurements = smooth trend + Gaussian noise.
inline RandomCampaign random_campaign(std::mt19937_64 &rng, double f_min = 150.0, double f_max = 3500.0)
{
    RandomCampaign c;
    c.terrain = random_terrain(rng, f_min, f_max);
    const double d_hi = 0.95 * std::min(5.0, std::sqrt(17.0 * c.terrain.dh_tx_m));
    std::uniform_int_distribution<int> count(30, 300);
    std::uniform_real_distribution<double> dist(0.05, d_hi), a(90.0, 140.0), slope(20.0, 45.0), bend(-3.0, 3.0),
        sigma(1.0, 8.0);
    const double a0 = a(rng), s = slope(rng), q = bend(rng), sg = sigma(rng);
    std::normal_distribution<double> noise(0.0, sg);
    const int n = count(rng);
    for (int k = 0; k < n; ++k)
    {
        const double d = dist(rng);
        c.d_km.push_back(d);
        c.pathloss_db.push_back(std::max(1.0, a0 + s * std::log10(d) + q * d * d + noise(rng)));
    }
    return c;
}

} // namespace wqmm::oracle

#endif
