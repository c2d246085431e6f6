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
#include "wqmm/calib.hpp"
#include "wqmm/models.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace
{

const wqmm::Terrain kTerrain{900.0, 20.0, 40.0, 30.0, 12.0, 15.0};

wqmm::MeasurementSet synthetic(std::size_t n)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(0.05, 5.0);
    std::normal_distribution<double> noise(0.0, 6.0);
    wqmm::MeasurementSet m;
    for (std::size_t k = 0; k < n; ++k)
    {
        const double x = d(rng);
        m.samples.push_back({x, 120.0 + 35.0 * std::log10(x) + noise(rng)});
    }
    return m;
}

void BM_PredictBasic(benchmark::State &state)
{
    const auto kind = static_cast<wqmm::ModelKind>(state.range(0));
    double d = 0.1;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(wqmm::predict_basic(kind, kTerrain, d));
        d = d < 4.0 ? d + 0.01 : 0.1;
    }
    state.SetLabel(std::string(wqmm::to_string(kind)));
}
BENCHMARK(BM_PredictBasic)->DenseRange(0, 4);

void BM_DesignMatrixRank(benchmark::State &state)
{
    const auto meas = synthetic(static_cast<std::size_t>(state.range(0)));
    const auto basis = wqmm::build_basis(wqmm::ModelKind::CwiMetro, kTerrain);
    const auto d = meas.distances_km();
    for (auto _ : state)
    {
        const auto m = wqmm::design_matrix(basis, d);
        benchmark::DoNotOptimize(wqmm::effective_rank(m));
    }
}
BENCHMARK(BM_DesignMatrixRank)->RangeMultiplier(4)->Range(16, 4096);

void BM_Calibrate(benchmark::State &state)
{
    const auto kind = static_cast<wqmm::ModelKind>(state.range(0));
    const auto meas = synthetic(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wqmm::calibrate(kind, kTerrain, meas));
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.SetLabel(std::string(wqmm::to_string(kind)));
}
BENCHMARK(BM_Calibrate)->ArgsProduct({{0, 4}, {30, 300, 3000}});

} // namespace

BENCHMARK_MAIN();
