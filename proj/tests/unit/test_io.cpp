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
#include "wqmm/errors.hpp"
#include "wqmm/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace wqmm;

namespace
{

MeasurementSet parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_measurements(in, "test.csv");
}

std::size_t error_line(const std::string &text)
{
    try
    {
        (void)parse(text);
    }
    catch (const ParseError &e)
    {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(LoadMeasurements, SingleRow)
{
    const MeasurementSet m = parse("distance_km,pathloss_db\n1.0,120.5");
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.samples[0], (Sample{1.0, 120.5}));
}

TEST(LoadMeasurements, KeepsFileOrderAndToleratesWhitespace)
{
    const MeasurementSet m = parse("distance_km,pathloss_db\r\n 2.5 , 131.25\r\n\n0.4,108\r\n1e0,+115.5\n");
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m.distances_km(), (std::vector<double>{2.5, 0.4, 1.0}));
    EXPECT_EQ(m.pathloss_db(), (std::vector<double>{131.25, 108.0, 115.5}));
}

TEST(LoadMeasurements, Errors)
{
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("distance_km,pathloss_db\n"), ParseError);
    EXPECT_THROW(parse("distance,pathloss\n1,100\n"), ParseError);
    EXPECT_EQ(error_line("distance,pathloss\n1,100\n"), 1u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n0.0,100\n"), 2u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1,100\n-2,100\n"), 3u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1,abc\n"), 2u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1,100,3\n"), 2u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1.5x,100\n"), 2u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1,nan\n"), 2u);
    EXPECT_EQ(error_line("distance_km,pathloss_db\n1,1000\n2,1.000,5\n"), 3u);
}

TEST(LoadMeasurements, MissingFile)
{
    EXPECT_THROW(load_measurements("/nonexistent/measurements.csv"), std::runtime_error);
}

TEST(WriteMeasurements, RoundTripIsExact)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> d(1e-3, 40.0), p(40.0, 200.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        MeasurementSet m;
        for (int k = 0; k < 1 + trial * 7; ++k)
            m.samples.push_back({d(rng), p(rng)});
        std::ostringstream out;
        write_measurements(out, m);
        const MeasurementSet back = parse(out.str());
        EXPECT_EQ(back.samples, m.samples);
    }
}

TEST(Formatting, FixedAndExact)
{
    EXPECT_EQ(format_fixed(91.48485018878650), "91.4849");
    EXPECT_EQ(format_fixed(-1e-12), "0.0000");
    EXPECT_EQ(format_fixed(-0.0), "0.0000");
    EXPECT_EQ(format_fixed(-0.00006), "-0.0001");
    EXPECT_EQ(format_fixed(57.993368, 2), "57.99");
    EXPECT_EQ(format_exact(0.1), "0.1");
    double x = 0.0;
    EXPECT_TRUE(parse_double(format_exact(1.0 / 3.0), x));
    EXPECT_EQ(x, 1.0 / 3.0);
    EXPECT_FALSE(parse_double("1.0.0", x));
    EXPECT_FALSE(parse_double("", x));
}

TEST(Coefficients, RoundTrip)
{
    const Terrain t{900.0, 20.0, 24.0, 30.0, 12.0, 10.0};
    MeasurementSet m;
    for (int k = 1; k <= 20; ++k)
        m.samples.push_back({0.25 * k, 100.0 + 33.0 * std::log10(0.25 * k) + (k % 3)});
    for (ModelKind kind : kAllModelKinds)
    {
        const Calibration c = calibrate(kind, t, m);
        std::ostringstream out;
        write_coefficients(out, c);
        std::istringstream in(out.str());
        const SavedCoefficients saved = parse_coefficients(in);
        EXPECT_EQ(saved.kind, kind);
        EXPECT_EQ(saved.rank, c.rank());
        EXPECT_EQ(saved.rank_tol, c.rank_tolerance());
        EXPECT_EQ(saved.coefficients, c.coefficients());
    }
}

TEST(Coefficients, Errors)
{
    auto parse_coeffs = [](const std::string &text) {
        std::istringstream in(text);
        return parse_coefficients(in, "c.csv");
    };
    EXPECT_THROW(parse_coeffs("index,group,label,alpha\n0,FSP,x,1\n"), ParseError);
    EXPECT_THROW(parse_coeffs("# model = FOO\n"), ParseError);
    EXPECT_THROW(parse_coeffs("# model = W-BERT\nindex,group,label,alpha\n0,CORE,89.5,1\n"), ParseError);
    EXPECT_THROW(parse_coeffs("# model = W-BERT\nindex,group,label,alpha\n1,CORE,89.5,1\n"), ParseError);
}
