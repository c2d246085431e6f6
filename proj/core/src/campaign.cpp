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

#include "wqmm/campaign.hpp"

#include "wqmm/errors.hpp"
#include "wqmm/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace wqmm
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

const std::set<std::string, std::less<>> kNumericKeys = {
    "f_mhz", "w_m", "b_m", "phi_deg", "dh_rx_m", "dh_tx_m", "d_min_km", "d_max_km", "d_step_km", "rank_tol"};
const std::set<std::string, std::less<>> kRequiredKeys = {
    "f_mhz", "w_m", "b_m", "phi_deg", "dh_rx_m", "dh_tx_m", "models", "d_min_km", "d_max_km", "d_step_km"};

void write_file(const std::filesystem::path &path, const std::string &content, std::vector<std::filesystem::path> &files)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
    files.push_back(path);
}

} // namespace

void CampaignConfig::validate() const
{
    terrain.validate();
    if (models.empty())
        throw std::invalid_argument("at least one model is required");
    if (!std::isfinite(d_min_km) || !std::isfinite(d_max_km) || !std::isfinite(d_step_km) || d_min_km <= 0.0 ||
        d_max_km < d_min_km || d_step_km <= 0.0)
        throw std::invalid_argument("prediction grid needs 0 < d_min_km <= d_max_km and d_step_km > 0");
    if (!(rank_tol > 0.0) || rank_tol >= 1.0)
        throw std::invalid_argument("rank_tol must lie in (0, 1)");
}

CampaignConfig parse_config(std::istream &in, const std::string &source, const std::filesystem::path &base_dir)
{
    std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(source, line_no, "expected 'key = value'");
        const std::string key(trim(text.substr(0, eq)));
        const std::string value(trim(text.substr(eq + 1)));
        if (key.empty())
            throw ParseError(source, line_no, "empty key");
        if (!kRequiredKeys.contains(key) && !kNumericKeys.contains(key) && key != "measurements" &&
            key != "output_dir")
            throw ParseError(source, line_no, "unknown key '" + key + "'");
        if (!entries.emplace(key, std::make_pair(value, line_no)).second)
            throw ParseError(source, line_no, "duplicate key '" + key + "'");
    }
    for (const auto &key : kRequiredKeys)
        if (!entries.contains(key))
            throw ParseError(source, line_no, "missing required key '" + key + "'");

    auto number = [&](std::string_view key) {
        const auto &[value, at] = entries.find(key)->second;
        double x = 0.0;
        if (!parse_double(value, x))
            throw ParseError(source, at, "key '" + std::string(key) + "' needs a number, got '" + value + "'");
        return x;
    };

    CampaignConfig cfg;
    cfg.terrain.f_mhz = number("f_mhz");
    cfg.terrain.w_m = number("w_m");
    cfg.terrain.b_m = number("b_m");
    cfg.terrain.phi_deg = number("phi_deg");
    cfg.terrain.dh_rx_m = number("dh_rx_m");
    cfg.terrain.dh_tx_m = number("dh_tx_m");
    cfg.d_min_km = number("d_min_km");
    cfg.d_max_km = number("d_max_km");
    cfg.d_step_km = number("d_step_km");
    if (entries.contains("rank_tol"))
        cfg.rank_tol = number("rank_tol");

    const auto &[models, models_line] = entries.find("models")->second;
    std::stringstream list(models);
    std::string item;
    while (std::getline(list, item, ','))
    {
        const auto name = trim(item);
        const auto kind = parse_model_kind(name);
        if (!kind)
            throw ParseError(source, models_line, "unknown model '" + std::string(name) + "'");
        if (std::find(cfg.models.begin(), cfg.models.end(), *kind) != cfg.models.end())
            throw ParseError(source, models_line, "model '" + std::string(name) + "' listed twice");
        cfg.models.push_back(*kind);
    }

    if (auto it = entries.find("measurements"); it != entries.end())
        cfg.measurements = base_dir / it->second.first;
    if (auto it = entries.find("output_dir"); it != entries.end())
        cfg.output_dir = base_dir / it->second.first;

    try
    {
        cfg.validate();
    }
    catch (const std::exception &e)
    {
        throw ParseError(source, line_no, e.what());
    }
    return cfg;
}

CampaignConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return parse_config(in, path.string(), path.parent_path());
}

std::vector<double> prediction_grid(double d_min_km, double d_max_km, double d_step_km)
{
    if (!(d_min_km > 0.0) || !(d_step_km > 0.0) || !(d_max_km >= d_min_km))
        throw std::invalid_argument("invalid prediction grid");
    const auto steps = static_cast<std::size_t>(std::floor((d_max_km - d_min_km) / d_step_km + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        grid.push_back(d_min_km + static_cast<double>(k) * d_step_km);
    return grid;
}

ModelOutcome calibrate_model(ModelKind kind, const CampaignConfig &config, const MeasurementSet &meas)
{
    ModelOutcome outcome;
    outcome.kind = kind;
    try
    {
        Calibration cal = calibrate(kind, config.terrain, meas, config.rank_tol);

        std::vector<double> basic;
        basic.reserve(meas.size());
        for (double d : cal.distances_km())
            basic.push_back(predict_basic(kind, config.terrain, d));
        outcome.basic = evaluate(basic, cal.measured_db());
        outcome.calibrated = evaluate(cal.fitted_db(), cal.measured_db(), std::span<const double>(basic));

        for (double d : prediction_grid(config.d_min_km, config.d_max_km, config.d_step_km))
            if (in_domain(kind, config.terrain, d))
                outcome.grid_km.push_back(d);
            else
            {
                std::ostringstream msg;
                msg << to_string(kind) << ": prediction grid truncated at " << format_fixed(outcome.grid_km.empty() ? 0.0 : outcome.grid_km.back())
                    << " km (curvature limit " << format_fixed(wb_distance_limit_km(config.terrain)) << " km)";
                outcome.warnings.push_back(msg.str());
                break;
            }
        outcome.calibration = std::move(cal);
    }
    catch (const std::exception &e)
    {
        outcome.calibration.reset();
        outcome.error = std::string(to_string(kind)) + ": " + e.what();
    }
    return outcome;
}

bool CampaignResult::all_ok() const noexcept
{
    return std::all_of(outcomes.begin(), outcomes.end(), [](const ModelOutcome &o) { return o.ok(); });
}

void write_summary(std::ostream &out, const std::vector<ModelOutcome> &outcomes)
{
    out << "model,status,rank,basis_size,basic_rmse_db,basic_mpe_db,calibrated_rmse_db,calibrated_mpe_db,"
           "improvement_pct\n";
    for (const ModelOutcome &o : outcomes)
    {
        out << to_string(o.kind) << ',';
        if (!o.ok())
        {
            out << "failed,,,,,,,\n";
            continue;
        }
        out << "ok," << o.calibration->rank() << ',' << o.calibration->basis().size() << ','
            << format_fixed(o.basic.rmse_db) << ',' << format_fixed(o.basic.mpe_db) << ','
            << format_fixed(o.calibrated.rmse_db) << ',' << format_fixed(o.calibrated.mpe_db) << ','
            << (o.calibrated.improvement_pct ? format_fixed(*o.calibrated.improvement_pct, 2) : std::string())
            << '\n';
    }
}

void write_profile(std::ostream &out, const ModelOutcome &outcome)
{
    if (!outcome.ok())
        throw std::invalid_argument("no calibration to profile");
    const Calibration &cal = *outcome.calibration;

    struct Row
    {
        double d_km;
        std::optional<double> measured;
    };
    std::vector<Row> rows;
    for (std::size_t k = 0; k < cal.distances_km().size(); ++k)
        rows.push_back({cal.distances_km()[k], cal.measured_db()[k]});
    const std::set<double> measured_at(cal.distances_km().begin(), cal.distances_km().end());
    for (double d : outcome.grid_km)
        if (!measured_at.contains(d))
            rows.push_back({d, std::nullopt});
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) { return a.d_km < b.d_km; });

    out << "distance_km,measured_db,basic_db,calibrated_db\n";
    for (const Row &row : rows)
    {
        out << format_exact(row.d_km) << ',' << (row.measured ? format_fixed(*row.measured) : std::string()) << ','
            << format_fixed(predict_basic(cal.kind(), cal.terrain(), row.d_km)) << ','
            << format_fixed(predict_calibrated(cal, row.d_km)) << '\n';
    }
}

void write_disaggregation(std::ostream &out, const DisaggregationProfile &profile)
{
    out << "distance_km";
    for (Group g : profile.groups)
        out << ",basic_" << to_string(g) << "_db";
    out << ",basic_net_db";
    for (Group g : profile.groups)
        out << ",calibrated_" << to_string(g) << "_db";
    out << ",calibrated_net_db\n";
    for (std::size_t k = 0; k < profile.distances_km.size(); ++k)
    {
        out << format_exact(profile.distances_km[k]);
        for (std::size_t g = 0; g < profile.groups.size(); ++g)
            out << ',' << format_fixed(profile.basic[g][k]);
        out << ',' << format_fixed(profile.net_basic[k]);
        for (std::size_t g = 0; g < profile.groups.size(); ++g)
            out << ',' << format_fixed(profile.calibrated[g][k]);
        out << ',' << format_fixed(profile.net_calibrated[k]) << '\n';
    }
}

CampaignResult run_calibration(const CampaignConfig &config, const MeasurementSet &meas,
                               const std::filesystem::path &output_dir, std::ostream *log)
{
    config.validate();
    meas.validate();

    std::vector<std::future<ModelOutcome>> pending;
    pending.reserve(config.models.size());
    for (ModelKind kind : config.models)
        pending.push_back(std::async(std::launch::async, [kind, &config, &meas] {
            return calibrate_model(kind, config, meas);
        }));

    CampaignResult result;
    for (auto &f : pending)
        result.outcomes.push_back(f.get());

    std::filesystem::create_directories(output_dir);
    for (const ModelOutcome &o : result.outcomes)
    {
        if (log)
        {
            for (const auto &w : o.warnings)
                *log << "warning: " << w << '\n';
            if (!o.ok())
                *log << "error: " << o.error << '\n';
        }
        if (!o.ok())
            continue;
        const std::string name(to_string(o.kind));

        std::ostringstream profile;
        write_profile(profile, o);
        write_file(output_dir / ("profile_" + name + ".csv"), profile.str(), result.files);

        std::ostringstream disagg;
        write_disaggregation(disagg, disaggregate(*o.calibration, o.grid_km));
        write_file(output_dir / ("disagg_" + name + ".csv"), disagg.str(), result.files);

        std::ostringstream coeffs;
        write_coefficients(coeffs, *o.calibration);
        write_file(output_dir / ("coefficients_" + name + ".csv"), coeffs.str(), result.files);
    }

    std::ostringstream summary;
    write_summary(summary, result.outcomes);
    write_file(output_dir / "summary.csv", summary.str(), result.files);
    return result;
}

} // namespace wqmm
