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

// wqmm: calibrate Walfisch-Ikegami / Walfisch-Bertoni pathloss models against
// drive-test measurements.
//
//   wqmm calibrate --config campaign.cfg [--measurements m.csv] [--out dir]
//   wqmm predict   --config campaign.cfg (--model CWI-M | --coefficients coefficients_CWI-M.csv)
//   wqmm rank      --config campaign.cfg [--measurements m.csv] [--model W-BERT] [--tol 1e-10]

#include "wqmm/basis.hpp"
#include "wqmm/calib.hpp"
#include "wqmm/campaign.hpp"
#include "wqmm/io.hpp"
#include "wqmm/models.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace
{

std::filesystem::path pick(const std::string &flag, const std::filesystem::path &from_config, const char *what)
{
    if (!flag.empty())
        return flag;
    if (!from_config.empty())
        return from_config;
    throw std::runtime_error(std::string("no ") + what + " given (use the flag or the config key)");
}

int run_calibrate(const std::string &config_path, const std::string &meas_path, const std::string &out_path)
{
    const wqmm::CampaignConfig cfg = wqmm::load_config(config_path);
    const wqmm::MeasurementSet meas = wqmm::load_measurements(pick(meas_path, cfg.measurements, "measurement file"));
    const std::filesystem::path out = out_path.empty() && cfg.output_dir.empty() ? std::filesystem::path(".")
                                                                                  : pick(out_path, cfg.output_dir, "");

    const wqmm::CampaignResult result = wqmm::run_calibration(cfg, meas, out, &std::cerr);
    for (const auto &o : result.outcomes)
        if (o.ok())
            std::cout << wqmm::to_string(o.kind) << ": rank " << o.calibration->rank() << ", RMSE "
                      << wqmm::format_fixed(o.calibrated.rmse_db) << " dB (basic " << wqmm::format_fixed(o.basic.rmse_db)
                      << " dB), MPE " << wqmm::format_fixed(o.calibrated.mpe_db) << " dB\n";
    std::cout << "wrote " << result.files.size() << " files to " << out.string() << '\n';
    return result.all_ok() ? EXIT_SUCCESS : 2;
}

int run_predict(const std::string &config_path, const std::string &model, const std::string &coeff_path,
                const std::string &output_path)
{
    const wqmm::CampaignConfig cfg = wqmm::load_config(config_path);

    std::optional<wqmm::Calibration> cal;
    wqmm::ModelKind kind{};
    if (!coeff_path.empty())
    {
        const wqmm::SavedCoefficients saved = wqmm::load_coefficients(coeff_path);
        kind = saved.kind;
        cal.emplace(wqmm::build_basis(kind, cfg.terrain), saved.coefficients, saved.rank, saved.rank_tol);
    }
    else
    {
        const auto parsed = wqmm::parse_model_kind(model);
        if (!parsed)
            throw std::runtime_error("unknown model '" + model + "'");
        kind = *parsed;
    }

    std::ofstream file;
    if (!output_path.empty())
    {
        file.open(output_path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + output_path);
    }
    std::ostream &out = output_path.empty() ? std::cout : file;

    out << "distance_km,pathloss_db\n";
    for (double d : wqmm::prediction_grid(cfg.d_min_km, cfg.d_max_km, cfg.d_step_km))
    {
        if (!wqmm::in_domain(kind, cfg.terrain, d))
        {
            std::cerr << "warning: " << wqmm::to_string(kind) << ": grid truncated at curvature limit "
                      << wqmm::format_fixed(wqmm::wb_distance_limit_km(cfg.terrain)) << " km\n";
            break;
        }
        const double value = cal ? wqmm::predict_calibrated(*cal, d) : wqmm::predict_basic(kind, cfg.terrain, d);
        out << wqmm::format_exact(d) << ',' << wqmm::format_fixed(value) << '\n';
    }
    return EXIT_SUCCESS;
}

int run_rank(const std::string &config_path, const std::string &meas_path, const std::string &model,
             std::optional<double> tol)
{
    const wqmm::CampaignConfig cfg = wqmm::load_config(config_path);

    std::vector<double> distances;
    if (!meas_path.empty() || !cfg.measurements.empty())
        distances = wqmm::load_measurements(pick(meas_path, cfg.measurements, "")).distances_km();
    else
        distances = wqmm::prediction_grid(cfg.d_min_km, cfg.d_max_km, cfg.d_step_km);

    std::vector<wqmm::ModelKind> kinds = cfg.models;
    if (!model.empty())
    {
        const auto parsed = wqmm::parse_model_kind(model);
        if (!parsed)
            throw std::runtime_error("unknown model '" + model + "'");
        kinds = {*parsed};
    }

    const double rank_tol = tol.value_or(cfg.rank_tol);
    int status = EXIT_SUCCESS;
    std::cout << "model,samples,basis_size,rank,rank_tol\n";
    for (wqmm::ModelKind kind : kinds)
    {
        try
        {
            const wqmm::BasisSet basis = wqmm::build_basis(kind, cfg.terrain);
            const wqmm::DesignMatrix m = wqmm::design_matrix(basis, distances);
            std::cout << wqmm::to_string(kind) << ',' << m.rows() << ',' << basis.size() << ','
                      << wqmm::effective_rank(m, rank_tol) << ',' << wqmm::format_exact(rank_tol) << '\n';
        }
        catch (const std::exception &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            status = 2;
        }
    }
    return status;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Measurement calibration of Walfisch-type urban pathloss models"};
    app.require_subcommand(1);

    std::string config_path;
    std::string meas_path;
    std::string out_path;
    std::string model;
    std::string coeff_path;
    std::string output_path;
    std::optional<double> tol;

    auto *calibrate = app.add_subcommand("calibrate", "Calibrate the configured models and write report tables");
    calibrate->add_option("-c,--config", config_path, "Campaign config file")->required()->check(CLI::ExistingFile);
    calibrate->add_option("-m,--measurements", meas_path, "Measurement CSV (overrides config)");
    calibrate->add_option("-o,--out", out_path, "Output directory (overrides config)");

    auto *predict = app.add_subcommand("predict", "Evaluate a basic or saved calibrated model on the config grid");
    predict->add_option("-c,--config", config_path, "Campaign config file")->required()->check(CLI::ExistingFile);
    auto *model_opt = predict->add_option("--model", model, "Basic model to evaluate (CWI-M, CWI-SU, ITWI-M, ITWI-SU, W-BERT)");
    auto *coeff_opt = predict->add_option("--coefficients", coeff_path, "coefficients_<MODEL>.csv from a calibrate run")
                          ->check(CLI::ExistingFile);
    model_opt->excludes(coeff_opt);
    predict->add_option("-o,--output", output_path, "Write CSV here instead of stdout");

    auto *rank = app.add_subcommand("rank", "Print the effective rank of each model's design matrix");
    rank->add_option("-c,--config", config_path, "Campaign config file")->required()->check(CLI::ExistingFile);
    rank->add_option("-m,--measurements", meas_path, "Measurement CSV (default: config, else prediction grid)");
    rank->add_option("--model", model, "Restrict to one model");
    rank->add_option("--tol", tol, "Relative singular-value threshold");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*calibrate)
            return run_calibrate(config_path, meas_path, out_path);
        if (*predict)
        {
            if (model.empty() && coeff_path.empty())
                throw std::runtime_error("predict needs --model or --coefficients");
            return run_predict(config_path, model, coeff_path, output_path);
        }
        if (*rank)
            return run_rank(config_path, meas_path, model, tol);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
    return EXIT_FAILURE;
}
