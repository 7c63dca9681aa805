// Copyright 2026 The qmcmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Experiment configuration and the runner behind the `qmcmc` command line
 * tool. Configuration files are flat `key = value` text ('#' starts a
 * comment); the keys are the ones accepted by apply_setting().
 */

#pragma once

#include "qmcmc/mcmc.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qmcmc {

enum class Mode { qmcmc, dqw, rw, mh, sweep };

[[nodiscard]] std::string_view to_string(Mode mode);

/// Invalid configuration. what() carries "source:line: message" when the
/// problem comes from a file.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Mode mode = Mode::qmcmc;

    // target and grid
    std::string target = "N(0,1)";
    double x_min = -5.0;
    double x_max = 5.0;
    int n_x = 4;

    // circuit
    int n_a = 1;
    int n_acc = 4;
    double epsilon = 1e-4;
    std::size_t max_iters = 100000;
    std::size_t store_stride = 0;
    bool oracle_check = false;
    std::size_t oracle_iters = 3;

    // Metropolis-Hastings
    std::size_t k = 16;
    std::optional<double> sigma;
    std::size_t iters = 100000;
    std::uint64_t seed = 1;
    double burn_in_fraction = 0.1;
    std::size_t thinning = 10;
    AcceptanceMode acceptance_mode = AcceptanceMode::metropolis;

    // walks
    double theta = 0.7853981633974483;
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    std::size_t steps = 100;
    char init_coin = 'H';
    double p_right = 0.5;

    // sweep
    Mode sweep_mode = Mode::qmcmc;
    std::string sweep_param;
    std::vector<std::string> sweep_values;

    std::filesystem::path output_dir = "qmcmc_out";
};

/// Sets one key from its text form. Accepts the aliases nx, na, nacc, eps,
/// range ("lo hi") and gauss (Gauss-K proposal). Throws ConfigError.
void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &value);

/// Reads `key = value` lines into cfg. Errors name the file and line.
void load_config_file(const std::filesystem::path &path, ExperimentConfig &cfg);
void load_config_text(const std::string &text, const std::string &source, ExperimentConfig &cfg);

/// Checks the fields the selected mode needs. Throws ConfigError.
void validate(const ExperimentConfig &cfg);

/// Config echo written into summary.json.
[[nodiscard]] nlohmann::json to_json(const ExperimentConfig &cfg);

/**
 * Validates, runs and writes the mode's output files into cfg.output_dir.
 * Returns the summary that was written to summary.json.
 */
nlohmann::json run_experiment(const ExperimentConfig &cfg);

/// Round-trip decimal form with 17 significant digits.
[[nodiscard]] std::string format_double(double v);

} // namespace qmcmc
