// SPDX-License-Identifier: Apache-2.0
//
// eigsense - eigenvalue-based spectrum sensing under correlated noise
// Copyright (C) 2026 The eigsense authors
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

#pragma once

#include "eigsense/correlation_model.hpp"
#include "eigsense/matrix_sim.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eigsense
{

// All parameters of one CLI run. Text form: one `key = value` per line, `#` starts a comment, lists are
// comma separated and accept ranges `lo..hi` or `lo..hi:step`.
struct ExperimentConfig
{
    std::string experiment = "support"; // support | density | mc-sense | lookup | estimate | mse

    double beta = 1.0;                       // N / M for the limiting laws
    std::optional<double> mu;                // overrides rho / scn where a correlation strength is needed
    std::vector<double> rho{0.0};            // support rows, mc-sense correlation (first value, or the rho sweep)
    std::vector<double> scn{1.5, 2.0, 2.5};  // lookup / mse slices; first value for density and estimate
    std::vector<double> snr_db = range_values(-10.0, 2.0, 1.0);

    int M = 10; // mc-sense dimensions
    int N = 60;
    double epsilon = 3.5;                        // fractional-sampling slope
    std::vector<int> M_range{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    std::string sweep = "snr";                   // mc-sense: snr | rho | fs
    SignalCase signal_case = SignalCase::case1;
    CovarianceModel covariance_model = CovarianceModel::independent_sum;

    std::string regime = "sig-white"; // density: mp | noise-corr | sig-white | sig-corr
    int points = 2000;
    double y_offset = 1e-6;
    double density_floor = 1e-4;
    bool simulate = false;
    int bins = 60;
    int density_n = 50;

    std::optional<double> lmax;        // estimate; simulated from one trial when absent
    std::vector<double> table_snr_db = range_values(-15.0, 15.0, 0.5); // estimate table grid
    double table_step = 0.5;           // mse table resolution
    int mse_n = 500;

    int n_trials = 1000;
    std::uint64_t seed = 1;
    std::string out;                    // empty: $EIGSENSE_OUTPUT_DIR/<experiment>.csv, else stdout
    ScnConvention convention = ScnConvention::spectrum_ratio;
    int workers = 1;

    static std::vector<double> range_values(double lo, double hi, double step);

    // Assigns one field from its text form; ConfigError for unknown keys or malformed values
    void set(std::string_view key, std::string_view value);
    std::string get(std::string_view key) const;
    static const std::vector<std::string_view> &keys();

    // Canonical text with every key; parse(to_text()) reproduces the config exactly
    std::string to_text() const;
    static ExperimentConfig parse(std::string_view text);
    static ExperimentConfig load(const std::string &path);

    // FNV-1a of the canonical text without `out` and `workers`, which do not affect results
    std::uint64_t hash() const;

    void validate() const;
};

std::vector<double> parse_number_list(std::string_view text);

} // namespace eigsense
