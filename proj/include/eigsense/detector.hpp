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

#include "eigsense/matrix_sim.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eigsense
{

enum class DetectorKind
{
    marchenko_pastur,
    tilted
};

std::string_view to_string(DetectorKind kind);

// b / a of the noise-only support; +inf when the lower edge is 0 (beta = 1)
double threshold_mp(double beta);
double threshold_tilted(double beta, double mu);

struct Decision
{
    Hypothesis value = Hypothesis::h0;
    double statistic = 0.0;
    double threshold = 0.0;
};

// H1 iff scn > threshold
Decision decide(double scn, double threshold);

struct SensingResult
{
    int trials = 0;
    int correct = 0;
    int false_alarms = 0; // H0 trials decided H1
    int misses = 0;       // H1 trials decided H0
    int h0_trials = 0;
    int h1_trials = 0;
    double threshold = 0.0;
    bool degenerate_threshold = false; // threshold is +inf: the detector can never decide H1

    double ratio() const
    {
        return trials > 0 ? 1.0 - static_cast<double>(false_alarms + misses) / static_cast<double>(trials) : 0.0;
    }
};

struct SensingComparison
{
    SensingResult mp;
    SensingResult tilted;
};

// Runs n_trials / 2 trials under H0 and the rest under H1, with per-trial seeds trial_seed(template.seed, i).
// Both detectors see the same draws. The tilted threshold uses mu = rho^2 / (1 - rho^2) and beta = N / M.
SensingComparison mc_compare(const Scenario &scenario_template, int n_trials, int workers = 1);
SensingResult mc_correct_ratio(const Scenario &scenario_template, DetectorKind kind, int n_trials, int workers = 1);

struct FsPoint
{
    int M = 1;
    double rho = 0.0;
    bool out_of_model = false; // the linear FS model gives rho >= 1, no trials were run
    SensingComparison result;
};

std::vector<FsPoint> fs_sweep(double epsilon, int N, double snr_db, std::span<const int> M_values, int n_trials,
                              std::uint64_t seed, int workers = 1,
                              const Scenario &scenario_template = Scenario{});

} // namespace eigsense
