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

#include "eigsense/experiment_config.hpp"

#include <iosfwd>
#include <string>

namespace eigsense
{

// Exit codes of run_experiment
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1; // some points failed, listed on the diagnostic stream
inline constexpr int kExitError = 2;   // invalid input or nothing computed

// Writes the CSV of config.experiment to `out` and diagnostics to `err`. Exceptions from invalid input propagate.
int run_experiment(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

int cmd_support(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_density(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_mc_sense(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_lookup(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_estimate(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_mse(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

// Output path for a run: config.out, else $EIGSENSE_OUTPUT_DIR/<experiment>.csv, else empty (stdout)
std::string output_path(const ExperimentConfig &config);

} // namespace eigsense
