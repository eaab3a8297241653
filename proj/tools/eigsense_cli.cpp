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

// Command-line front end. Every config key has an equivalent flag; flags override values from --config.

#include "eigsense/commands.hpp"
#include "eigsense/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace
{

struct FlagSpec
{
    const char *flag;
    const char *key;
    const char *help;
};

const FlagSpec kFlags[] = {
    {"--beta", "beta", "N/M ratio of the limiting laws"},
    {"--mu", "mu", "correlation strength (overrides --rho/--scn)"},
    {"--rho", "rho", "correlation coefficient(s), list or lo..hi[:step]"},
    {"--scn", "scn", "condition number(s) of the correlation law"},
    {"--snr", "snr_db", "SNR value(s) in dB"},
    {"-M,--M", "M", "receive dimensions (FS rate)"},
    {"-N,--N", "N", "samples per dimension"},
    {"--epsilon", "epsilon", "slope of the fractional-sampling correlation model"},
    {"--M-range", "M_range", "FS rates for the fs sweep"},
    {"--sweep", "sweep", "mc-sense axis: snr | rho | fs"},
    {"--case", "signal_case", "case1 | case2"},
    {"--model", "covariance_model", "independent-sum | additive"},
    {"--regime", "regime", "density: mp | noise-corr | sig-white | sig-corr"},
    {"--points", "points", "density grid points"},
    {"--y-offset", "y_offset", "imaginary offset for density extraction"},
    {"--floor", "density_floor", "support detection density floor"},
    {"--bins", "bins", "histogram bins for --simulate"},
    {"--density-n", "density_n", "N used by density --simulate"},
    {"--lmax", "lmax", "measured largest eigenvalue for estimate"},
    {"--table-snr", "table_snr_db", "SNR grid of the estimate lookup table"},
    {"--table-step", "table_step", "SNR step of the mse lookup table"},
    {"--mse-n", "mse_n", "N used by mse and simulated estimate"},
    {"--trials", "n_trials", "Monte Carlo trials per point"},
    {"--seed", "seed", "master seed (u64)"},
    {"-o,--out", "out", "output file (default $EIGSENSE_OUTPUT_DIR/<command>.csv or stdout)"},
    {"--convention", "convention", "spectrum-ratio | paper-linear"},
    {"-j,--workers", "workers", "worker threads"},
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"eigsense - eigenvalue-based spectrum sensing under correlated noise"};
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> given;
    std::string regime_arg;
    bool simulate = false;

    const std::pair<const char *, const char *> commands[] = {
        {"support", "support edges and SCN thresholds"},
        {"density", "limiting eigenvalue density as CSV"},
        {"mc-sense", "Monte Carlo ratio of correct sensing, MP vs tilted thresholds"},
        {"lookup", "lambda_max lookup table"},
        {"estimate", "SNR estimate from a largest eigenvalue"},
        {"mse", "normalized MSE of the SNR estimate"},
    };
    for (const auto &[name, description] : commands)
    {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "key = value config file");
        for (const auto &f : kFlags)
            sub->add_option(f.flag, given[f.key], f.help);
        if (std::string(name) == "density")
        {
            sub->add_option("REGIME", regime_arg, "mp | noise-corr | sig-white | sig-corr");
            sub->add_flag("--simulate", simulate, "overlay a pooled Monte Carlo histogram");
        }
    }

    CLI11_PARSE(app, argc, argv);

    const CLI::App *chosen = app.get_subcommands().front();
    try
    {
        eigsense::ExperimentConfig config;
        if (!config_path.empty())
            config = eigsense::ExperimentConfig::load(config_path);
        config.experiment = chosen->get_name();
        for (const auto &f : kFlags)
            if (chosen->count(std::string(f.flag).substr(std::string(f.flag).rfind(',') + 1)) > 0)
                config.set(f.key, given[f.key]);
        if (chosen->get_name() == "density")
        {
            if (!regime_arg.empty())
                config.set("regime", regime_arg);
            if (simulate)
                config.simulate = true;
        }

        const std::string path = eigsense::output_path(config);
        std::ostringstream buffer;
        const int status = eigsense::run_experiment(config, buffer, std::cerr);
        if (path.empty())
            std::cout << buffer.str();
        else
        {
            std::ofstream file(path, std::ios::binary);
            if (!(file << buffer.str()))
            {
                std::cerr << "error: cannot write '" << path << "'\n";
                return eigsense::kExitError;
            }
        }
        return status;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return eigsense::kExitError;
    }
}
