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
#include "eigsense/rmt_spectra.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace eigsense
{

struct LookupRow
{
    double scn = 1.0; // condition number of the correlation law
    double beta = 1.0;
    double snr_db = 0.0;
    double lmax_sig_corr = 0.0;   // signal plus correlated noise
    double lmax_noise_corr = 0.0; // correlated noise only
    double lmax_sig_white = 0.0;  // signal plus white noise
};

struct LookupTable
{
    std::vector<LookupRow> rows;
    ScnConvention convention = ScnConvention::spectrum_ratio;

    // Rows of one (scn, beta) slice ordered by snr_db; empty if the slice is absent
    std::vector<LookupRow> slice(double scn, double beta) const;
    // Distinct scn values present for beta, ascending
    std::vector<double> scn_values(double beta) const;

    // Header `scn,beta,snr_db,lmax_sig_corr,lmax_noise_corr,lmax_sig_white`, 6 significant digits
    void write_csv(std::ostream &out) const;
};

struct LookupOptions
{
    ScnConvention convention = ScnConvention::spectrum_ratio;
    SupportOptions support{400, kDefaultYOffset, kDefaultDensityFloor, 1e-7};
    int workers = 1;
};

// Strictly increasing snr grid, scn values >= 1. Throws TableBuildError if a lambda_max column is not strictly
// increasing in snr within a slice.
LookupTable build_lookup(std::span<const double> scn_list, double beta, std::span<const double> snr_grid_db,
                         const LookupOptions &options = {});

enum class Clamp
{
    none,
    low,
    high
};

struct SnrEstimate
{
    double snr_db = 0.0;
    bool clamped = false;
    Clamp side = Clamp::none;
    std::string_view method = "piecewise-linear";
};

// Inverts the signal-plus-correlated-noise column (signal-plus-white-noise column when scn == 1). Between tabulated
// scn slices the two slice estimates are interpolated linearly in scn. Throws TableCoverageError without coverage.
SnrEstimate estimate_snr(double lmax, double scn, double beta, const LookupTable &table);

// mean((estimate - truth)^2) / truth^2, linear power units
double normalized_mse(std::span<const double> estimates, double truth);

struct MsePoint
{
    double scn = 1.0;
    double snr_db = 0.0;
    double mse = 0.0;
    int clamped = 0; // trials whose estimate hit the table range
};

struct MseOptions
{
    ScnConvention convention = ScnConvention::spectrum_ratio;
    CovarianceModel covariance_model = CovarianceModel::independent_sum;
    SignalCase signal_case = SignalCase::case1;
    double table_step_db = 0.5;
    double table_margin_db = 4.0;
    int workers = 1;
};

// For every (scn, snr) point: n_trials H1 draws with M = N / beta, lambda_max of the sample covariance rescaled by
// beta to the units of the limiting law, SNR read from a lookup table spanning the sweep plus a margin.
std::vector<MsePoint> mse_sweep(std::span<const double> scn_list, double beta, std::span<const double> snr_grid_db,
                                int N, int n_trials, std::uint64_t seed, const MseOptions &options = {});

} // namespace eigsense
