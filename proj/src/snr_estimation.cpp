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

#include "eigsense/snr_estimation.hpp"
#include "eigsense/csv.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/trial_runner.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace eigsense
{

namespace
{

bool same_value(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

struct Node
{
    double lmax;
    double snr_db;
};

SnrEstimate invert(const std::vector<Node> &nodes, double lmax)
{
    SnrEstimate e;
    if (lmax <= nodes.front().lmax)
    {
        e.snr_db = nodes.front().snr_db;
        e.clamped = lmax < nodes.front().lmax;
        e.side = e.clamped ? Clamp::low : Clamp::none;
        return e;
    }
    if (lmax >= nodes.back().lmax)
    {
        e.snr_db = nodes.back().snr_db;
        e.clamped = lmax > nodes.back().lmax;
        e.side = e.clamped ? Clamp::high : Clamp::none;
        return e;
    }
    const auto upper = std::upper_bound(nodes.begin(), nodes.end(), lmax,
                                        [](double v, const Node &n) { return v < n.lmax; });
    const Node &b = *upper, &a = *(upper - 1);
    if (lmax == a.lmax)
        e.snr_db = a.snr_db;
    else
        e.snr_db = a.snr_db + (b.snr_db - a.snr_db) * (lmax - a.lmax) / (b.lmax - a.lmax);
    return e;
}

SnrEstimate estimate_in_slice(const std::vector<LookupRow> &slice, double lmax, bool white)
{
    std::vector<Node> nodes;
    nodes.reserve(slice.size());
    for (const auto &row : slice)
        nodes.push_back({white ? row.lmax_sig_white : row.lmax_sig_corr, row.snr_db});
    return invert(nodes, lmax);
}

} // namespace

std::vector<LookupRow> LookupTable::slice(double scn, double beta) const
{
    std::vector<LookupRow> out;
    for (const auto &row : rows)
        if (same_value(row.scn, scn) && same_value(row.beta, beta))
            out.push_back(row);
    std::sort(out.begin(), out.end(), [](const LookupRow &a, const LookupRow &b) { return a.snr_db < b.snr_db; });
    return out;
}

std::vector<double> LookupTable::scn_values(double beta) const
{
    std::vector<double> out;
    for (const auto &row : rows)
        if (same_value(row.beta, beta) &&
            std::none_of(out.begin(), out.end(), [&](double s) { return same_value(s, row.scn); }))
            out.push_back(row.scn);
    std::sort(out.begin(), out.end());
    return out;
}

void LookupTable::write_csv(std::ostream &out) const
{
    out << "scn,beta,snr_db,lmax_sig_corr,lmax_noise_corr,lmax_sig_white\n";
    for (const auto &r : rows)
        write_csv_row(out, {format_number(r.scn), format_number(r.beta), format_number(r.snr_db),
                            format_number(r.lmax_sig_corr), format_number(r.lmax_noise_corr),
                            format_number(r.lmax_sig_white)});
}

LookupTable build_lookup(std::span<const double> scn_list, double beta, std::span<const double> snr_grid_db,
                         const LookupOptions &options)
{
    if (scn_list.empty() || snr_grid_db.empty())
        throw DomainError("build_lookup: scn list and snr grid must be non-empty");
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
        if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
            throw DomainError("build_lookup: snr grid must be strictly increasing");
    std::vector<double> mus;
    for (const double scn : scn_list)
        mus.push_back(rho_to_mu(scn_to_rho(scn, options.convention)));

    const std::size_t n_snr = snr_grid_db.size();
    const auto rows = run_trials<LookupRow>(
        scn_list.size() * n_snr, options.workers,
        [&](std::size_t k)
        {
            const std::size_t i = k / n_snr, j = k % n_snr;
            const double p = db_to_power(snr_grid_db[j]);
            LookupRow row;
            row.scn = scn_list[i];
            row.beta = beta;
            row.snr_db = snr_grid_db[j];
            row.lmax_noise_corr = tilted_support(beta, mus[i]).lambda_max;
            row.lmax_sig_corr = support_of(StieltjesPolynomial::signal_correlated(p, beta, mus[i]), options.support)
                                    .lambda_max;
            row.lmax_sig_white = support_of(StieltjesPolynomial::signal_white(p, beta), options.support).lambda_max;
            return row;
        });

    for (std::size_t i = 0; i < scn_list.size(); ++i)
        for (std::size_t j = 1; j < n_snr; ++j)
        {
            const LookupRow &a = rows[i * n_snr + j - 1], &b = rows[i * n_snr + j];
            if (!(b.lmax_sig_corr > a.lmax_sig_corr) || !(b.lmax_sig_white > a.lmax_sig_white))
                throw TableBuildError("build_lookup: lambda_max not increasing between " +
                                      format_number(a.snr_db) + " and " + format_number(b.snr_db) +
                                      " dB at scn " + format_number(a.scn));
        }

    LookupTable table;
    table.rows = rows;
    table.convention = options.convention;
    return table;
}

SnrEstimate estimate_snr(double lmax, double scn, double beta, const LookupTable &table)
{
    if (!std::isfinite(lmax) || lmax < 0.0)
        throw DomainError("estimate_snr: lmax must be finite and >= 0");
    if (!std::isfinite(scn) || scn < 1.0)
        throw DomainError("estimate_snr: scn must be >= 1");

    const auto scns = table.scn_values(beta);
    if (scns.empty())
        throw TableCoverageError("estimate_snr: no table rows for beta " + format_number(beta));

    // White noise: the white column does not depend on the slice
    if (scn == 1.0)
        return estimate_in_slice(table.slice(scns.front(), beta), lmax, true);

    for (const double s : scns)
        if (same_value(s, scn))
            return estimate_in_slice(table.slice(s, beta), lmax, false);

    const auto above = std::upper_bound(scns.begin(), scns.end(), scn);
    if (above == scns.begin() || above == scns.end())
        throw TableCoverageError("estimate_snr: scn " + format_number(scn) + " not bracketed by the table");
    const double s_lo = *(above - 1), s_hi = *above;
    const SnrEstimate lo = estimate_in_slice(table.slice(s_lo, beta), lmax, false);
    const SnrEstimate hi = estimate_in_slice(table.slice(s_hi, beta), lmax, false);
    SnrEstimate e;
    const double t = (scn - s_lo) / (s_hi - s_lo);
    e.snr_db = lo.snr_db + t * (hi.snr_db - lo.snr_db);
    e.clamped = lo.clamped || hi.clamped;
    e.side = lo.side != Clamp::none ? lo.side : hi.side;
    return e;
}

double normalized_mse(std::span<const double> estimates, double truth)
{
    if (!std::isfinite(truth) || truth == 0.0)
        throw DomainError("normalized_mse: truth must be finite and non-zero");
    if (estimates.empty())
        throw DegenerateInputError("normalized_mse: no estimates");
    double sum = 0.0;
    for (const double e : estimates)
        sum += (e - truth) * (e - truth);
    return sum / static_cast<double>(estimates.size()) / (truth * truth);
}

std::vector<MsePoint> mse_sweep(std::span<const double> scn_list, double beta, std::span<const double> snr_grid_db,
                                int N, int n_trials, std::uint64_t seed, const MseOptions &options)
{
    if (n_trials < 1 || N < 1)
        throw DomainError("mse_sweep: need n_trials >= 1 and N >= 1");
    if (snr_grid_db.empty() || scn_list.empty())
        throw DomainError("mse_sweep: empty sweep");
    const int M = static_cast<int>(std::lround(static_cast<double>(N) / beta));
    if (M < 1 || M > N)
        throw DomainError("mse_sweep: beta must satisfy 1 <= beta <= N");

    const auto [lo_it, hi_it] = std::minmax_element(snr_grid_db.begin(), snr_grid_db.end());
    std::vector<double> table_grid;
    const double start = *lo_it - options.table_margin_db, stop = *hi_it + options.table_margin_db;
    for (int k = 0; start + k * options.table_step_db <= stop + 1e-9; ++k)
        table_grid.push_back(start + k * options.table_step_db);

    LookupOptions lookup_options;
    lookup_options.convention = options.convention;
    lookup_options.workers = options.workers;
    const LookupTable table = build_lookup(scn_list, beta, table_grid, lookup_options);
    const double theory_scale = static_cast<double>(N) / static_cast<double>(M);

    std::vector<MsePoint> points;
    std::uint64_t point_index = 0;
    for (const double scn : scn_list)
        for (const double snr_db : snr_grid_db)
        {
            Scenario s;
            s.hypothesis = Hypothesis::h1;
            s.signal_case = options.signal_case;
            s.covariance_model = options.covariance_model;
            s.p = db_to_power(snr_db);
            s.M = M;
            s.N = N;
            s.rho = scn_to_rho(scn, options.convention);
            s.seed = trial_seed(seed, point_index++);
            const TrialGenerator generator(s);

            const auto estimates = run_trials<SnrEstimate>(
                static_cast<std::size_t>(n_trials), options.workers,
                [&](std::size_t i)
                {
                    const double lmax = largest_eigenvalue(generator.covariance(trial_seed(s.seed, i)));
                    return estimate_snr(theory_scale * lmax, scn, beta, table);
                });

            MsePoint point;
            point.scn = scn;
            point.snr_db = snr_db;
            std::vector<double> linear;
            linear.reserve(estimates.size());
            for (const auto &e : estimates)
            {
                linear.push_back(db_to_power(e.snr_db));
                point.clamped += e.clamped ? 1 : 0;
            }
            point.mse = normalized_mse(linear, s.p);
            points.push_back(point);
        }
    return points;
}

} // namespace eigsense
