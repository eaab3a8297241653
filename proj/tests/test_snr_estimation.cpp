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

#include "catch_amalgamated.hpp"
#include "eigsense/correlation_model.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/snr_estimation.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

using namespace eigsense;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

struct ReferenceRow
{
    double scn, snr_db, sig_corr, noise_corr, sig_white;
};

// Finite-N simulated lambda_max reference values, beta = 1
const std::vector<ReferenceRow> kReference{
    {1.5, 5, 14.21, 4.07, 14.20}, {1.5, 2, 7.83, 4.10, 7.81},   {1.5, 0, 5.95, 4.13, 5.91},
    {1.5, -2, 4.96, 4.09, 4.93},  {1.5, -4, 4.61, 4.06, 4.52},  {1.5, -6, 4.34, 4.08, 4.29},
    {1.5, -8, 4.28, 4.11, 4.17},  {1.5, -10, 4.29, 4.07, 4.23}, {2.0, 5, 13.98, 4.17, 13.98},
    {2.0, 2, 7.77, 4.20, 7.76},   {2.0, 0, 5.93, 4.18, 5.85},   {2.0, -2, 5.04, 4.16, 4.91},
    {2.0, -4, 4.68, 4.21, 4.52},  {2.0, -6, 4.44, 4.16, 4.29},  {2.0, -8, 4.37, 4.17, 4.20},
    {2.0, -10, 4.31, 4.21, 4.17}, {2.5, 5, 13.97, 4.29, 13.96}, {2.5, 2, 7.91, 4.23, 7.85},
    {2.5, 0, 5.95, 4.23, 5.86},   {2.5, -2, 5.15, 4.26, 4.88},  {2.5, -4, 4.87, 4.24, 4.52},
    {2.5, -6, 4.54, 4.30, 4.31},  {2.5, -8, 4.51, 4.25, 4.21},  {2.5, -10, 4.34, 4.23, 4.15},
};

const std::vector<double> kScn{1.5, 2.0, 2.5};
const std::vector<double> kTableSnr{-10, -8, -6, -4, -2, 0, 2, 5};

const LookupTable &coarse_table()
{
    static const LookupTable table = build_lookup(kScn, 1.0, kTableSnr);
    return table;
}

std::vector<double> grid(double lo, double hi, double step)
{
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-9; v += step)
        out.push_back(v);
    return out;
}

const LookupTable &fine_table()
{
    static const LookupTable table = build_lookup(std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}, 1.0, grid(-15, 15, 0.5));
    return table;
}

const LookupRow &row(const LookupTable &t, double scn, double snr)
{
    for (const auto &r : t.rows)
        if (r.scn == scn && r.snr_db == snr)
            return r;
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("build_lookup - agrees with finite-N reference values")
{
    const auto &t = coarse_table();
    REQUIRE(t.rows.size() == kScn.size() * kTableSnr.size());
    for (const auto &ref : kReference)
    {
        const auto &r = row(t, ref.scn, ref.snr_db);
        INFO("scn " << ref.scn << " snr " << ref.snr_db);
        if (ref.snr_db >= -2.0)
        {
            CHECK_THAT(r.lmax_sig_corr, WithinRel(ref.sig_corr, 0.05));
            CHECK_THAT(r.lmax_sig_white, WithinRel(ref.sig_white, 0.05));
        }
        CHECK_THAT(r.lmax_noise_corr, WithinRel(ref.noise_corr, 0.05));
    }
    CHECK_THAT(row(t, 2.0, 0).lmax_sig_corr, WithinRel(5.93, 0.03));
    CHECK_THAT(row(t, 2.0, 0).lmax_noise_corr, WithinAbs(4.12, 0.01));
}

TEST_CASE("build_lookup - column invariants")
{
    const auto &t = fine_table();
    for (double scn : t.scn_values(1.0))
    {
        const auto slice = t.slice(scn, 1.0);
        REQUIRE(slice.size() == 61);
        for (std::size_t i = 0; i < slice.size(); ++i)
        {
            CHECK(std::abs(slice[i].lmax_noise_corr - slice[0].lmax_noise_corr) <= 1e-6);
            CHECK(slice[i].lmax_sig_corr >= slice[i].lmax_sig_white - 1e-6);
            CHECK(slice[i].lmax_sig_white >= 4.0 - 1e-3);
            CHECK(slice[i].lmax_sig_corr >= slice[i].lmax_noise_corr);
            if (i > 0)
                CHECK(slice[i].lmax_sig_corr > slice[i - 1].lmax_sig_corr);
        }
    }
    // At -10 dB signal-plus-noise and noise-only columns are nearly indistinguishable
    for (double scn : kScn)
    {
        const auto &r = row(coarse_table(), scn, -10);
        CHECK(r.lmax_sig_corr / r.lmax_noise_corr - 1.0 < 0.05);
    }
}

TEST_CASE("build_lookup - convention coherence")
{
    const std::vector<double> scn{2.0};
    const std::vector<double> snr{0.0, 1.0};
    for (auto convention : {ScnConvention::spectrum_ratio, ScnConvention::paper_linear})
    {
        LookupOptions opt;
        opt.convention = convention;
        const auto t = build_lookup(scn, 1.0, snr, opt);
        CHECK(t.convention == convention);
        const double mu = rho_to_mu(scn_to_rho(2.0, convention));
        CHECK_THAT(t.rows[0].lmax_noise_corr, WithinAbs(tilted_support(1.0, mu).lambda_max, 1e-5));
    }
}

TEST_CASE("build_lookup - validation")
{
    const std::vector<double> scn{2.0};
    const std::vector<double> bad_grid{0.0, 0.0};
    CHECK_THROWS_AS(build_lookup(scn, 1.0, bad_grid), DomainError);
    const std::vector<double> bad_scn{0.5};
    const std::vector<double> snr{0.0, 1.0};
    CHECK_THROWS_AS(build_lookup(bad_scn, 1.0, snr), DomainError);
}

TEST_CASE("build_lookup - independent of the worker count")
{
    const std::vector<double> scn{1.5, 2.5};
    const auto snr = grid(-4, 4, 2);
    LookupOptions serial, parallel;
    parallel.workers = 3;
    std::ostringstream a, b;
    build_lookup(scn, 1.0, snr, serial).write_csv(a);
    build_lookup(scn, 1.0, snr, parallel).write_csv(b);
    CHECK(a.str() == b.str());
}

TEST_CASE("LookupTable - CSV format")
{
    LookupTable t;
    t.rows.push_back({2.0, 1.0, -2.0, 5.0118312, 4.1213203, 4.9109999});
    std::ostringstream out;
    t.write_csv(out);
    CHECK(out.str() == "scn,beta,snr_db,lmax_sig_corr,lmax_noise_corr,lmax_sig_white\n2,1,-2,5.01183,4.12132,4.911\n");
}

TEST_CASE("estimate_snr - worked examples")
{
    const auto &t = fine_table();
    const auto e = estimate_snr(5.93, 2.0, 1.0, t);
    CHECK_THAT(e.snr_db, WithinAbs(0.0, 0.25));
    CHECK_FALSE(e.clamped);
    CHECK(e.method == "piecewise-linear");
    CHECK_THAT(estimate_snr(14.21, 1.5, 1.0, t).snr_db, WithinAbs(5.0, 0.5));
}

TEST_CASE("estimate_snr - round trip and node identity")
{
    const auto &t = fine_table();
    for (double scn : {1.5, 2.0, 3.0})
        for (const auto &r : t.slice(scn, 1.0))
        {
            const auto e = estimate_snr(r.lmax_sig_corr, scn, 1.0, t);
            CHECK_THAT(e.snr_db, WithinAbs(r.snr_db, 1e-9));
        }
    // White mode inverts the signal-plus-white-noise column
    for (const auto &r : t.slice(1.0, 1.0))
        CHECK_THAT(estimate_snr(r.lmax_sig_white, 1.0, 1.0, t).snr_db, WithinAbs(r.snr_db, 1e-9));
}

TEST_CASE("estimate_snr - interpolation sandwich")
{
    const auto &t = fine_table();
    const auto slice = t.slice(2.0, 1.0);
    for (std::size_t i = 1; i < slice.size(); ++i)
        for (double w : {0.1, 0.5, 0.9})
        {
            const double lmax = (1.0 - w) * slice[i - 1].lmax_sig_corr + w * slice[i].lmax_sig_corr;
            const auto e = estimate_snr(lmax, 2.0, 1.0, t);
            CHECK(e.snr_db > slice[i - 1].snr_db);
            CHECK(e.snr_db < slice[i].snr_db);
            CHECK_THAT(e.snr_db, WithinAbs(slice[i - 1].snr_db + w * (slice[i].snr_db - slice[i - 1].snr_db), 1e-9));
        }
}

TEST_CASE("estimate_snr - clamping")
{
    const auto &t = fine_table();
    const auto floor = t.slice(2.0, 1.0).front();
    const auto low = estimate_snr(floor.lmax_noise_corr, 2.0, 1.0, t);
    CHECK(low.clamped);
    CHECK(low.side == Clamp::low);
    CHECK(low.snr_db == -15.0);
    const auto high = estimate_snr(1e3, 2.0, 1.0, t);
    CHECK(high.clamped);
    CHECK(high.side == Clamp::high);
    CHECK(high.snr_db == 15.0);
}

TEST_CASE("estimate_snr - between scn slices")
{
    const auto &t = fine_table();
    const double lmax = 6.0;
    const double a = estimate_snr(lmax, 2.0, 1.0, t).snr_db;
    const double b = estimate_snr(lmax, 2.5, 1.0, t).snr_db;
    const double mid = estimate_snr(lmax, 2.25, 1.0, t).snr_db;
    CHECK_THAT(mid, WithinAbs(0.5 * (a + b), 1e-12));
    // More noise correlation explains more of the same lambda_max
    CHECK(b < a);
}

TEST_CASE("estimate_snr - coverage errors")
{
    const auto &t = fine_table();
    CHECK_THROWS_AS(estimate_snr(6.0, 4.0, 1.0, t), TableCoverageError);
    CHECK_THROWS_AS(estimate_snr(6.0, 0.5, 1.0, t), DomainError);
    CHECK_THROWS_AS(estimate_snr(6.0, 2.0, 2.0, t), TableCoverageError);
    CHECK_THROWS_AS(estimate_snr(6.0, 2.0, 1.0, LookupTable{}), TableCoverageError);
}

TEST_CASE("normalized_mse - examples")
{
    const std::vector<double> exact{2.0, 2.0, 2.0};
    CHECK(normalized_mse(exact, 2.0) == 0.0);
    const std::vector<double> doubled{4.0};
    CHECK(normalized_mse(doubled, 2.0) == 1.0);
    const std::vector<double> mixed{1.0, 3.0};
    CHECK_THAT(normalized_mse(mixed, 2.0), WithinAbs(0.25, 1e-15));
    CHECK_THROWS_AS(normalized_mse(mixed, 0.0), DomainError);
    const std::vector<double> none;
    CHECK_THROWS_AS(normalized_mse(none, 1.0), DegenerateInputError);
}

TEST_CASE("mse_sweep - structure, determinism and trend")
{
    const std::vector<double> scn{2.0};
    const std::vector<double> snr{-4.0, 0.0, 6.0};
    MseOptions serial, parallel;
    parallel.workers = 3;
    const auto a = mse_sweep(scn, 1.0, snr, 100, 60, 7, serial);
    const auto b = mse_sweep(scn, 1.0, snr, 100, 60, 7, parallel);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        CHECK(a[i].mse == b[i].mse);
        CHECK(a[i].scn == 2.0);
        CHECK(a[i].snr_db == snr[i]);
        CHECK(a[i].mse >= 0.0);
    }
    CHECK(a[2].mse < a[0].mse);
    CHECK(a[2].mse < 0.05);
}
