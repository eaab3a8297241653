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
#include "eigsense/commands.hpp"
#include "eigsense/csv.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/experiment_config.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace eigsense;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string &line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    return out;
}

struct Run
{
    int status;
    std::string out, err;
};

Run run(const ExperimentConfig &config)
{
    std::ostringstream out, err;
    const int status = run_experiment(config, out, err);
    return {status, out.str(), err.str()};
}

ExperimentConfig config_for(const std::string &text)
{
    return ExperimentConfig::parse(text);
}

} // namespace

TEST_CASE("csv helpers")
{
    CHECK(format_number(5.93) == "5.93");
    CHECK(format_number(1.0 / 3.0) == "0.333333");
    CHECK(format_number(123456789.0) == "1.23457e+08");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(format_number(NAN) == "nan");
    CHECK(format_number(0.1, 17) == "0.10000000000000001");
    std::ostringstream out;
    write_csv_row(out, {"a", "1", "x"});
    CHECK(out.str() == "a,1,x\n");
    // FNV-1a reference values
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(to_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("parse_number_list - lists and ranges")
{
    CHECK(parse_number_list("1.5, 2,2.5") == std::vector<double>{1.5, 2.0, 2.5});
    CHECK(parse_number_list("-10..5") ==
          std::vector<double>{-10, -9, -8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5});
    CHECK(parse_number_list("0..1:0.25") == std::vector<double>{0, 0.25, 0.5, 0.75, 1.0});
    CHECK(parse_number_list("0..0.3:0.1").size() == 4);
    CHECK(parse_number_list("-3,0..1:0.5") == std::vector<double>{-3, 0, 0.5, 1.0});
    CHECK_THROWS_AS(parse_number_list(""), ConfigError);
    CHECK_THROWS_AS(parse_number_list("1,,2"), ConfigError);
    CHECK_THROWS_AS(parse_number_list("abc"), ConfigError);
    CHECK_THROWS_AS(parse_number_list("1..0"), ConfigError);
    CHECK_THROWS_AS(parse_number_list("0..1:0"), ConfigError);
}

TEST_CASE("ExperimentConfig - defaults and lossless round trip")
{
    const ExperimentConfig defaults;
    CHECK(defaults.n_trials == 1000);
    CHECK(defaults.snr_db.front() == -10.0);
    CHECK(defaults.snr_db.back() == 2.0);
    CHECK(defaults.convention == ScnConvention::spectrum_ratio);

    const auto back = ExperimentConfig::parse(defaults.to_text());
    CHECK(back.to_text() == defaults.to_text());
    CHECK(back.hash() == defaults.hash());

    ExperimentConfig c;
    c.experiment = "mse";
    c.beta = 1.0 / 6.0;
    c.mu = 0.1 + 0.2;
    c.rho = {0.1, 0.30000000000000004};
    c.scn = {2.0, 2.5, 3.0};
    c.snr_db = {-1.0, 3.0};
    c.M_range = {1, 8, 11};
    c.signal_case = SignalCase::case2;
    c.covariance_model = CovarianceModel::additive;
    c.lmax = 5.93;
    c.seed = 18446744073709551615ULL;
    c.convention = ScnConvention::paper_linear;
    c.out = "x.csv";
    c.simulate = true;
    const auto r = ExperimentConfig::parse(c.to_text());
    CHECK(r.to_text() == c.to_text());
    CHECK(r.beta == c.beta);
    CHECK(r.mu == c.mu);
    CHECK(r.rho == c.rho);
    CHECK(r.seed == c.seed);
    CHECK(r.lmax == c.lmax);
    CHECK(r.simulate);
    for (auto key : ExperimentConfig::keys())
        CHECK(r.get(key) == c.get(key));
}

TEST_CASE("ExperimentConfig - parsing rules and errors")
{
    const auto c = config_for("# comment\nbeta = 4\n\n  seed=7  # trailing\nscn = 1.5..2.5:0.5\n");
    CHECK(c.beta == 4.0);
    CHECK(c.seed == 7);
    CHECK(c.scn == std::vector<double>{1.5, 2.0, 2.5});
    CHECK_THROWS_AS(config_for("nonsense = 1\n"), ConfigError);
    CHECK_THROWS_AS(config_for("beta 4\n"), ConfigError);
    CHECK_THROWS_AS(config_for("M = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(config_for("seed = -1\n"), ConfigError);
    CHECK_THROWS_AS(config_for("convention = other\n"), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::load("/nonexistent/config.txt"), ConfigError);
}

TEST_CASE("ExperimentConfig - hash ignores output location and workers")
{
    ExperimentConfig a, b;
    b.out = "elsewhere.csv";
    b.workers = 8;
    CHECK(a.hash() == b.hash());
    b.seed = 2;
    CHECK(a.hash() != b.hash());
}

TEST_CASE("support command - examples")
{
    auto r = run(config_for("experiment = support\nbeta = 0.1667\nrho = 0.5\n"));
    CHECK(r.status == kExitOk);
    auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK_THAT(l[0], StartsWith("# eigsense support config_hash="));
    CHECK_THAT(l[0], ContainsSubstring("seed=1"));
    CHECK_THAT(l[0], ContainsSubstring("convention=spectrum-ratio"));
    CHECK(l[1] == "beta,rho,mu,lambda_min,lambda_max,threshold_mp,threshold_tilted");
    auto f = fields(l[2]);
    CHECK_THAT(std::stod(f[3]), WithinAbs(0.3091, 1e-3));
    CHECK_THAT(std::stod(f[4]), WithinAbs(2.2464, 1e-3));
    CHECK_THAT(std::stod(f[6]), WithinAbs(7.267, 2e-3));

    r = run(config_for("experiment = support\nbeta = 1\nrho = 0\n"));
    f = fields(lines(r.out)[2]);
    CHECK(f[3] == "0");
    CHECK(f[4] == "4");
    CHECK(f[5] == "inf");
    CHECK_THAT(r.err, ContainsSubstring("beta = 1"));

    r = run(config_for("experiment = support\nbeta = 4\nrho = 0\n"));
    f = fields(lines(r.out)[2]);
    CHECK(f[3] == "1");
    CHECK(f[4] == "9");
    CHECK(f[5] == "9");
    CHECK(f[6] == "9");

    CHECK_THROWS_AS(run(config_for("experiment = support\nbeta = -1\n")), std::invalid_argument);
}

TEST_CASE("density command - MP mass")
{
    const auto r = run(config_for("experiment = density\nregime = mp\nbeta = 1\n"));
    CHECK(r.status == kExitOk);
    const auto l = lines(r.out);
    CHECK(l[1] == "lambda,density");
    double mass = 0.0, previous_x = 0.0, previous_y = 0.0;
    for (std::size_t i = 2; i < l.size(); ++i)
    {
        const auto f = fields(l[i]);
        const double x = std::stod(f[0]), y = std::stod(f[1]);
        if (i > 2)
            mass += 0.5 * (y + previous_y) * (x - previous_x);
        previous_x = x;
        previous_y = y;
    }
    CHECK_THAT(mass, WithinAbs(1.0, 0.01));
}

TEST_CASE("density command - simulated overlay column")
{
    const auto r = run(config_for("experiment = density\nregime = sig-white\nsnr_db = -2\nsimulate = true\n"
                                  "n_trials = 40\npoints = 300\nbins = 30\n"));
    CHECK(r.status == kExitOk);
    const auto l = lines(r.out);
    CHECK_THAT(l[0], ContainsSubstring("l1="));
    CHECK(l[1] == "lambda,density,simulated");
    CHECK(fields(l[2]).size() == 3);
}

TEST_CASE("estimate command - worked example")
{
    const auto r = run(config_for("experiment = estimate\nlmax = 5.93\nscn = 2\nbeta = 1\n"));
    CHECK(r.status == kExitOk);
    const auto l = lines(r.out);
    CHECK(l[1] == "lmax,scn,beta,snr_db,clamped,method");
    const auto f = fields(l[2]);
    CHECK_THAT(std::stod(f[3]), WithinAbs(0.0, 0.25));
    CHECK(f[4] == "no");
    CHECK(f[5] == "piecewise-linear");
}

TEST_CASE("lookup command - grid structure")
{
    const auto r = run(config_for("experiment = lookup\nbeta = 1\nscn = 1.5,2,2.5\nsnr_db = -10..5\n"));
    CHECK(r.status == kExitOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2 + 3 * 16);
    CHECK(l[1] == "scn,beta,snr_db,lmax_sig_corr,lmax_noise_corr,lmax_sig_white");
    CHECK_THAT(l[2], StartsWith("1.5,1,-10,"));
}

TEST_CASE("mc-sense command - byte-identical output for any worker count")
{
    for (const std::string sweep : {"snr", "rho", "fs"})
    {
        const std::string base = "experiment = mc-sense\nsweep = " + sweep +
                                  "\nsnr_db = -6,0\nrho = 0,0.5\nM_range = 1,8,19\nn_trials = 60\nseed = 42\n";
        const auto a = run(config_for(base + "workers = 1\n"));
        const auto b = run(config_for(base + "workers = 3\n"));
        CHECK(a.out == b.out);
        CHECK(a.status == b.status);
        const auto l = lines(a.out);
        CHECK(fields(l[1]).size() == 5);
        CHECK(fields(l[1])[1] == "detector");
    }
    const auto fs = run(config_for("experiment = mc-sense\nsweep = fs\nM_range = 1,19\nn_trials = 10\n"));
    CHECK_THAT(fs.out, ContainsSubstring("out-of-model"));
}

TEST_CASE("mse command - output and determinism")
{
    const std::string base = "experiment = mse\nbeta = 1\nscn = 2\nsnr_db = 0,4\nmse_n = 60\nn_trials = 20\n";
    const auto a = run(config_for(base + "workers = 1\n"));
    const auto b = run(config_for(base + "workers = 2\n"));
    CHECK(a.status == kExitOk);
    CHECK(a.out == b.out);
    const auto l = lines(a.out);
    REQUIRE(l.size() == 4);
    CHECK(l[1] == "scn,snr_db,mse");
}

TEST_CASE("output_path - explicit, environment, stdout")
{
    ExperimentConfig c;
    c.experiment = "lookup";
    c.out = "given.csv";
    CHECK(output_path(c) == "given.csv");
    c.out.clear();
    ::setenv("EIGSENSE_OUTPUT_DIR", "/tmp/eigsense-out", 1);
    CHECK(output_path(c) == "/tmp/eigsense-out/lookup.csv");
    ::unsetenv("EIGSENSE_OUTPUT_DIR");
    CHECK(output_path(c).empty());
}
