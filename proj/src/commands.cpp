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

#include "eigsense/commands.hpp"
#include "eigsense/csv.hpp"
#include "eigsense/detector.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/rmt_spectra.hpp"
#include "eigsense/snr_estimation.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

namespace eigsense
{

namespace
{

void write_comment(std::ostream &out, const ExperimentConfig &config, const std::string &extra = {})
{
    out << "# eigsense " << config.experiment << " config_hash=" << to_hex(config.hash()) << " seed=" << config.seed
        << " convention=" << to_string(config.convention);
    if (!extra.empty())
        out << ' ' << extra;
    out << '\n';
}

double correlation_mu(const ExperimentConfig &config)
{
    return config.mu ? *config.mu : rho_to_mu(scn_to_rho(config.scn.front(), config.convention));
}

void warn_if_unit_beta(double beta, std::ostream &err)
{
    if (beta == 1.0)
        err << "warning: beta = 1 puts the lower support edge at 0; SCN thresholds are infinite and the detector "
               "never decides H1\n";
}

} // namespace

std::string output_path(const ExperimentConfig &config)
{
    if (!config.out.empty())
        return config.out;
    if (const char *dir = std::getenv("EIGSENSE_OUTPUT_DIR"); dir != nullptr && *dir != '\0')
        return std::string(dir) + "/" + config.experiment + ".csv";
    return {};
}

int cmd_support(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    std::vector<std::pair<double, double>> rho_mu;
    if (config.mu)
        rho_mu.emplace_back(mu_to_rho(*config.mu), *config.mu);
    else
        for (const double rho : config.rho)
            rho_mu.emplace_back(rho, rho_to_mu(rho));

    write_comment(out, config);
    out << "beta,rho,mu,lambda_min,lambda_max,threshold_mp,threshold_tilted\n";
    for (const auto &[rho, mu] : rho_mu)
    {
        const SpectralSupport s = tilted_support(config.beta, mu);
        write_csv_row(out, {format_number(config.beta), format_number(rho), format_number(mu),
                            format_number(s.lambda_min), format_number(s.lambda_max),
                            format_number(threshold_mp(config.beta)), format_number(threshold_tilted(config.beta, mu))});
    }
    warn_if_unit_beta(config.beta, err);
    return kExitOk;
}

int cmd_density(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    const double beta = config.beta, p = db_to_power(config.snr_db.front());
    const bool correlated = config.regime == "noise-corr" || config.regime == "sig-corr";
    const bool with_signal = config.regime == "sig-white" || config.regime == "sig-corr";
    const double mu = correlated ? correlation_mu(config) : 0.0;

    const StieltjesPolynomial poly = config.regime == "mp"           ? StieltjesPolynomial::marchenko_pastur(beta)
                                     : config.regime == "noise-corr" ? StieltjesPolynomial::noise_correlated(beta, mu)
                                     : config.regime == "sig-white"  ? StieltjesPolynomial::signal_white(p, beta)
                                                                     : StieltjesPolynomial::signal_correlated(p, beta, mu);
    const auto grid = default_grid(1.5 * poly.upper_edge_bound(), static_cast<std::size_t>(config.points));
    const AepdfCurve curve = density_curve(poly, grid, config.y_offset);

    std::string extra = "mass_at_zero=" + format_number(curve.mass_at_zero);
    Histogram histogram;
    if (config.simulate)
    {
        Scenario s;
        s.hypothesis = with_signal ? Hypothesis::h1 : Hypothesis::h0;
        s.signal_case = config.signal_case;
        s.covariance_model = config.covariance_model;
        s.p = with_signal ? p : 0.0;
        s.N = config.density_n;
        s.M = static_cast<int>(std::lround(config.density_n / beta));
        s.rho = correlated ? mu_to_rho(mu) : 0.0;
        s.seed = config.seed;
        if (s.M < 1 || s.M > s.N)
            throw ConfigError("density --simulate needs 1 <= beta <= density_n");
        const auto eigenvalues = pooled_eigenvalues(s, config.n_trials, config.workers, s.beta());
        histogram = make_histogram(eigenvalues, 0.0, grid.back(), config.bins);
        extra += " l1=" + format_number(l1_distance(histogram, curve));
    }

    write_comment(out, config, extra);
    out << (config.simulate ? "lambda,density,simulated\n" : "lambda,density\n");
    for (const auto &pt : curve.points)
    {
        if (!config.simulate)
        {
            write_csv_row(out, {format_number(pt.lambda), format_number(pt.density)});
            continue;
        }
        const auto bin = std::min(static_cast<std::size_t>((pt.lambda - histogram.lo) / histogram.bin_width()),
                                  histogram.mass.size() - 1);
        write_csv_row(out, {format_number(pt.lambda), format_number(pt.density),
                            format_number(histogram.density(bin))});
    }
    (void)err;
    return kExitOk;
}

int cmd_mc_sense(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    Scenario base;
    base.signal_case = config.signal_case;
    base.covariance_model = config.covariance_model;
    base.M = config.M;
    base.N = config.N;
    base.seed = config.seed;
    base.rho = config.rho.front();
    base.p = db_to_power(config.snr_db.front());

    write_comment(out, config);
    const std::string axis = config.sweep == "snr" ? "snr_db" : config.sweep == "rho" ? "rho" : "M";
    out << axis << ",detector,ratio,false_alarm,miss\n";

    int failed = 0, done = 0;
    auto emit = [&](const std::string &x, const SensingComparison &r)
    {
        for (const auto &[name, res] : {std::pair{"MP", &r.mp}, std::pair{"Tilted", &r.tilted}})
        {
            write_csv_row(out, {x, name, format_number(res->ratio()), std::to_string(res->false_alarms),
                                std::to_string(res->misses)});
            if (res->degenerate_threshold)
                err << "warning: " << axis << "=" << x << " " << name
                    << " threshold is infinite; the configuration cannot be used for sensing\n";
        }
    };

    if (config.sweep == "fs")
    {
        for (const auto &point : fs_sweep(config.epsilon, config.N, config.snr_db.front(), config.M_range,
                                          config.n_trials, config.seed, config.workers, base))
        {
            if (point.out_of_model)
            {
                write_csv_row(out, {std::to_string(point.M), "Tilted", "out-of-model", "", ""});
                err << "note: M=" << point.M << " leaves the fractional-sampling model (rho >= 1)\n";
                continue;
            }
            emit(std::to_string(point.M), point.result);
            ++done;
        }
        return done > 0 ? kExitOk : kExitError;
    }

    warn_if_unit_beta(base.beta(), err);
    const auto &values = config.sweep == "snr" ? config.snr_db : config.rho;
    for (const double v : values)
    {
        Scenario s = base;
        if (config.sweep == "snr")
            s.p = db_to_power(v);
        else
            s.rho = v;
        try
        {
            emit(format_number(v), mc_compare(s, config.n_trials, config.workers));
            ++done;
        }
        catch (const std::exception &e)
        {
            ++failed;
            err << "error: " << axis << "=" << format_number(v) << ": " << e.what() << '\n';
        }
    }
    return done == 0 ? kExitError : failed > 0 ? kExitPartial : kExitOk;
}

int cmd_lookup(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    LookupOptions options;
    options.convention = config.convention;
    options.workers = config.workers;
    const LookupTable table = build_lookup(config.scn, config.beta, config.snr_db, options);
    write_comment(out, config);
    table.write_csv(out);
    (void)err;
    return kExitOk;
}

int cmd_estimate(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    const double scn = config.scn.front();
    LookupOptions options;
    options.convention = config.convention;
    options.workers = config.workers;
    const LookupTable table = build_lookup(std::vector<double>{scn}, config.beta, config.table_snr_db, options);

    double lmax = 0.0;
    if (config.lmax)
        lmax = *config.lmax;
    else
    {
        Scenario s;
        s.hypothesis = Hypothesis::h1;
        s.signal_case = config.signal_case;
        s.covariance_model = config.covariance_model;
        s.p = db_to_power(config.snr_db.front());
        s.N = config.mse_n;
        s.M = static_cast<int>(std::lround(config.mse_n / config.beta));
        s.rho = scn_to_rho(scn, config.convention);
        s.seed = config.seed;
        const TrialGenerator generator(s);
        lmax = s.beta() * largest_eigenvalue(generator.covariance(trial_seed(s.seed, 0)));
    }

    const SnrEstimate e = estimate_snr(lmax, scn, config.beta, table);
    write_comment(out, config);
    out << "lmax,scn,beta,snr_db,clamped,method\n";
    write_csv_row(out, {format_number(lmax), format_number(scn), format_number(config.beta), format_number(e.snr_db),
                        e.clamped ? (e.side == Clamp::low ? "low" : "high") : "no", e.method});
    if (e.clamped)
        err << "note: lambda_max " << format_number(lmax) << " lies outside the table, estimate clamped\n";
    return kExitOk;
}

int cmd_mse(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    MseOptions options;
    options.convention = config.convention;
    options.covariance_model = config.covariance_model;
    options.signal_case = config.signal_case;
    options.table_step_db = config.table_step;
    options.workers = config.workers;
    const auto points = mse_sweep(config.scn, config.beta, config.snr_db, config.mse_n, config.n_trials, config.seed,
                                  options);
    write_comment(out, config);
    out << "scn,snr_db,mse\n";
    for (const auto &pt : points)
    {
        write_csv_row(out, {format_number(pt.scn), format_number(pt.snr_db), format_number(pt.mse)});
        if (pt.clamped > 0)
            err << "note: scn=" << format_number(pt.scn) << " snr_db=" << format_number(pt.snr_db) << ": "
                << pt.clamped << " estimates clamped to the table range\n";
    }
    return kExitOk;
}

int run_experiment(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    config.validate();
    const std::string &e = config.experiment;
    if (e == "support")
        return cmd_support(config, out, err);
    if (e == "density")
        return cmd_density(config, out, err);
    if (e == "mc-sense")
        return cmd_mc_sense(config, out, err);
    if (e == "lookup")
        return cmd_lookup(config, out, err);
    if (e == "estimate")
        return cmd_estimate(config, out, err);
    if (e == "mse")
        return cmd_mse(config, out, err);
    throw ConfigError("unknown experiment '" + e + "'");
}

} // namespace eigsense
