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

#include "eigsense/detector.hpp"
#include "eigsense/correlation_model.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/rmt_spectra.hpp"
#include "eigsense/trial_runner.hpp"

#include <cmath>

namespace eigsense
{

std::string_view to_string(DetectorKind kind)
{
    return kind == DetectorKind::marchenko_pastur ? "MP" : "Tilted";
}

double threshold_mp(double beta)
{
    return mp_support(beta).scn;
}

double threshold_tilted(double beta, double mu)
{
    return tilted_support(beta, mu).scn;
}

Decision decide(double scn, double threshold)
{
    Decision d;
    d.statistic = scn;
    d.threshold = threshold;
    d.value = scn > threshold ? Hypothesis::h1 : Hypothesis::h0;
    return d;
}

namespace
{

SensingResult tally(std::span<const double> scn, int h0_trials, double threshold)
{
    SensingResult r;
    r.trials = static_cast<int>(scn.size());
    r.h0_trials = h0_trials;
    r.h1_trials = r.trials - h0_trials;
    r.threshold = threshold;
    r.degenerate_threshold = std::isinf(threshold);
    for (int i = 0; i < r.trials; ++i)
    {
        const bool says_h1 = decide(scn[static_cast<std::size_t>(i)], threshold).value == Hypothesis::h1;
        if (i < h0_trials && says_h1)
            ++r.false_alarms;
        else if (i >= h0_trials && !says_h1)
            ++r.misses;
    }
    r.correct = r.trials - r.false_alarms - r.misses;
    return r;
}

} // namespace

SensingComparison mc_compare(const Scenario &scenario_template, int n_trials, int workers)
{
    if (n_trials < 1)
        throw DomainError("mc_compare: n_trials must be >= 1");
    scenario_template.validate();

    Scenario h0 = scenario_template, h1 = scenario_template;
    h0.hypothesis = Hypothesis::h0;
    h1.hypothesis = Hypothesis::h1;
    const TrialGenerator gen0(h0), gen1(h1);
    const int h0_trials = n_trials / 2;

    const auto scn = run_trials<double>(static_cast<std::size_t>(n_trials), workers,
                                        [&](std::size_t i)
                                        {
                                            const auto &gen = static_cast<int>(i) < h0_trials ? gen0 : gen1;
                                            const auto seed = trial_seed(scenario_template.seed, i);
                                            return empirical_scn(hermitian_eigenvalues(gen.covariance(seed)));
                                        });

    const double beta = scenario_template.beta();
    SensingComparison out;
    out.mp = tally(scn, h0_trials, threshold_mp(beta));
    out.tilted = tally(scn, h0_trials, threshold_tilted(beta, rho_to_mu(scenario_template.rho)));
    return out;
}

SensingResult mc_correct_ratio(const Scenario &scenario_template, DetectorKind kind, int n_trials, int workers)
{
    const SensingComparison both = mc_compare(scenario_template, n_trials, workers);
    return kind == DetectorKind::marchenko_pastur ? both.mp : both.tilted;
}

std::vector<FsPoint> fs_sweep(double epsilon, int N, double snr_db, std::span<const int> M_values, int n_trials,
                              std::uint64_t seed, int workers, const Scenario &scenario_template)
{
    std::vector<FsPoint> points;
    points.reserve(M_values.size());
    for (const int M : M_values)
    {
        FsPoint point;
        point.M = M;
        try
        {
            point.rho = fs_rate_to_rho(epsilon, M, N);
        }
        catch (const OutOfModelError &)
        {
            point.out_of_model = true;
            points.push_back(point);
            continue;
        }
        Scenario s = scenario_template;
        s.M = M;
        s.N = N;
        s.p = db_to_power(snr_db);
        s.rho = point.rho;
        s.seed = seed;
        point.result = mc_compare(s, n_trials, workers);
        points.push_back(point);
    }
    return points;
}

} // namespace eigsense
