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

#include "eigsense/matrix_sim.hpp"
#include "eigsense/correlation_model.hpp"
#include "eigsense/errors.hpp"
#include "eigsense/trial_runner.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace eigsense
{

std::string_view to_string(Hypothesis h)
{
    return h == Hypothesis::h0 ? "H0" : "H1";
}

std::string_view to_string(SignalCase c)
{
    return c == SignalCase::case1 ? "case1" : "case2";
}

std::string_view to_string(CovarianceModel m)
{
    return m == CovarianceModel::independent_sum ? "independent-sum" : "additive";
}

SignalCase parse_signal_case(std::string_view text)
{
    if (text == "case1" || text == "1")
        return SignalCase::case1;
    if (text == "case2" || text == "2")
        return SignalCase::case2;
    throw ConfigError("unknown signal case '" + std::string(text) + "' (case1 | case2)");
}

CovarianceModel parse_covariance_model(std::string_view text)
{
    if (text == "independent-sum")
        return CovarianceModel::independent_sum;
    if (text == "additive")
        return CovarianceModel::additive;
    throw ConfigError("unknown covariance model '" + std::string(text) + "' (independent-sum | additive)");
}

double db_to_power(double db)
{
    return std::pow(10.0, db / 10.0);
}

double power_to_db(double power)
{
    if (!(power > 0.0))
        throw DomainError("power_to_db: power must be > 0");
    return 10.0 * std::log10(power);
}

void Scenario::validate() const
{
    if (M < 1)
        throw DomainError("Scenario: M must be >= 1");
    if (N < M)
        throw DomainError("Scenario: N must be >= M");
    if (!std::isfinite(p) || p < 0.0)
        throw DomainError("Scenario: p must be finite and >= 0");
    if (!std::isfinite(rho) || rho < 0.0 || rho >= 1.0)
        throw DomainError("Scenario: rho must lie in [0, 1)");
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index)
{
    auto mix = [](std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master) ^ index);
}

void fill_ccs_gaussian(Eigen::MatrixXcd &out, std::mt19937_64 &engine)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Complex *data = out.data();
    for (Eigen::Index k = 0; k < out.size(); ++k)
    {
        const double re = normal(engine);
        const double im = normal(engine);
        data[k] = {re, im};
    }
}

Eigen::MatrixXcd gen_ccs_gaussian(int rows, int cols, std::uint64_t seed)
{
    if (rows < 1 || cols < 1)
        throw DomainError("gen_ccs_gaussian: rows and cols must be >= 1");
    std::mt19937_64 engine(seed);
    Eigen::MatrixXcd out(rows, cols);
    fill_ccs_gaussian(out, engine);
    return out;
}

Eigen::MatrixXcd ReceivedParts::received() const
{
    if (signal.size() == 0)
        return noise;
    return signal + noise;
}

TrialGenerator::TrialGenerator(const Scenario &scenario) : scenario_(scenario)
{
    scenario_.validate();
    if (scenario_.rho > 0.0)
        coloring_ = matrix_sqrt_psd(exponential_theta({scenario_.rho, scenario_.M}));
}

ReceivedParts TrialGenerator::draw(std::uint64_t seed) const
{
    const int M = scenario_.M, N = scenario_.N;
    std::mt19937_64 engine(seed);

    // Noise first, so that H0 and H1 trials with the same seed share their noise
    ReceivedParts parts;
    Eigen::MatrixXcd z(M, N);
    fill_ccs_gaussian(z, engine);
    if (coloring_.size() > 0)
        parts.noise = coloring_.cast<Complex>() * z;
    else
        parts.noise = std::move(z);

    if (scenario_.hypothesis == Hypothesis::h1)
    {
        Eigen::MatrixXcd h(M, N);
        fill_ccs_gaussian(h, engine);
        const double amplitude = std::sqrt(scenario_.p);
        if (scenario_.signal_case == SignalCase::case2)
        {
            Eigen::MatrixXcd symbols(N, 1);
            fill_ccs_gaussian(symbols, engine);
            parts.signal = amplitude * (h * symbols.col(0).asDiagonal());
        }
        else
            parts.signal = amplitude * h; // s = 1
    }
    return parts;
}

Eigen::MatrixXcd TrialGenerator::covariance(const ReceivedParts &parts) const
{
    if (parts.signal.size() == 0 || scenario_.covariance_model == CovarianceModel::additive)
        return sample_covariance(parts.received());

    const int M = scenario_.M;
    const double scale = 1.0 / static_cast<double>(scenario_.N);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(M, M);
    r.selfadjointView<Eigen::Lower>().rankUpdate(parts.signal, scale);
    r.selfadjointView<Eigen::Lower>().rankUpdate(parts.noise, scale);
    r.triangularView<Eigen::StrictlyUpper>() = r.adjoint();
    return r;
}

Eigen::MatrixXcd gen_received(const Scenario &scenario)
{
    return TrialGenerator(scenario).draw(scenario.seed).received();
}

Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd &Y)
{
    if (Y.cols() < 1)
        throw DomainError("sample_covariance: Y needs at least one column");
    const Eigen::Index M = Y.rows();
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(M, M);
    r.selfadjointView<Eigen::Lower>().rankUpdate(Y, 1.0 / static_cast<double>(Y.cols()));
    r.triangularView<Eigen::StrictlyUpper>() = r.adjoint();
    return r;
}

namespace
{

void require_hermitian(const Eigen::MatrixXcd &R, const char *where)
{
    if (R.rows() != R.cols() || R.rows() == 0)
        throw DomainError(std::string(where) + ": matrix must be square and non-empty");
    const double scale = std::max(1.0, R.cwiseAbs().maxCoeff());
    if ((R - R.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw DomainError(std::string(where) + ": matrix is not Hermitian");
}

} // namespace

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &R)
{
    require_hermitian(R, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(R, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        throw NumericalBranchError("hermitian_eigenvalues: eigenvalue iteration did not converge");
    const Eigen::VectorXd &values = eig.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

double largest_eigenvalue(const Eigen::MatrixXcd &R, double tolerance)
{
    require_hermitian(R, "largest_eigenvalue");
    const Eigen::Index n = R.rows();
    if (n <= 64)
        return hermitian_eigenvalues(R).back();

    const Eigen::Index max_steps = std::min<Eigen::Index>(n, 400);
    Eigen::MatrixXcd basis(n, max_steps);
    std::vector<double> alpha, beta;

    // Fixed pseudo-random start vector: reproducible and almost surely not orthogonal to the top eigenvector
    Eigen::MatrixXcd start(n, 1);
    std::mt19937_64 engine(0x6c616e637a6f73ULL);
    fill_ccs_gaussian(start, engine);
    basis.col(0) = start.col(0).normalized();

    Eigen::VectorXcd w(n);
    double theta = 0.0;
    for (Eigen::Index j = 0; j < max_steps; ++j)
    {
        w.noalias() = R * basis.col(j);
        alpha.push_back(basis.col(j).dot(w).real());
        // Full reorthogonalization, applied twice
        for (int pass = 0; pass < 2; ++pass)
            w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * w);
        const double next = w.norm();

        const bool last = j + 1 == max_steps;
        if (j % 4 == 3 || last || next == 0.0)
        {
            const Eigen::Index k = j + 1;
            Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
            Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                        : Eigen::VectorXd();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            theta = tri.eigenvalues()(k - 1);
            const double residual = next * std::abs(tri.eigenvectors()(k - 1, k - 1));
            if (residual <= tolerance * std::max(std::abs(theta), 1e-300) || last || next == 0.0)
                return theta;
        }
        beta.push_back(next);
        basis.col(j + 1) = w / next;
    }
    return theta;
}

double empirical_scn(std::span<const double> eigenvalues)
{
    if (eigenvalues.empty())
        throw DegenerateInputError("empirical_scn: empty spectrum");
    const double top = *std::max_element(eigenvalues.begin(), eigenvalues.end());
    if (!(top > 0.0))
        throw DegenerateInputError("empirical_scn: no positive eigenvalue");
    const double cutoff = 1e-12 * top;
    double bottom = top;
    for (const double v : eigenvalues)
        if (v > cutoff)
            bottom = std::min(bottom, v);
    return top / bottom;
}

double empirical_scn(const SampleStats &stats)
{
    return empirical_scn(stats.eigenvalues);
}

SampleStats SampleStats::from_eigenvalues(std::vector<double> eigenvalues)
{
    SampleStats stats;
    std::sort(eigenvalues.begin(), eigenvalues.end());
    for (double &v : eigenvalues)
    {
        if (v < -1e-10)
            throw DomainError("SampleStats: eigenvalue below -1e-10, matrix is not PSD");
        v = std::max(v, 0.0);
    }
    stats.eigenvalues = std::move(eigenvalues);
    stats.scn = empirical_scn(stats.eigenvalues);
    stats.lambda_max = stats.eigenvalues.back();
    return stats;
}

SampleStats SampleStats::from_covariance(const Eigen::MatrixXcd &R)
{
    return from_eigenvalues(hermitian_eigenvalues(R));
}

std::vector<double> pooled_eigenvalues(const Scenario &scenario, int n_trials, int workers, double scale)
{
    if (n_trials < 1)
        throw DomainError("pooled_eigenvalues: n_trials must be >= 1");
    const TrialGenerator generator(scenario);
    const auto per_trial = run_trials<std::vector<double>>(
        static_cast<std::size_t>(n_trials), workers, [&](std::size_t i)
        { return hermitian_eigenvalues(generator.covariance(trial_seed(scenario.seed, i))); });

    std::vector<double> pooled;
    pooled.reserve(static_cast<std::size_t>(n_trials) * static_cast<std::size_t>(scenario.M));
    for (const auto &values : per_trial)
        for (const double v : values)
            pooled.push_back(scale * std::max(v, 0.0));
    return pooled;
}

Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins)
{
    if (!(hi > lo) || bins < 1)
        throw DomainError("make_histogram: need hi > lo and bins >= 1");
    if (samples.empty())
        throw DegenerateInputError("make_histogram: no samples");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.mass.assign(static_cast<std::size_t>(bins), 0.0);
    const double unit = 1.0 / static_cast<double>(samples.size());
    const double width = h.bin_width();
    for (const double x : samples)
    {
        if (x < lo || x >= hi)
        {
            h.outside += unit;
            continue;
        }
        const auto bin = std::min(static_cast<std::size_t>((x - lo) / width), h.mass.size() - 1);
        h.mass[bin] += unit;
    }
    return h;
}

double l1_distance(const Histogram &histogram, const AepdfCurve &theory)
{
    const auto &pts = theory.points;
    if (pts.size() < 2)
        throw DomainError("l1_distance: theoretical curve needs at least two points");

    // Cumulative mass of the continuous part at each grid node
    std::vector<double> cumulative(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i)
        cumulative[i] = cumulative[i - 1] +
                        0.5 * (pts[i].density + pts[i - 1].density) * (pts[i].lambda - pts[i - 1].lambda);

    auto cdf = [&](double x)
    {
        double atom = x > 0.0 ? theory.mass_at_zero : 0.0;
        if (x <= pts.front().lambda)
            return atom;
        if (x >= pts.back().lambda)
            return atom + cumulative.back();
        const auto it = std::upper_bound(pts.begin(), pts.end(), x,
                                         [](double v, const AepdfPoint &p) { return v < p.lambda; });
        const std::size_t i = static_cast<std::size_t>(it - pts.begin()) - 1;
        const double t = x - pts[i].lambda;
        const double slope = (pts[i + 1].density - pts[i].density) / (pts[i + 1].lambda - pts[i].lambda);
        return atom + cumulative[i] + t * (pts[i].density + 0.5 * slope * t);
    };

    // An atom exactly at the lower edge belongs to the first bin
    auto cdf_left = [&](double x) { return x == 0.0 ? 0.0 : cdf(x); };

    const double width = histogram.bin_width();
    double distance = 0.0, inside = 0.0;
    for (std::size_t b = 0; b < histogram.mass.size(); ++b)
    {
        const double a = histogram.lo + width * static_cast<double>(b);
        const double t = cdf(a + width) - (b == 0 ? cdf_left(a) : cdf(a));
        inside += t;
        distance += std::abs(histogram.mass[b] - t);
    }
    const double theory_total = theory.mass_at_zero + cumulative.back();
    return distance + histogram.outside + std::max(theory_total - inside, 0.0);
}

} // namespace eigsense
