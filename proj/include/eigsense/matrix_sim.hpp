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

#include "eigsense/rmt_spectra.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace eigsense
{

enum class Hypothesis
{
    h0,
    h1
};

// case1: one constant symbol s = 1 during the sensing window (the signal part is Wishart, as the limiting laws assume)
// case2: a fresh Gaussian symbol for every sample (Gaussian symbol moduli widen the signal spectrum)
enum class SignalCase
{
    case1,
    case2
};

// How the received covariance combines its parts.
// independent_sum: R = (p/N) H H^H + (1/N) Zc Zc^H, the free sum whose spectrum the polynomial laws describe.
// additive:        R = (1/N) Y Y^H with Y = sqrt(p) H S + Zc taken literally.
enum class CovarianceModel
{
    independent_sum,
    additive
};

std::string_view to_string(Hypothesis h);
std::string_view to_string(SignalCase c);
std::string_view to_string(CovarianceModel m);
SignalCase parse_signal_case(std::string_view text);
CovarianceModel parse_covariance_model(std::string_view text);

double db_to_power(double db);
double power_to_db(double power);

struct Scenario
{
    Hypothesis hypothesis = Hypothesis::h0;
    SignalCase signal_case = SignalCase::case1;
    double p = 1.0; // linear signal power, unit noise power
    int M = 10;
    int N = 60;
    double rho = 0.0;
    std::uint64_t seed = 1;
    CovarianceModel covariance_model = CovarianceModel::independent_sum;

    double beta() const { return static_cast<double>(N) / static_cast<double>(M); }
    void validate() const;
};

// Seed of trial `index` under a master seed (splitmix64 finalizer of the pair)
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Unit-variance circularly symmetric complex Gaussian entries, real and imaginary parts of variance 1/2
Eigen::MatrixXcd gen_ccs_gaussian(int rows, int cols, std::uint64_t seed);
void fill_ccs_gaussian(Eigen::MatrixXcd &out, std::mt19937_64 &engine);

struct ReceivedParts
{
    Eigen::MatrixXcd signal; // sqrt(p) H s or sqrt(p) H S_d; empty under H0
    Eigen::MatrixXcd noise;  // Theta^(1/2) Z

    Eigen::MatrixXcd received() const;
};

// Draws trials of one scenario. The coloring matrix Theta^(1/2) is computed once on construction.
class TrialGenerator
{
public:
    explicit TrialGenerator(const Scenario &scenario);

    const Scenario &scenario() const { return scenario_; }
    ReceivedParts draw(std::uint64_t seed) const;
    Eigen::MatrixXcd covariance(const ReceivedParts &parts) const;
    Eigen::MatrixXcd covariance(std::uint64_t seed) const { return covariance(draw(seed)); }

private:
    Scenario scenario_;
    Eigen::MatrixXd coloring_; // empty when rho == 0
};

// Y for the scenario's own seed
Eigen::MatrixXcd gen_received(const Scenario &scenario);

// (1/N) Y Y^H
Eigen::MatrixXcd sample_covariance(const Eigen::MatrixXcd &Y);

// Ascending eigenvalues of a Hermitian matrix; DomainError when the asymmetry exceeds 1e-10 (relative)
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &R);

// Largest eigenvalue by Lanczos with full reorthogonalization (dense solver for small matrices)
double largest_eigenvalue(const Eigen::MatrixXcd &R, double tolerance = 1e-10);

struct SampleStats
{
    std::vector<double> eigenvalues; // ascending, negatives from round-off set to 0
    double lambda_max = 0.0;
    double scn = 1.0;

    static SampleStats from_eigenvalues(std::vector<double> eigenvalues);
    static SampleStats from_covariance(const Eigen::MatrixXcd &R);
};

// max / min over the eigenvalues above 1e-12 * max; DegenerateInputError for an all-zero spectrum
double empirical_scn(std::span<const double> eigenvalues);
double empirical_scn(const SampleStats &stats);

// Eigenvalues of n_trials covariances pooled in trial order, each multiplied by `scale`
std::vector<double> pooled_eigenvalues(const Scenario &scenario, int n_trials, int workers, double scale = 1.0);

struct Histogram
{
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> mass; // fraction of all samples per bin
    double outside = 0.0;     // fraction of samples outside [lo, hi)

    double bin_width() const { return (hi - lo) / static_cast<double>(mass.size()); }
    double density(std::size_t bin) const { return mass[bin] / bin_width(); }
};

Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins);

// L1 distance between the empirical and the theoretical law, measured on the histogram bins plus the mass each side
// puts outside [lo, hi). Theoretical bin masses integrate the piecewise-linear curve; its atom sits at 0.
double l1_distance(const Histogram &histogram, const AepdfCurve &theory);

} // namespace eigsense
