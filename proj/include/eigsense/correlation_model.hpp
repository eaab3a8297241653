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

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace eigsense
{

// How the condition number of the correlation law relates to rho.
// spectrum_ratio: SCN = sigma2 / sigma1 = ((1 + rho) / (1 - rho))^2, consistent with mu = rho^2 / (1 - rho^2).
// paper_linear:   SCN = (1 + rho) / (1 - rho).
enum class ScnConvention
{
    spectrum_ratio,
    paper_linear
};

std::string_view to_string(ScnConvention convention);
ScnConvention parse_scn_convention(std::string_view text);

double rho_to_mu(double rho);
double mu_to_rho(double mu);
double rho_to_scn(double rho, ScnConvention convention = ScnConvention::spectrum_ratio);
double scn_to_rho(double scn, ScnConvention convention = ScnConvention::spectrum_ratio);

// Exponential correlation across M receive dimensions
struct CorrelationSpec
{
    double rho = 0.0;
    int M = 1;
    ScnConvention convention = ScnConvention::spectrum_ratio;

    CorrelationSpec() = default;
    CorrelationSpec(double rho, int M, ScnConvention convention = ScnConvention::spectrum_ratio);

    double mu() const { return rho_to_mu(rho); }
    double scn_theta() const { return rho_to_scn(rho, convention); }
};

// theta_ij = rho^|i - j|
Eigen::MatrixXd exponential_theta(const CorrelationSpec &spec);

// Symmetric PSD square root through the eigendecomposition; eigenvalues in [-1e-10, 0) are treated as 0
Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd &theta);

// Fractional-sampling model: rho = epsilon * (M - 1) / N. Throws OutOfModelError when rho leaves [0, 1).
double fs_rate_to_rho(double epsilon, int M, int N);

} // namespace eigsense
