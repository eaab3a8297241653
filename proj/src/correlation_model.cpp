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

#include "eigsense/correlation_model.hpp"
#include "eigsense/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace eigsense
{

namespace
{

void require_rho(double rho, const char *where)
{
    if (!std::isfinite(rho) || rho < 0.0 || rho >= 1.0)
        throw DomainError(std::string(where) + ": rho must lie in [0, 1)");
}

} // namespace

std::string_view to_string(ScnConvention convention)
{
    return convention == ScnConvention::spectrum_ratio ? "spectrum-ratio" : "paper-linear";
}

ScnConvention parse_scn_convention(std::string_view text)
{
    if (text == "spectrum-ratio")
        return ScnConvention::spectrum_ratio;
    if (text == "paper-linear")
        return ScnConvention::paper_linear;
    throw ConfigError("unknown SCN convention '" + std::string(text) + "' (spectrum-ratio | paper-linear)");
}

double rho_to_mu(double rho)
{
    require_rho(rho, "rho_to_mu");
    return rho * rho / (1.0 - rho * rho);
}

double mu_to_rho(double mu)
{
    if (!std::isfinite(mu) || mu < 0.0)
        throw DomainError("mu_to_rho: mu must be finite and >= 0");
    return std::sqrt(mu / (1.0 + mu));
}

double rho_to_scn(double rho, ScnConvention convention)
{
    require_rho(rho, "rho_to_scn");
    const double linear = (1.0 + rho) / (1.0 - rho);
    return convention == ScnConvention::spectrum_ratio ? linear * linear : linear;
}

double scn_to_rho(double scn, ScnConvention convention)
{
    if (!std::isfinite(scn) || scn < 1.0)
        throw DomainError("scn_to_rho: scn must be finite and >= 1");
    const double linear = convention == ScnConvention::spectrum_ratio ? std::sqrt(scn) : scn;
    return (linear - 1.0) / (linear + 1.0);
}

CorrelationSpec::CorrelationSpec(double rho_, int M_, ScnConvention convention_)
    : rho(rho_), M(M_), convention(convention_)
{
    require_rho(rho, "CorrelationSpec");
    if (M < 1)
        throw DomainError("CorrelationSpec: M must be >= 1");
}

Eigen::MatrixXd exponential_theta(const CorrelationSpec &spec)
{
    require_rho(spec.rho, "exponential_theta");
    if (spec.M < 1)
        throw DomainError("exponential_theta: M must be >= 1");
    Eigen::MatrixXd theta(spec.M, spec.M);
    for (int i = 0; i < spec.M; ++i)
        for (int j = 0; j < spec.M; ++j)
            theta(i, j) = std::pow(spec.rho, std::abs(i - j));
    return theta;
}

Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd &theta)
{
    if (theta.rows() != theta.cols())
        throw DomainError("matrix_sqrt_psd: matrix must be square");
    if ((theta - theta.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, theta.cwiseAbs().maxCoeff()))
        throw DomainError("matrix_sqrt_psd: matrix must be symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(theta);
    if (eig.info() != Eigen::Success)
        throw NotPsdError("matrix_sqrt_psd: eigendecomposition failed");
    Eigen::VectorXd values = eig.eigenvalues();
    if (values.size() > 0 && values.minCoeff() < -1e-10)
        throw NotPsdError("matrix_sqrt_psd: negative eigenvalue " + std::to_string(values.minCoeff()));
    values = values.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * values.asDiagonal() * eig.eigenvectors().transpose();
}

double fs_rate_to_rho(double epsilon, int M, int N)
{
    if (!std::isfinite(epsilon) || epsilon < 0.0)
        throw DomainError("fs_rate_to_rho: epsilon must be finite and >= 0");
    if (M < 1 || N < M)
        throw DomainError("fs_rate_to_rho: need N >= M >= 1");
    const double rho = epsilon * static_cast<double>(M - 1) / static_cast<double>(N);
    if (rho >= 1.0)
        throw OutOfModelError("fs_rate_to_rho: epsilon=" + std::to_string(epsilon) + ", M=" + std::to_string(M) +
                              ", N=" + std::to_string(N) + " gives rho=" + std::to_string(rho) + " >= 1");
    return rho;
}

} // namespace eigsense
