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

#include "eigsense/polynomial.hpp"
#include "eigsense/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace eigsense
{

namespace
{

template <int Size>
std::vector<Complex> companion_roots(std::span<const Complex> c)
{
    using Matrix = Eigen::Matrix<Complex, Size, Size>;
    const Eigen::Index n = static_cast<Eigen::Index>(c.size()) - 1;
    Matrix companion = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        companion(0, k) = -c[static_cast<std::size_t>(k) + 1] / c[0];
    for (Eigen::Index k = 1; k < n; ++k)
        companion(k, k - 1) = 1.0;

    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw NumericalBranchError("polynomial_roots: companion eigenvalue iteration did not converge");

    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k)
        roots[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    return roots;
}

} // namespace

Complex polynomial_value(std::span<const Complex> coeffs, Complex x)
{
    Complex value = 0.0;
    for (const Complex &c : coeffs)
        value = value * x + c;
    return value;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs)
{
    std::size_t first = 0;
    while (first < coeffs.size() && coeffs[first] == Complex(0.0))
        ++first;
    std::span<const Complex> c = coeffs.subspan(first);
    if (c.size() < 2)
        throw DomainError("polynomial_roots: polynomial has no roots (degree < 1)");

    const std::size_t degree = c.size() - 1;
    if (degree == 1)
        return {-c[1] / c[0]};

    if (degree == 2)
    {
        // Cancellation-free form: q = -(b + sign * sqrt(disc)) / 2, roots q/a and c/q
        const Complex a = c[0], b = c[1], k = c[2];
        Complex root = std::sqrt(b * b - 4.0 * a * k);
        if (std::real(std::conj(b) * root) < 0.0)
            root = -root;
        const Complex q = -0.5 * (b + root);
        if (q == Complex(0.0))
            return {0.0, 0.0};
        return {q / a, k / q};
    }

    if (degree == 3)
        return companion_roots<3>(c);
    if (degree == 4)
        return companion_roots<4>(c);
    return companion_roots<Eigen::Dynamic>(c);
}

Complex polish_root(std::span<const Complex> coeffs, Complex root, int iterations)
{
    for (int it = 0; it < iterations; ++it)
    {
        Complex value = 0.0, slope = 0.0;
        for (const Complex &c : coeffs)
        {
            slope = slope * root + value;
            value = value * root + c;
        }
        if (slope == Complex(0.0))
            break;
        const Complex next = root - value / slope;
        if (std::abs(polynomial_value(coeffs, next)) > std::abs(value))
            break;
        root = next;
    }
    return root;
}

} // namespace eigsense
