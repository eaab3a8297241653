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

#include <complex>
#include <span>
#include <vector>

namespace eigsense
{

using Complex = std::complex<double>;

// Coefficients are ordered highest degree first: c[0] x^n + c[1] x^(n-1) + ... + c[n]

Complex polynomial_value(std::span<const Complex> coeffs, Complex x);

// All roots, computed as eigenvalues of the companion matrix. Leading zero coefficients are dropped;
// degree 1 and 2 are solved in closed form. Throws DomainError for a constant polynomial.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

// A few Newton steps; returns the input unchanged if a step would increase the residual
Complex polish_root(std::span<const Complex> coeffs, Complex root, int iterations = 3);

} // namespace eigsense
