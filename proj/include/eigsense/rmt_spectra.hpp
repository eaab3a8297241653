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

#include "eigsense/polynomial.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace eigsense
{

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Support [lambda_min, lambda_max] of a limiting eigenvalue density; scn is +inf when lambda_min == 0
struct SpectralSupport
{
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double scn = kInfinity;

    static SpectralSupport from_edges(double lambda_min, double lambda_max);
    bool scn_is_infinite() const { return scn == kInfinity; }
};

struct AepdfPoint
{
    double lambda;
    double density;
};

// Sampled density. The continuous part lives in points, a point mass at zero is kept separately.
struct AepdfCurve
{
    std::vector<AepdfPoint> points;
    double mass_at_zero = 0.0;

    double continuous_mass() const; // trapezoidal rule
    double total_mass() const { return continuous_mass() + mass_at_zero; }
    void validate() const;
};

// Marchenko-Pastur law, mean-one normalization with atom (1 - 1/beta)+ at zero
SpectralSupport mp_support(double beta);
double mp_density(double beta, double lambda);

// Correlated Wishart spectrum with tilted semicircular correlation law of strength mu
SpectralSupport tilted_support(double beta, double mu);
double tilted_noise_density(double beta, double mu, double lambda);

// Tilted semicircular law of the exponential correlation matrix
struct ThetaLaw
{
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double mu = 0.0;
    bool point_mass = true; // rho == 0: all mass at lambda = 1
};

ThetaLaw theta_law(double rho);
double theta_density(double rho, double lambda);

// Stieltjes transforms S(z) = int dF(t) / (t - z), Im z > 0.
// Here beta scales the free Poisson law R(w) = beta / (1 - w): the spectrum of (1/M) Y Y^H for Y of size M x N with
// beta = N / M. It has mean beta, the same support edges as mp_support(beta) and an atom (1 - beta)+ at zero.
Complex stieltjes_mp(Complex z, double beta);
Complex stieltjes_noise_correlated(Complex z, double beta, double mu);
Complex stieltjes_signal_white(Complex z, double p, double beta);
Complex stieltjes_signal_correlated(Complex z, double p, double beta, double mu);

// Polynomial whose roots contain S(z). The admissible root is followed by continuation from z = x + iY (Y large,
// where S ~ -1/z) down to the requested Im z, which keeps the branch on the physical sheet.
class StieltjesPolynomial
{
public:
    enum class Kind
    {
        marchenko_pastur,
        noise_correlated,
        signal_white,
        signal_correlated
    };

    static StieltjesPolynomial marchenko_pastur(double beta);
    static StieltjesPolynomial noise_correlated(double beta, double mu);
    static StieltjesPolynomial signal_white(double p, double beta);
    static StieltjesPolynomial signal_correlated(double p, double beta, double mu);

    Kind kind() const { return kind_; }
    int degree() const;
    double p() const { return p_; }
    double beta() const { return beta_; }
    double mu() const { return mu_; }

    std::vector<Complex> coefficients(Complex z) const;
    Complex evaluate(Complex z) const;

    double mass_at_zero() const;
    double upper_edge_bound() const; // guaranteed to lie at or above the right support edge

private:
    StieltjesPolynomial(Kind kind, double p, double beta, double mu);
    std::size_t fill(Complex z, std::array<Complex, 5> &c) const;

    Kind kind_;
    double p_;
    double beta_;
    double mu_;
};

using StieltjesFn = std::function<Complex(Complex)>;

inline constexpr double kDefaultYOffset = 1e-6;
inline constexpr double kDefaultDensityFloor = 1e-4;
inline constexpr std::size_t kDefaultGridPoints = 2000;

// Grid on [0, upper] with spacing growing linearly, dense near the origin where hard edges sit
std::vector<double> default_grid(double upper, std::size_t points = kDefaultGridPoints);

// density = Im S(lambda + i y) / pi, minus the Lorentzian of a known atom at zero, clipped at 0
AepdfCurve density_from_stieltjes(const StieltjesFn &transform, std::span<const double> grid,
                                  double y_offset = kDefaultYOffset, double mass_at_zero = 0.0);
AepdfCurve density_curve(const StieltjesPolynomial &poly, std::span<const double> grid,
                         double y_offset = kDefaultYOffset);

// Support from the sampled density. The overload with a density functor refines both edges by bisection.
SpectralSupport support_from_density(const AepdfCurve &curve, double density_floor = kDefaultDensityFloor);
SpectralSupport support_from_density(const AepdfCurve &curve, double density_floor,
                                     const std::function<double(double)> &density_at, double tolerance = 1e-4);

struct SupportOptions
{
    std::size_t grid_points = kDefaultGridPoints;
    double y_offset = kDefaultYOffset;
    double density_floor = kDefaultDensityFloor;
    double tolerance = 1e-4;
};

SpectralSupport support_of(const StieltjesPolynomial &poly, const SupportOptions &options = {});

// Free-probability transforms
Complex r_mp(double beta, Complex z);
Complex r_scaled(double a, double beta, Complex z);
Complex sigma_mp(double beta, Complex z);
Complex r_noise_correlated(double beta, double mu, Complex z);

} // namespace eigsense
