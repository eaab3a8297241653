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

#include "eigsense/rmt_spectra.hpp"
#include "eigsense/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace eigsense
{

namespace
{

constexpr double kPi = std::numbers::pi;

void require_beta(double beta, const char *where)
{
    if (!std::isfinite(beta) || beta <= 0.0)
        throw DomainError(std::string(where) + ": beta must be finite and > 0");
}

void require_mu(double mu, const char *where)
{
    if (!std::isfinite(mu) || mu < 0.0)
        throw DomainError(std::string(where) + ": mu must be finite and >= 0");
}

void require_p(double p, const char *where)
{
    if (!std::isfinite(p) || p < 0.0)
        throw DomainError(std::string(where) + ": p must be finite and >= 0");
}

void require_upper_half(Complex z, const char *where)
{
    if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(where) + ": Im z must be > 0");
}

Complex upper_root_of_quadratic(Complex a, Complex b, Complex c, const char *where)
{
    const std::array<Complex, 3> coeffs{a, b, c};
    const auto roots = polynomial_roots(coeffs);
    const Complex s = roots.size() == 1 || roots[0].imag() >= roots[1].imag() ? roots[0] : roots[1];
    if (!(s.imag() > 0.0))
        throw NumericalBranchError(std::string(where) + ": no root with positive imaginary part");
    return s;
}

// Index of the root nearest to target; roots in the upper half plane are preferred when any exist
std::size_t nearest_index(const std::vector<Complex> &roots, Complex target)
{
    std::size_t best = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].imag() >= 0.0 && (best == roots.size() || std::abs(roots[i] - target) < std::abs(roots[best] - target)))
            best = i;
    if (best == roots.size())
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (best == roots.size() || std::abs(roots[i] - target) < std::abs(roots[best] - target))
                best = i;
    return best;
}

Complex nearest_root(const std::vector<Complex> &roots, Complex target)
{
    return roots[nearest_index(roots, target)];
}

double lorentzian(double weight, double lambda, double y)
{
    return weight * y / (kPi * (lambda * lambda + y * y));
}

} // namespace

// ---- supports and closed-form densities ----

SpectralSupport SpectralSupport::from_edges(double lambda_min, double lambda_max)
{
    if (!std::isfinite(lambda_min) || !std::isfinite(lambda_max) || lambda_min < 0.0 || lambda_max < lambda_min)
        throw DomainError("SpectralSupport: need 0 <= lambda_min <= lambda_max");
    SpectralSupport s;
    s.lambda_min = lambda_min;
    s.lambda_max = lambda_max;
    s.scn = lambda_min > 0.0 ? lambda_max / lambda_min : kInfinity;
    return s;
}

double AepdfCurve::continuous_mass() const
{
    double mass = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        mass += 0.5 * (points[i].density + points[i - 1].density) * (points[i].lambda - points[i - 1].lambda);
    return mass;
}

void AepdfCurve::validate() const
{
    if (mass_at_zero < 0.0 || mass_at_zero > 1.0)
        throw DomainError("AepdfCurve: mass_at_zero outside [0, 1]");
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (!(points[i].density >= 0.0))
            throw DomainError("AepdfCurve: negative or NaN density");
        if (i > 0 && !(points[i].lambda > points[i - 1].lambda))
            throw DomainError("AepdfCurve: lambda grid is not strictly increasing");
    }
}

SpectralSupport mp_support(double beta)
{
    require_beta(beta, "mp_support");
    const double r = std::sqrt(beta);
    return SpectralSupport::from_edges((1.0 - r) * (1.0 - r), (1.0 + r) * (1.0 + r));
}

double mp_density(double beta, double lambda)
{
    require_beta(beta, "mp_density");
    if (lambda < 0.0)
        throw DomainError("mp_density: lambda must be >= 0");
    const SpectralSupport s = mp_support(beta);
    if (lambda <= s.lambda_min || lambda >= s.lambda_max || lambda == 0.0)
        return 0.0;
    return std::sqrt((lambda - s.lambda_min) * (s.lambda_max - lambda)) / (2.0 * kPi * beta * lambda);
}

SpectralSupport tilted_support(double beta, double mu)
{
    require_beta(beta, "tilted_support");
    require_mu(mu, "tilted_support");
    if (mu == 0.0)
        return mp_support(beta);
    const double upper = 1.0 + beta + 2.0 * mu * beta + 2.0 * std::sqrt(beta) * std::sqrt((1.0 + mu) * (1.0 + mu * beta));
    // lower * upper = (1 - beta)^2, which avoids cancellation and is exactly 0 at beta = 1
    const double lower = (1.0 - beta) * (1.0 - beta) / upper;
    return SpectralSupport::from_edges(lower, upper);
}

double tilted_noise_density(double beta, double mu, double lambda)
{
    const SpectralSupport s = tilted_support(beta, mu);
    if (lambda < 0.0)
        throw DomainError("tilted_noise_density: lambda must be >= 0");
    if (lambda <= s.lambda_min || lambda >= s.lambda_max || lambda == 0.0)
        return 0.0;
    return std::sqrt((lambda - s.lambda_min) * (s.lambda_max - lambda)) / (2.0 * kPi * lambda * (1.0 + lambda * mu));
}

ThetaLaw theta_law(double rho)
{
    if (!std::isfinite(rho) || rho < 0.0 || rho >= 1.0)
        throw DomainError("theta_law: rho must lie in [0, 1)");
    ThetaLaw law;
    law.sigma1 = (1.0 - rho) / (1.0 + rho);
    law.sigma2 = (1.0 + rho) / (1.0 - rho);
    law.mu = rho * rho / (1.0 - rho * rho);
    law.point_mass = rho == 0.0;
    return law;
}

double theta_density(double rho, double lambda)
{
    const ThetaLaw law = theta_law(rho);
    if (law.point_mass || lambda <= law.sigma1 || lambda >= law.sigma2)
        return 0.0;
    const double root = std::sqrt((lambda / law.sigma1 - 1.0) * (1.0 - lambda / law.sigma2));
    return root / (2.0 * kPi * law.mu * lambda * lambda);
}

// ---- Stieltjes transforms ----

Complex stieltjes_mp(Complex z, double beta)
{
    require_beta(beta, "stieltjes_mp");
    require_upper_half(z, "stieltjes_mp");
    return upper_root_of_quadratic(z, z + 1.0 - beta, 1.0, "stieltjes_mp");
}

Complex stieltjes_noise_correlated(Complex z, double beta, double mu)
{
    require_beta(beta, "stieltjes_noise_correlated");
    require_mu(mu, "stieltjes_noise_correlated");
    require_upper_half(z, "stieltjes_noise_correlated");

    // z (1 + mu z) S^2 + (z (1 + 2 mu) + 1 - beta) S + (1 + mu) = 0
    const Complex b = z * (1.0 + 2.0 * mu) + 1.0 - beta;
    const Complex lead = 2.0 * z * (1.0 + mu * z);
    const Complex root = std::sqrt((z - 1.0 - beta) * (z - 1.0 - beta) - 4.0 * beta * (1.0 + mu * z));
    const Complex s1 = (-b + root) / lead;
    const Complex s2 = (-b - root) / lead;
    // A measure on [0, inf) has Im S > 0 and Im(z S) >= 0; only one root satisfies both
    const auto score = [&z](Complex v) {
        const double a = std::abs(v);
        return a == 0.0 ? -1.0 : std::min(v.imag() / a, (z * v).imag() / (std::abs(z) * a));
    };
    const Complex s = score(s1) >= score(s2) ? s1 : s2;
    if (!(s.imag() > 0.0))
        throw NumericalBranchError("stieltjes_noise_correlated: no root with positive imaginary part");
    return s;
}

Complex stieltjes_signal_white(Complex z, double p, double beta)
{
    return StieltjesPolynomial::signal_white(p, beta).evaluate(z);
}

Complex stieltjes_signal_correlated(Complex z, double p, double beta, double mu)
{
    return StieltjesPolynomial::signal_correlated(p, beta, mu).evaluate(z);
}

StieltjesPolynomial::StieltjesPolynomial(Kind kind, double p, double beta, double mu)
    : kind_(kind), p_(p), beta_(beta), mu_(mu)
{
    require_beta(beta, "StieltjesPolynomial");
    require_mu(mu, "StieltjesPolynomial");
    require_p(p, "StieltjesPolynomial");
}

StieltjesPolynomial StieltjesPolynomial::marchenko_pastur(double beta)
{
    return StieltjesPolynomial(Kind::marchenko_pastur, 0.0, beta, 0.0);
}

StieltjesPolynomial StieltjesPolynomial::noise_correlated(double beta, double mu)
{
    return StieltjesPolynomial(Kind::noise_correlated, 0.0, beta, mu);
}

StieltjesPolynomial StieltjesPolynomial::signal_white(double p, double beta)
{
    return StieltjesPolynomial(Kind::signal_white, p, beta, 0.0);
}

StieltjesPolynomial StieltjesPolynomial::signal_correlated(double p, double beta, double mu)
{
    return StieltjesPolynomial(Kind::signal_correlated, p, beta, mu);
}

int StieltjesPolynomial::degree() const
{
    switch (kind_)
    {
    case Kind::marchenko_pastur:
    case Kind::noise_correlated:
        return 2;
    case Kind::signal_white:
        return 3;
    case Kind::signal_correlated:
        return 4;
    }
    return 0;
}

std::size_t StieltjesPolynomial::fill(Complex z, std::array<Complex, 5> &c) const
{
    const double p = p_, b = beta_, m = mu_;
    switch (kind_)
    {
    case Kind::marchenko_pastur:
        c = {z, z + 1.0 - b, 1.0};
        return 3;
    case Kind::noise_correlated:
        c = {z * (1.0 + m * z), z * (1.0 + 2.0 * m) + 1.0 - b, 1.0 + m};
        return 3;
    case Kind::signal_white:
        c = {z * p, p * (-2.0 * b + z + 1.0) + z, (1.0 - b) * (1.0 + p) + z, 1.0};
        return 4;
    case Kind::signal_correlated:
    {
        const double p2 = p * p;
        c[0] = z * p2 * (1.0 + m * z);
        c[1] = 2.0 * z * m * p * (z - p * b) + p2 * (1.0 + 2.0 * z * m + z - 2.0 * b) + 2.0 * z * p;
        c[2] = p2 * (m * (1.0 - b) * (1.0 - b) + 1.0 - b) + 2.0 * p * (1.0 + z + m * z * (2.0 - b)) + z - 3.0 * p * b +
               z * z * m;
        c[3] = 2.0 * p * (1.0 + m * (1.0 - b)) + z * (1.0 + 2.0 * m) - b * (1.0 + p) + 1.0;
        c[4] = 1.0 + m;
        return 5;
    }
    }
    return 0;
}

std::vector<Complex> StieltjesPolynomial::coefficients(Complex z) const
{
    std::array<Complex, 5> c{};
    const std::size_t n = fill(z, c);
    return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)};
}

Complex StieltjesPolynomial::evaluate(Complex z) const
{
    require_upper_half(z, "StieltjesPolynomial::evaluate");
    if (kind_ == Kind::marchenko_pastur)
        return stieltjes_mp(z, beta_);
    if (kind_ == Kind::noise_correlated)
        return stieltjes_noise_correlated(z, beta_, mu_);

    std::array<Complex, 5> c{};
    auto roots_at = [&](Complex w)
    {
        const std::size_t n = fill(w, c);
        return polynomial_roots(std::span<const Complex>(c.data(), n));
    };

    const double x = z.real(), y = z.imag();
    const double top = 1e3 * (1.0 + std::abs(x) + upper_edge_bound());
    Complex s;
    if (y >= top)
        s = nearest_root(roots_at(z), -1.0 / z);
    else
    {
        // Descend geometrically in Im z. A step is accepted only when the continued root is clearly closer to the
        // previous value than any other root; otherwise the step ratio shrinks.
        s = nearest_root(roots_at({x, top}), -1.0 / Complex(x, top));
        double current = top, ratio = 4.0;
        for (int iteration = 0; current > y; ++iteration)
        {
            if (iteration > 2000)
                throw NumericalBranchError("StieltjesPolynomial::evaluate: continuation did not reach the target");
            const double step = std::min(ratio, current / y);
            const double next = step >= current / y ? y : current / step;
            const auto roots = roots_at({x, next});
            const std::size_t chosen = nearest_index(roots, s);
            const Complex candidate = roots[chosen];
            double other = kInfinity;
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (i != chosen)
                    other = std::min(other, std::abs(roots[i] - s));
            const bool clear = std::abs(candidate - s) < 0.3 * other;
            if (clear || ratio < 1.0 + 1e-6)
            {
                s = candidate;
                current = next;
                ratio = std::min(4.0, ratio * 2.0);
            }
            else
                ratio = std::sqrt(ratio);
        }
    }

    const std::size_t n = fill(z, c);
    s = polish_root(std::span<const Complex>(c.data(), n), s);
    if (!(s.imag() > 0.0))
    {
        std::ostringstream msg;
        msg << "StieltjesPolynomial::evaluate: no root with positive imaginary part at z = " << z;
        throw NumericalBranchError(msg.str());
    }
    return s;
}

double StieltjesPolynomial::mass_at_zero() const
{
    const bool with_signal = (kind_ == Kind::signal_white || kind_ == Kind::signal_correlated) && p_ > 0.0;
    return std::max(0.0, with_signal ? 1.0 - 2.0 * beta_ : 1.0 - beta_);
}

double StieltjesPolynomial::upper_edge_bound() const
{
    // Free additive convolution: the right edge never exceeds the sum of the right edges
    const double r = 1.0 + std::sqrt(beta_);
    switch (kind_)
    {
    case Kind::marchenko_pastur:
        return r * r;
    case Kind::noise_correlated:
        return tilted_support(beta_, mu_).lambda_max;
    case Kind::signal_white:
        return (1.0 + p_) * r * r;
    case Kind::signal_correlated:
        return tilted_support(beta_, mu_).lambda_max + p_ * r * r;
    }
    return 0.0;
}

// ---- density extraction and supports ----

std::vector<double> default_grid(double upper, std::size_t points)
{
    if (!(upper > 0.0) || !std::isfinite(upper) || points < 2)
        throw DomainError("default_grid: need upper > 0 and at least 2 points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
    {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = upper * t * t;
    }
    return grid;
}

AepdfCurve density_from_stieltjes(const StieltjesFn &transform, std::span<const double> grid, double y_offset,
                                  double mass_at_zero)
{
    if (!(y_offset > 0.0))
        throw DomainError("density_from_stieltjes: y_offset must be > 0");
    if (mass_at_zero < 0.0 || mass_at_zero > 1.0)
        throw DomainError("density_from_stieltjes: mass_at_zero outside [0, 1]");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw DomainError("density_from_stieltjes: grid must be strictly increasing");

    AepdfCurve curve;
    curve.mass_at_zero = mass_at_zero;
    curve.points.reserve(grid.size());
    for (const double lambda : grid)
    {
        Complex s;
        try
        {
            s = transform({lambda, y_offset});
        }
        catch (const NumericalBranchError &e)
        {
            throw NumericalBranchError(std::string(e.what()) + " (grid lambda = " + std::to_string(lambda) + ")");
        }
        const double density = s.imag() / kPi - lorentzian(mass_at_zero, lambda, y_offset);
        curve.points.push_back({lambda, std::max(density, 0.0)});
    }
    return curve;
}

AepdfCurve density_curve(const StieltjesPolynomial &poly, std::span<const double> grid, double y_offset)
{
    return density_from_stieltjes([&poly](Complex z) { return poly.evaluate(z); }, grid, y_offset,
                                  poly.mass_at_zero());
}

namespace
{

std::pair<std::size_t, std::size_t> support_indices(const AepdfCurve &curve, double density_floor)
{
    const auto &pts = curve.points;
    std::size_t first = pts.size(), last = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].density > density_floor)
        {
            first = std::min(first, i);
            last = i;
        }
    if (first == pts.size())
        throw EmptySupportError("support_from_density: no density above the floor");
    return {first, last};
}

// Point where density_at crosses the floor inside [below, above] (density_at(below) <= floor < density_at(above))
double bisect_edge(const std::function<double(double)> &density_at, double floor, double below, double above,
                   double tolerance)
{
    while (std::abs(above - below) > tolerance)
    {
        const double mid = 0.5 * (below + above);
        if (density_at(mid) > floor)
            above = mid;
        else
            below = mid;
    }
    return 0.5 * (below + above);
}

} // namespace

SpectralSupport support_from_density(const AepdfCurve &curve, double density_floor)
{
    const auto [first, last] = support_indices(curve, density_floor);
    return SpectralSupport::from_edges(curve.points[first].lambda, curve.points[last].lambda);
}

SpectralSupport support_from_density(const AepdfCurve &curve, double density_floor,
                                     const std::function<double(double)> &density_at, double tolerance)
{
    if (!(tolerance > 0.0))
        throw DomainError("support_from_density: tolerance must be > 0");
    const auto [first, last] = support_indices(curve, density_floor);
    const auto &pts = curve.points;
    double lo = pts[first].lambda, hi = pts[last].lambda;
    if (first > 0)
        lo = bisect_edge(density_at, density_floor, pts[first - 1].lambda, lo, tolerance);
    if (last + 1 < pts.size())
        hi = bisect_edge(density_at, density_floor, pts[last + 1].lambda, hi, tolerance);
    return SpectralSupport::from_edges(lo, hi);
}

SpectralSupport support_of(const StieltjesPolynomial &poly, const SupportOptions &options)
{
    const std::vector<double> grid = default_grid(1.5 * poly.upper_edge_bound(), options.grid_points);
    const AepdfCurve curve = density_curve(poly, grid, options.y_offset);
    const double atom = poly.mass_at_zero();
    auto density_at = [&](double lambda)
    {
        const Complex s = poly.evaluate({lambda, options.y_offset});
        return std::max(s.imag() / kPi - lorentzian(atom, lambda, options.y_offset), 0.0);
    };
    return support_from_density(curve, options.density_floor, density_at, options.tolerance);
}

// ---- transforms ----

Complex r_mp(double beta, Complex z)
{
    require_beta(beta, "r_mp");
    if (z == Complex(1.0))
        throw DomainError("r_mp: pole at z = 1");
    return beta / (1.0 - z);
}

Complex r_scaled(double a, double beta, Complex z)
{
    if (!std::isfinite(a))
        throw DomainError("r_scaled: scale must be finite");
    return a * r_mp(beta, a * z);
}

Complex sigma_mp(double beta, Complex z)
{
    require_beta(beta, "sigma_mp");
    if (z == Complex(-beta))
        throw DomainError("sigma_mp: pole at z = -beta");
    return 1.0 / (z + beta);
}

Complex r_noise_correlated(double beta, double mu, Complex z)
{
    require_beta(beta, "r_noise_correlated");
    require_mu(mu, "r_noise_correlated");
    // Root of mu z R^2 + (z - 1) R + beta = 0 that is analytic at z = 0 with R(0) = beta
    const Complex w = 1.0 - z;
    Complex root = std::sqrt(w * w - 4.0 * mu * beta * z);
    if (std::real(root * std::conj(w)) < 0.0)
        root = -root;
    const Complex denominator = w + root;
    if (denominator == Complex(0.0))
        throw DomainError("r_noise_correlated: singular point");
    return 2.0 * beta / denominator;
}

} // namespace eigsense
