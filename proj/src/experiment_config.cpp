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

#include "eigsense/experiment_config.hpp"
#include "eigsense/csv.hpp"
#include "eigsense/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace eigsense
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

double parse_double(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("not a number: '" + std::string(text) + "'");
    return value;
}

template <class Int>
Int parse_integer(std::string_view text)
{
    text = trim(text);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("not an integer: '" + std::string(text) + "'");
    return value;
}

bool parse_bool(std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw ConfigError("not a boolean: '" + std::string(text) + "'");
}

std::string exact(double v)
{
    return format_number(v, 17);
}

std::string join(const std::vector<double> &values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + exact(values[i]);
    return s;
}

std::string join(const std::vector<int> &values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s;
}

std::string one_of(std::string_view value, std::initializer_list<std::string_view> allowed, std::string_view key)
{
    value = trim(value);
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end())
    {
        std::string msg = "invalid " + std::string(key) + " '" + std::string(value) + "' (";
        bool first = true;
        for (const auto a : allowed)
        {
            msg += (first ? "" : " | ") + std::string(a);
            first = false;
        }
        throw ConfigError(msg + ")");
    }
    return std::string(value);
}

} // namespace

std::vector<double> parse_number_list(std::string_view text)
{
    std::vector<double> values;
    for (const auto item : split(text, ','))
    {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos)
        {
            values.push_back(parse_double(item));
            continue;
        }
        const double lo = parse_double(item.substr(0, dots));
        std::string_view rest = item.substr(dots + 2);
        double step = 1.0;
        if (const auto colon = rest.find(':'); colon != std::string_view::npos)
        {
            step = parse_double(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        const double hi = parse_double(rest);
        if (!(step > 0.0) || hi < lo)
            throw ConfigError("invalid range '" + std::string(item) + "'");
        const auto range = ExperimentConfig::range_values(lo, hi, step);
        values.insert(values.end(), range.begin(), range.end());
    }
    return values;
}

std::vector<double> ExperimentConfig::range_values(double lo, double hi, double step)
{
    std::vector<double> values;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long k = 0; k <= count; ++k)
    {
        const double v = lo + static_cast<double>(k) * step;
        values.push_back(std::abs(v) < 1e-12 * std::max(1.0, std::abs(step)) ? 0.0 : v);
    }
    return values;
}

const std::vector<std::string_view> &ExperimentConfig::keys()
{
    static const std::vector<std::string_view> all{
        "experiment", "beta",     "mu",          "rho",       "scn",           "snr_db",       "M",
        "N",          "epsilon",  "M_range",     "sweep",     "signal_case",   "covariance_model",
        "regime",     "points",   "y_offset",    "density_floor", "simulate",  "bins",         "density_n",
        "lmax",       "table_snr_db", "table_step", "mse_n",  "n_trials",      "seed",         "out",
        "convention", "workers"};
    return all;
}

void ExperimentConfig::set(std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "experiment")
        experiment = one_of(value, {"support", "density", "mc-sense", "lookup", "estimate", "mse"}, key);
    else if (key == "beta")
        beta = parse_double(value);
    else if (key == "mu")
        mu = value.empty() || value == "none" ? std::nullopt : std::optional<double>(parse_double(value));
    else if (key == "rho")
        rho = parse_number_list(value);
    else if (key == "scn")
        scn = parse_number_list(value);
    else if (key == "snr_db")
        snr_db = parse_number_list(value);
    else if (key == "M")
        M = parse_integer<int>(value);
    else if (key == "N")
        N = parse_integer<int>(value);
    else if (key == "epsilon")
        epsilon = parse_double(value);
    else if (key == "M_range")
    {
        M_range.clear();
        for (const double v : parse_number_list(value))
        {
            if (v != std::floor(v))
                throw ConfigError("M_range entries must be integers");
            M_range.push_back(static_cast<int>(v));
        }
    }
    else if (key == "sweep")
        sweep = one_of(value, {"snr", "rho", "fs"}, key);
    else if (key == "signal_case")
        signal_case = parse_signal_case(value);
    else if (key == "covariance_model")
        covariance_model = parse_covariance_model(value);
    else if (key == "regime")
        regime = one_of(value, {"mp", "noise-corr", "sig-white", "sig-corr"}, key);
    else if (key == "points")
        points = parse_integer<int>(value);
    else if (key == "y_offset")
        y_offset = parse_double(value);
    else if (key == "density_floor")
        density_floor = parse_double(value);
    else if (key == "simulate")
        simulate = parse_bool(value);
    else if (key == "bins")
        bins = parse_integer<int>(value);
    else if (key == "density_n")
        density_n = parse_integer<int>(value);
    else if (key == "lmax")
        lmax = value.empty() || value == "none" ? std::nullopt : std::optional<double>(parse_double(value));
    else if (key == "table_snr_db")
        table_snr_db = parse_number_list(value);
    else if (key == "table_step")
        table_step = parse_double(value);
    else if (key == "mse_n")
        mse_n = parse_integer<int>(value);
    else if (key == "n_trials")
        n_trials = parse_integer<int>(value);
    else if (key == "seed")
        seed = parse_integer<std::uint64_t>(value);
    else if (key == "out")
        out = std::string(value);
    else if (key == "convention")
        convention = parse_scn_convention(value);
    else if (key == "workers")
        workers = parse_integer<int>(value);
    else
        throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string ExperimentConfig::get(std::string_view key) const
{
    if (key == "experiment") return experiment;
    if (key == "beta") return exact(beta);
    if (key == "mu") return mu ? exact(*mu) : "none";
    if (key == "rho") return join(rho);
    if (key == "scn") return join(scn);
    if (key == "snr_db") return join(snr_db);
    if (key == "M") return std::to_string(M);
    if (key == "N") return std::to_string(N);
    if (key == "epsilon") return exact(epsilon);
    if (key == "M_range") return join(M_range);
    if (key == "sweep") return sweep;
    if (key == "signal_case") return std::string(to_string(signal_case));
    if (key == "covariance_model") return std::string(to_string(covariance_model));
    if (key == "regime") return regime;
    if (key == "points") return std::to_string(points);
    if (key == "y_offset") return exact(y_offset);
    if (key == "density_floor") return exact(density_floor);
    if (key == "simulate") return simulate ? "true" : "false";
    if (key == "bins") return std::to_string(bins);
    if (key == "density_n") return std::to_string(density_n);
    if (key == "lmax") return lmax ? exact(*lmax) : "none";
    if (key == "table_snr_db") return join(table_snr_db);
    if (key == "table_step") return exact(table_step);
    if (key == "mse_n") return std::to_string(mse_n);
    if (key == "n_trials") return std::to_string(n_trials);
    if (key == "seed") return std::to_string(seed);
    if (key == "out") return out;
    if (key == "convention") return std::string(to_string(convention));
    if (key == "workers") return std::to_string(workers);
    throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string ExperimentConfig::to_text() const
{
    std::string text;
    for (const auto key : keys())
        text += std::string(key) + " = " + get(key) + "\n";
    return text;
}

ExperimentConfig ExperimentConfig::parse(std::string_view text)
{
    ExperimentConfig config;
    int line_number = 0;
    for (auto line : split(text, '\n'))
    {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_number) + ": expected 'key = value'");
        try
        {
            config.set(line.substr(0, eq), line.substr(eq + 1));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError("config line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return config;
}

ExperimentConfig ExperimentConfig::load(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::uint64_t ExperimentConfig::hash() const
{
    std::string text;
    for (const auto key : keys())
        if (key != "out" && key != "workers")
            text += std::string(key) + " = " + get(key) + "\n";
    return fnv1a64(text);
}

void ExperimentConfig::validate() const
{
    auto require = [](bool ok, const char *what)
    {
        if (!ok)
            throw ConfigError(what);
    };
    require(std::isfinite(beta) && beta > 0.0, "beta must be > 0");
    require(!mu || (std::isfinite(*mu) && *mu >= 0.0), "mu must be >= 0");
    require(!snr_db.empty(), "snr_db must not be empty");
    require(!rho.empty(), "rho must not be empty");
    require(!scn.empty(), "scn must not be empty");
    require(M >= 1 && N >= M, "need N >= M >= 1");
    require(!M_range.empty(), "M_range must not be empty");
    require(points >= 2, "points must be >= 2");
    require(y_offset > 0.0, "y_offset must be > 0");
    require(density_floor >= 0.0, "density_floor must be >= 0");
    require(bins >= 1, "bins must be >= 1");
    require(density_n >= 1 && mse_n >= 1, "density_n and mse_n must be >= 1");
    require(table_step > 0.0, "table_step must be > 0");
    require(n_trials >= 1, "n_trials must be >= 1");
    require(workers >= 1, "workers must be >= 1");
}

} // namespace eigsense
