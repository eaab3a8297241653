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

#include "eigsense/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace eigsense
{

std::string format_number(double value, int digits)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0.0 ? "inf" : "-inf";
    if (value == 0.0)
        value = 0.0; // drop the sign of negative zero
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, digits);
    return {buffer, result.ptr};
}

void write_csv_row(std::ostream &out, std::initializer_list<std::string_view> fields)
{
    bool first = true;
    for (const auto &f : fields)
    {
        if (!first)
            out << ',';
        out << f;
        first = false;
    }
    out << '\n';
}

std::uint64_t fnv1a64(std::string_view text)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : text)
    {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value)
{
    char buffer[17];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, 16);
    std::string hex(buffer, result.ptr);
    return std::string(16 - hex.size(), '0') + hex;
}

} // namespace eigsense
