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

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eigsense
{

// Locale-independent shortest form with `digits` significant digits; "inf", "-inf" and "nan" for non-finite values
std::string format_number(double value, int digits = 6);

// One CSV line terminated by '\n'; fields are written as given
void write_csv_row(std::ostream &out, std::initializer_list<std::string_view> fields);

std::uint64_t fnv1a64(std::string_view text);
std::string to_hex(std::uint64_t value);

} // namespace eigsense
