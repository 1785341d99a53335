// SPDX-License-Identifier: Apache-2.0
//
// nanolink: link-level simulator for hybrid intra-body to cloud communication
// Copyright (C) 2026 The nanolink authors
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

#include "nanolink/core/units.hpp"

#include "nanolink/core/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace nanolink
{

namespace
{

struct Suffix
{
    std::string_view text;
    Dimension dim;
    int decade; // value is multiplied by 10^decade
};

constexpr std::array kSuffixes{
    Suffix{"m", Dimension::Length, 0},
    Suffix{"km", Dimension::Length, 3},
    Suffix{"cm", Dimension::Length, -2},
    Suffix{"mm", Dimension::Length, -3},
    Suffix{"um", Dimension::Length, -6},
    Suffix{"\xC2\xB5m", Dimension::Length, -6},
    Suffix{"nm", Dimension::Length, -9},
    Suffix{"s", Dimension::Time, 0},
    Suffix{"ms", Dimension::Time, -3},
    Suffix{"us", Dimension::Time, -6},
    Suffix{"\xC2\xB5s", Dimension::Time, -6},
    Suffix{"ns", Dimension::Time, -9},
    Suffix{"ps", Dimension::Time, -12},
    Suffix{"fs", Dimension::Time, -15},
    Suffix{"Hz", Dimension::Frequency, 0},
    Suffix{"kHz", Dimension::Frequency, 3},
    Suffix{"MHz", Dimension::Frequency, 6},
    Suffix{"GHz", Dimension::Frequency, 9},
    Suffix{"THz", Dimension::Frequency, 12},
    Suffix{"dB", Dimension::Decibel, 0},
    Suffix{"m2/s", Dimension::Diffusivity, 0},
    Suffix{"m^2/s", Dimension::Diffusivity, 0},
    Suffix{"um2/s", Dimension::Diffusivity, -12},
    Suffix{"um^2/s", Dimension::Diffusivity, -12},
    Suffix{"1/m", Dimension::InverseLength, 0},
    Suffix{"/m", Dimension::InverseLength, 0},
    Suffix{"1/cm", Dimension::InverseLength, 2},
    Suffix{"/cm", Dimension::InverseLength, 2},
    Suffix{"1/mm", Dimension::InverseLength, 3},
    Suffix{"/mm", Dimension::InverseLength, 3},
    Suffix{"J", Dimension::Energy, 0},
    Suffix{"pJ", Dimension::Energy, -12},
    Suffix{"fJ", Dimension::Energy, -15},
    Suffix{"aJ", Dimension::Energy, -18},
    Suffix{"W/Hz", Dimension::SpectralDensity, 0},
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s, std::string_view whole)
{
    if (s == "-inf" || s == "-Inf")
        return -INFINITY;
    if (s == "inf" || s == "+inf" || s == "Inf")
        return INFINITY;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParameterError("cannot parse number in '" + std::string(whole) + "'");
    return value;
}

/// number * 10^decade, rounded once: "45" with -9 parses as "45e-9".
double scaled(std::string_view number, int decade, std::string_view whole)
{
    if (!number.empty() && number.front() == '+')
        number.remove_prefix(1);
    int exponent = decade;
    const auto e = number.find_first_of("eE");
    if (e != std::string_view::npos)
    {
        std::string_view tail = number.substr(e + 1);
        if (!tail.empty() && tail.front() == '+')
            tail.remove_prefix(1);
        int own = 0;
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), own);
        if (ec != std::errc{} || ptr != tail.data() + tail.size())
            throw ParameterError("cannot parse number in '" + std::string(whole) + "'");
        exponent += own;
        number = number.substr(0, e);
    }
    return parse_number(std::string(number) + "e" + std::to_string(exponent), whole);
}

} // namespace

double parse_quantity(std::string_view text, Dimension dim)
{
    const std::string_view s = trim(text);
    if (s.empty())
        throw ParameterError("empty value");

    // The numeric part ends at the first character that cannot belong to a
    // floating-point literal; "inf" is handled as a special token.
    std::size_t split = 0;
    if (s.starts_with("-inf") || s.starts_with("+inf") || s.starts_with("inf"))
        split = s.find('f') + 1;
    else
    {
        while (split < s.size())
        {
            const char c = s[split];
            const bool exponent = (c == 'e' || c == 'E') && split + 1 < s.size() &&
                                  (std::isdigit(static_cast<unsigned char>(s[split + 1])) || s[split + 1] == '-' ||
                                   s[split + 1] == '+');
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || exponent)
                ++split;
            else
                break;
        }
    }

    const double value = parse_number(s.substr(0, split), s);
    const std::string_view suffix = trim(s.substr(split));
    if (suffix.empty())
        return value;

    for (const auto &entry : kSuffixes)
    {
        if (entry.text == suffix)
        {
            if (entry.dim != dim)
                throw ParameterError("unit '" + std::string(suffix) + "' does not fit this quantity in '" +
                                     std::string(s) + "'");
            return std::isfinite(value) ? scaled(s.substr(0, split), entry.decade, s) : value;
        }
    }
    throw ParameterError("unknown unit '" + std::string(suffix) + "' in '" + std::string(s) + "'");
}

std::uint64_t parse_count(std::string_view text)
{
    const double value = parse_quantity(text, Dimension::Dimensionless);
    if (!(value >= 0.0) || value != std::floor(value) || value > 9.007199254740992e15)
        throw ParameterError("expected a nonnegative integer, got '" + std::string(trim(text)) + "'");
    return static_cast<std::uint64_t>(value);
}

} // namespace nanolink
