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

#ifndef NANOLINK_CORE_UNITS_HPP
#define NANOLINK_CORE_UNITS_HPP

#include <cstdint>
#include <string_view>

namespace nanolink
{

// Internal units are SI throughout: meters, seconds, hertz, joules, and rates
// in bits/second. Suffixed text is converted once, at parse time.

enum class Dimension
{
    Dimensionless,
    Length,
    Time,
    Frequency,
    Decibel,
    Diffusivity,
    InverseLength,
    Energy,
    SpectralDensity,
};

/// Parses "<number>[ ]<suffix>" into SI for the given dimension. A bare number
/// is taken as already being in SI. Throws ParameterError naming the offending
/// text when the number or suffix is invalid for the dimension.
double parse_quantity(std::string_view text, Dimension dim);

/// Parses a nonnegative integer count. Scientific notation is accepted when the
/// value is integral ("1e4").
std::uint64_t parse_count(std::string_view text);

namespace units
{
inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double km = 1e3;
inline constexpr double us = 1e-6;
inline constexpr double fs = 1e-15;
inline constexpr double MHz = 1e6;
inline constexpr double GHz = 1e9;
inline constexpr double THz = 1e12;

inline constexpr double speed_of_light = 299792458.0;    // m/s
inline constexpr double boltzmann = 1.380649e-23;        // J/K
} // namespace units

} // namespace nanolink

#endif
