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

#ifndef NANOLINK_MC_CONFIG_HPP
#define NANOLINK_MC_CONFIG_HPP

#include "nanolink/core/digest.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace nanolink::mc
{

enum class ReceiverMode
{
    FullyAbsorbing,
    Passive,
};

enum class Modulation
{
    OOK,
    CSK,
};

/// REDUNDANT: every sensor sends the same sequence. INDEPENDENT: sensor 0
/// carries the measured sequence, the others send independent random symbols.
enum class SensorMode
{
    Redundant,
    Independent,
};

/// ADAPTIVE: molecules are walked one at a time in their distance to the
/// receiver centre, with steps proportional to the gap to the receiver surface,
/// a Brownian-bridge crossing test near the surface, and exact first-passage
/// continuation once a molecule is far away. FIXED: the whole 3-D ensemble
/// advances by `time_step` and absorption is judged by post-step position only.
enum class StepControl
{
    Adaptive,
    Fixed,
};

/// Molecular hop: sensors on a ring around a spherical receiver at the origin.
struct McLinkConfig
{
    std::uint32_t n_sensors = 5;
    double ring_radius = 45e-9;                // m
    std::uint64_t molecules_per_impulse = 10'000;
    double diffusion_coeff = 4.365e-10;        // m^2/s
    double bit_duration = 400e-6;              // s
    std::uint32_t samples_per_bit = 10;
    std::uint32_t sequence_length = 50;
    std::uint64_t n_realizations = 1'000;
    double receiver_radius = 10e-9;            // m
    ReceiverMode receiver_mode = ReceiverMode::FullyAbsorbing;
    Modulation modulation = Modulation::OOK;
    std::uint32_t csk_levels = 2;
    double time_step = 1e-6;                   // s
    SensorMode sensor_mode = SensorMode::Redundant;

    StepControl step_control = StepControl::Adaptive;
    /// Far-zone step std as a fraction of the gap to the receiver surface.
    double adaptive_step_fraction = 0.25;
    /// Near-zone step std as a fraction of receiver_radius; the bridge test is
    /// applied to steps no larger than this.
    double near_step_fraction = 0.25;
    /// Beyond this many receiver radii the exact free-space first-passage law
    /// takes over. 0 walks every molecule to its horizon.
    double far_field_factor = 6.0;
    /// Unabsorbed molecules are dropped this many bit durations after release.
    std::uint32_t retire_after_bits = 10;
    /// Frames of each pilot class used by calibrate_threshold.
    std::uint32_t pilot_frames = 8;
};

/// Throws ParameterError naming the violated constraint.
void validate(const McLinkConfig &cfg);

/// Number of transmit symbols: 2 for OOK, csk_levels for CSK.
std::uint32_t alphabet_size(const McLinkConfig &cfg) noexcept;

/// Molecules released by one sensor for `symbol`.
std::uint64_t emission_size(const McLinkConfig &cfg, std::uint32_t symbol) noexcept;

/// Every field by name, for digests and manifests.
DigestBuilder describe(const McLinkConfig &cfg);

std::string config_digest(const McLinkConfig &cfg);

std::string_view to_string(ReceiverMode m) noexcept;
std::string_view to_string(Modulation m) noexcept;
std::string_view to_string(SensorMode m) noexcept;
std::string_view to_string(StepControl m) noexcept;

} // namespace nanolink::mc

#endif
