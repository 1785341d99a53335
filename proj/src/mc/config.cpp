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

#include "nanolink/mc/config.hpp"

#include "nanolink/core/digest.hpp"
#include "nanolink/core/error.hpp"

#include <cmath>

namespace nanolink::mc
{

namespace
{

void require(bool ok, const char *what)
{
    if (!ok)
        throw ParameterError(std::string("mc: ") + what);
}

} // namespace

void validate(const McLinkConfig &cfg)
{
    require(cfg.n_sensors >= 1, "n_sensors must be at least 1");
    require(std::isfinite(cfg.ring_radius) && cfg.ring_radius > 0, "ring_radius must be positive");
    require(std::isfinite(cfg.receiver_radius) && cfg.receiver_radius > 0, "receiver_radius must be positive");
    require(cfg.receiver_radius < cfg.ring_radius, "receiver_radius must be smaller than ring_radius");
    require(std::isfinite(cfg.diffusion_coeff) && cfg.diffusion_coeff > 0, "diffusion_coeff must be positive");
    require(std::isfinite(cfg.bit_duration) && cfg.bit_duration > 0, "bit_duration must be positive");
    require(cfg.samples_per_bit >= 1, "samples_per_bit must be at least 1");
    require(cfg.sequence_length >= 1, "sequence_length must be at least 1");
    require(std::isfinite(cfg.time_step) && cfg.time_step > 0, "time_step must be positive");
    require(cfg.time_step <= cfg.bit_duration / cfg.samples_per_bit * (1 + 1e-12),
            "time_step must not exceed bit_duration / samples_per_bit");
    require(cfg.modulation == Modulation::OOK || cfg.csk_levels >= 2, "csk_levels must be at least 2");
    require(cfg.adaptive_step_fraction > 0 && cfg.adaptive_step_fraction <= 1,
            "adaptive_step_fraction must be in (0, 1]");
    require(cfg.near_step_fraction > 0 && cfg.near_step_fraction <= 1, "near_step_fraction must be in (0, 1]");
    require(cfg.far_field_factor == 0 || cfg.far_field_factor > 1, "far_field_factor must be 0 or greater than 1");
    require(cfg.retire_after_bits >= 1, "retire_after_bits must be at least 1");
    require(cfg.pilot_frames >= 1, "pilot_frames must be at least 1");
}

std::uint32_t alphabet_size(const McLinkConfig &cfg) noexcept
{
    return cfg.modulation == Modulation::OOK ? 2u : cfg.csk_levels;
}

std::uint64_t emission_size(const McLinkConfig &cfg, std::uint32_t symbol) noexcept
{
    const std::uint32_t top = alphabet_size(cfg) - 1;
    return cfg.molecules_per_impulse * symbol / top;
}

DigestBuilder describe(const McLinkConfig &cfg)
{
    DigestBuilder d;
    d.add("n_sensors", std::uint64_t{cfg.n_sensors})
        .add("ring_radius", cfg.ring_radius)
        .add("molecules_per_impulse", cfg.molecules_per_impulse)
        .add("diffusion_coeff", cfg.diffusion_coeff)
        .add("bit_duration", cfg.bit_duration)
        .add("samples_per_bit", std::uint64_t{cfg.samples_per_bit})
        .add("sequence_length", std::uint64_t{cfg.sequence_length})
        .add("n_realizations", cfg.n_realizations)
        .add("receiver_radius", cfg.receiver_radius)
        .add("receiver_mode", to_string(cfg.receiver_mode))
        .add("modulation", to_string(cfg.modulation))
        .add("csk_levels", std::uint64_t{cfg.csk_levels})
        .add("time_step", cfg.time_step)
        .add("sensor_mode", to_string(cfg.sensor_mode))
        .add("step_control", to_string(cfg.step_control))
        .add("adaptive_step_fraction", cfg.adaptive_step_fraction)
        .add("near_step_fraction", cfg.near_step_fraction)
        .add("far_field_factor", cfg.far_field_factor)
        .add("retire_after_bits", std::uint64_t{cfg.retire_after_bits})
        .add("pilot_frames", std::uint64_t{cfg.pilot_frames});
    return d;
}

std::string config_digest(const McLinkConfig &cfg)
{
    return describe(cfg).hex();
}

std::string_view to_string(ReceiverMode m) noexcept
{
    return m == ReceiverMode::FullyAbsorbing ? "FULLY_ABSORBING" : "PASSIVE";
}

std::string_view to_string(Modulation m) noexcept
{
    return m == Modulation::OOK ? "OOK" : "CSK";
}

std::string_view to_string(SensorMode m) noexcept
{
    return m == SensorMode::Redundant ? "REDUNDANT" : "INDEPENDENT";
}

std::string_view to_string(StepControl m) noexcept
{
    return m == StepControl::Adaptive ? "ADAPTIVE" : "FIXED";
}

} // namespace nanolink::mc
