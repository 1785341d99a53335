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

#include "nanolink/mc/channel.hpp"

#include "nanolink/core/error.hpp"
#include "nanolink/mc/particles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nanolink::mc
{

SampleMatrix::SampleMatrix(std::uint32_t n_bits, std::uint32_t samples_per_bit, ReceiverMode mode)
    : n_bits_(n_bits), samples_per_bit_(samples_per_bit), mode_(mode),
      counts_(static_cast<std::size_t>(n_bits) * samples_per_bit, 0)
{
}

std::size_t SampleMatrix::index(std::uint32_t bit, std::uint32_t sample) const
{
    if (bit >= n_bits_ || sample >= samples_per_bit_)
        throw ParameterError("SampleMatrix: index out of range");
    return static_cast<std::size_t>(bit) * samples_per_bit_ + sample;
}

std::uint64_t SampleMatrix::bit_total(std::uint32_t bit) const
{
    const auto row = flat().subspan(index(bit, 0), samples_per_bit_);
    return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

std::uint64_t SampleMatrix::total() const
{
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

namespace
{

/// Symbols sent by each sensor, sensor-major.
std::vector<std::vector<std::uint32_t>> sensor_sequences(std::span<const std::uint32_t> symbols,
                                                         const McLinkConfig &cfg, RandomSource &rng)
{
    std::vector<std::vector<std::uint32_t>> out(cfg.n_sensors, std::vector<std::uint32_t>(symbols.begin(), symbols.end()));
    if (cfg.sensor_mode == SensorMode::Independent)
    {
        for (std::uint32_t j = 1; j < cfg.n_sensors; ++j)
            for (auto &s : out[j])
                s = static_cast<std::uint32_t>(rng.below(alphabet_size(cfg)));
    }
    return out;
}

void simulate_adaptive_absorbing(const McLinkConfig &cfg, const std::vector<std::vector<std::uint32_t>> &sequences,
                                 SampleMatrix &out, RandomSource &rng)
{
    const AbsorptionWalker walker(cfg);
    const std::uint32_t n_bits = cfg.sequence_length;
    const double sample_interval = cfg.bit_duration / cfg.samples_per_bit;
    const std::size_t last_sample = out.flat().size() - 1;
    auto counts = out.flat();

    for (std::uint32_t bit = 0; bit < n_bits; ++bit)
    {
        const double release = bit * cfg.bit_duration;
        const std::uint32_t life_bits = std::min(cfg.retire_after_bits, n_bits - bit);
        const double horizon = life_bits * cfg.bit_duration;
        for (std::uint32_t sensor = 0; sensor < cfg.n_sensors; ++sensor)
        {
            const std::uint64_t n = emission_size(cfg, sequences[sensor][bit]);
            for (std::uint64_t m = 0; m < n; ++m)
            {
                const auto hit = walker(cfg.ring_radius, horizon, rng);
                if (!hit)
                    continue;
                // Absorbed during (t_{g-1}, t_g] is reported at sample g.
                const double g = std::ceil((release + *hit) / sample_interval) - 1.0;
                const auto idx = static_cast<std::size_t>(std::clamp(g, 0.0, static_cast<double>(last_sample)));
                ++counts[idx];
            }
        }
    }
}

void simulate_adaptive_passive(const McLinkConfig &cfg, const std::vector<std::vector<std::uint32_t>> &sequences,
                               SampleMatrix &out, RandomSource &rng)
{
    // Free diffusion has no boundary in passive mode, so jumping straight from
    // one sample instant to the next is exact.
    const std::uint32_t n_bits = cfg.sequence_length;
    const std::uint32_t spb = cfg.samples_per_bit;
    const double sigma = std::sqrt(2.0 * cfg.diffusion_coeff * cfg.bit_duration / spb);
    auto counts = out.flat();

    for (std::uint32_t bit = 0; bit < n_bits; ++bit)
    {
        const std::size_t first = static_cast<std::size_t>(bit) * spb;
        const std::size_t stop = static_cast<std::size_t>(std::min(bit + cfg.retire_after_bits, n_bits)) * spb;
        for (std::uint32_t sensor = 0; sensor < cfg.n_sensors; ++sensor)
        {
            const std::uint64_t n = emission_size(cfg, sequences[sensor][bit]);
            for (std::uint64_t m = 0; m < n; ++m)
            {
                double r = cfg.ring_radius;
                for (std::size_t g = first; g < stop; ++g)
                {
                    r = radial_step(r, sigma, rng);
                    counts[g] += r <= cfg.receiver_radius ? 1 : 0;
                }
            }
        }
    }
}

void simulate_fixed_step(const McLinkConfig &cfg, const std::vector<std::vector<std::uint32_t>> &sequences,
                         SampleMatrix &out, RandomSource &rng)
{
    const auto sensors = place_sensors(cfg);
    const double sample_interval = cfg.bit_duration / cfg.samples_per_bit;
    const auto substeps = static_cast<std::uint32_t>(std::ceil(sample_interval / cfg.time_step * (1 - 1e-12)));
    const double dt = sample_interval / substeps;
    const bool absorbing = cfg.receiver_mode == ReceiverMode::FullyAbsorbing;

    ParticleEnsemble ensemble;
    for (std::uint32_t bit = 0; bit < cfg.sequence_length; ++bit)
    {
        for (std::uint32_t sensor = 0; sensor < cfg.n_sensors; ++sensor)
            ensemble.emit(sensors[sensor], emission_size(cfg, sequences[sensor][bit]), bit);

        for (std::uint32_t k = 0; k < cfg.samples_per_bit; ++k)
        {
            std::uint64_t absorbed = 0;
            for (std::uint32_t s = 0; s < substeps; ++s)
            {
                brownian_step(ensemble, dt, cfg.diffusion_coeff, rng);
                if (absorbing)
                    absorbed += absorb(ensemble, cfg.receiver_radius);
            }
            out.at(bit, k) = absorbing ? absorbed : passive_count(ensemble, cfg.receiver_radius);
        }

        for (std::size_t i = 0; i < ensemble.size(); ++i)
            if (bit + 1 - ensemble.birth_bit_index[i] >= cfg.retire_after_bits)
                ensemble.alive[i] = 0;
        ensemble.compact();
    }
}

} // namespace

SampleMatrix transmit_sequence(std::span<const std::uint32_t> symbols, const McLinkConfig &cfg, RandomSource &rng)
{
    validate(cfg);
    if (symbols.size() != cfg.sequence_length)
        throw ParameterError("transmit_sequence: frame has " + std::to_string(symbols.size()) +
                             " symbols, sequence_length is " + std::to_string(cfg.sequence_length));
    const std::uint32_t levels = alphabet_size(cfg);
    if (std::any_of(symbols.begin(), symbols.end(), [&](std::uint32_t s) { return s >= levels; }))
        throw ParameterError("transmit_sequence: symbol outside the alphabet");

    const auto sequences = sensor_sequences(symbols, cfg, rng);
    SampleMatrix out(cfg.sequence_length, cfg.samples_per_bit, cfg.receiver_mode);
    if (cfg.step_control == StepControl::Fixed)
        simulate_fixed_step(cfg, sequences, out, rng);
    else if (cfg.receiver_mode == ReceiverMode::FullyAbsorbing)
        simulate_adaptive_absorbing(cfg, sequences, out, rng);
    else
        simulate_adaptive_passive(cfg, sequences, out, rng);
    return out;
}

std::vector<std::uint32_t> detect(const SampleMatrix &samples, std::uint64_t threshold, Modulation modulation,
                                  std::uint32_t levels)
{
    if (modulation == Modulation::OOK)
        levels = 2;
    if (levels < 2)
        throw ParameterError("detect: at least two levels are required");

    std::vector<std::uint32_t> decisions(samples.n_bits());
    for (std::uint32_t i = 0; i < samples.n_bits(); ++i)
    {
        const std::uint64_t total = samples.bit_total(i);
        if (threshold == 0)
        {
            decisions[i] = levels - 1;
            continue;
        }
        // total >= (2s - 1) t  <=>  decided level >= s
        const std::uint64_t level = (total + threshold) / (2 * threshold);
        decisions[i] = static_cast<std::uint32_t>(std::min<std::uint64_t>(level, levels - 1));
    }
    return decisions;
}

} // namespace nanolink::mc
