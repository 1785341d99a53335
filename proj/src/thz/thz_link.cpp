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

#include "nanolink/thz/thz_link.hpp"

#include "nanolink/core/error.hpp"
#include "nanolink/core/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nanolink::thz
{

namespace
{

constexpr std::uint64_t kBlockSymbols = 10'000;

void require(bool ok, const char *what)
{
    if (!ok)
        throw ParameterError(std::string("thz: ") + what);
}

} // namespace

ThzLinkConfig tissue_preset()
{
    ThzLinkConfig cfg;
    cfg.absorption_coeff = kTissueAbsorptionCoeff;
    return cfg;
}

void validate(const ThzLinkConfig &cfg)
{
    require(cfg.f_low > 0, "f_low must be positive");
    require(cfg.f_high > cfg.f_low, "f_high must exceed f_low");
    require(std::abs((cfg.f_high - cfg.f_low) - cfg.bandwidth) <= 1e-9 * cfg.bandwidth,
            "bandwidth must equal f_high - f_low");
    require(cfg.pulse_duration > 0, "pulse_duration must be positive");
    require(cfg.spread_ratio_beta >= 1, "spread_ratio_beta must be at least 1");
    require(cfg.distance > 0, "distance must be positive");
    require(cfg.absorption_coeff >= 0, "absorption_coeff must be nonnegative");
    require(cfg.tx_pulse_energy >= 0, "tx_pulse_energy must be nonnegative");
    require(cfg.noise_psd >= 0, "noise_psd must be nonnegative");
    require(cfg.n_symbols >= 1, "n_symbols must be at least 1");
}

DigestBuilder describe(const ThzLinkConfig &cfg)
{
    DigestBuilder d;
    d.add("f_low", cfg.f_low)
        .add("f_high", cfg.f_high)
        .add("bandwidth", cfg.bandwidth)
        .add("pulse_duration", cfg.pulse_duration)
        .add("spread_ratio_beta", cfg.spread_ratio_beta)
        .add("distance", cfg.distance)
        .add("absorption_coeff", cfg.absorption_coeff)
        .add("tx_pulse_energy", cfg.tx_pulse_energy)
        .add("noise_psd", cfg.noise_psd)
        .add("n_symbols", cfg.n_symbols);
    return d;
}

std::string config_digest(const ThzLinkConfig &cfg)
{
    return describe(cfg).hex();
}

double center_frequency(const ThzLinkConfig &cfg) noexcept
{
    return 0.5 * (cfg.f_low + cfg.f_high);
}

double spreading_loss_db(double frequency, double distance)
{
    if (!(frequency > 0) || !(distance > 0))
        throw ParameterError("spreading_loss_db: frequency and distance must be positive");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance * frequency / units::speed_of_light);
}

double absorption_loss_db(double absorption_coeff, double distance)
{
    if (!(absorption_coeff >= 0) || !(distance >= 0))
        throw ParameterError("absorption_loss_db: coefficient and distance must be nonnegative");
    return 10.0 * absorption_coeff * distance * std::numbers::log10e;
}

double total_pathloss_db(const ThzLinkConfig &cfg, double frequency, double distance)
{
    if (!(frequency >= cfg.f_low && frequency <= cfg.f_high))
        throw ParameterError("total_pathloss_db: frequency outside [f_low, f_high]");
    return spreading_loss_db(frequency, distance) + absorption_loss_db(cfg.absorption_coeff, distance);
}

PulseTrain tsook_modulate(std::span<const std::uint8_t> bits, const ThzLinkConfig &cfg)
{
    const double spacing = cfg.spread_ratio_beta * cfg.pulse_duration;
    PulseTrain train;
    train.symbol_times.reserve(bits.size());
    train.amplitudes.reserve(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k)
    {
        if (bits[k] > 1)
            throw ParameterError("tsook_modulate: symbols must be 0 or 1");
        train.symbol_times.push_back(static_cast<double>(k) * spacing);
        train.amplitudes.push_back(bits[k]);
    }
    return train;
}

double received_pulse_energy(const ThzLinkConfig &cfg)
{
    const double loss_db = total_pathloss_db(cfg, center_frequency(cfg), cfg.distance);
    return cfg.tx_pulse_energy * std::pow(10.0, -loss_db / 10.0);
}

double mean_noise_energy(const ThzLinkConfig &cfg) noexcept
{
    return cfg.noise_psd * cfg.bandwidth * cfg.pulse_duration;
}

std::vector<double> thz_receive(const PulseTrain &train, const ThzLinkConfig &cfg, RandomSource &rng)
{
    const double signal = received_pulse_energy(cfg);
    // |N(0, s^2)| has mean s * sqrt(2 / pi).
    const double noise_scale = mean_noise_energy(cfg) * std::sqrt(std::numbers::pi / 2.0);
    std::vector<double> energies;
    energies.reserve(train.amplitudes.size());
    for (const std::uint8_t a : train.amplitudes)
    {
        const double noise = noise_scale > 0 ? std::abs(noise_scale * rng.normal()) : 0.0;
        energies.push_back(a * signal + noise);
    }
    return energies;
}

std::vector<std::uint8_t> energy_detect(std::span<const double> energies, const ThzLinkConfig &cfg)
{
    const double threshold = 0.5 * received_pulse_energy(cfg);
    std::vector<std::uint8_t> bits;
    bits.reserve(energies.size());
    for (const double e : energies)
        bits.push_back(e > threshold ? 1 : 0);
    return bits;
}

double thz_snr(const ThzLinkConfig &cfg)
{
    const double noise = mean_noise_energy(cfg);
    if (noise == 0.0)
        return INFINITY;
    return received_pulse_energy(cfg) / noise;
}

RateResult thz_rate(const ThzLinkConfig &cfg, double mi_bits)
{
    if (!(mi_bits >= 0.0 && mi_bits <= 1.0))
        throw ParameterError("thz_rate: mutual information must lie in [0, 1] bit");
    RateResult r;
    r.segment = Segment::THZ;
    r.mi_bits_per_use = mi_bits;
    r.rate_bps = mi_bits / (cfg.spread_ratio_beta * cfg.pulse_duration);
    r.config_digest = config_digest(cfg);
    return r;
}

ThzRunSummary run_thz_link(const ThzLinkConfig &cfg, const RandomSource &rng, unsigned workers)
{
    validate(cfg);
    const std::uint64_t n_blocks = (cfg.n_symbols + kBlockSymbols - 1) / kBlockSymbols;

    struct Partial
    {
        ConfusionMatrix confusion{2};
        double silent_energy = 0.0;
        std::uint64_t silent_slots = 0;
    };
    std::vector<Partial> partials(n_blocks);

    parallel_for(n_blocks, workers, [&](std::size_t b) {
        RandomSource stream = rng.derive(b);
        const std::uint64_t n = std::min(kBlockSymbols, cfg.n_symbols - b * kBlockSymbols);
        std::vector<std::uint8_t> bits(n);
        for (auto &bit : bits)
            bit = static_cast<std::uint8_t>(stream.below(2));
        const auto energies = thz_receive(tsook_modulate(bits, cfg), cfg, stream);
        const auto decided = energy_detect(energies, cfg);

        Partial &p = partials[b];
        for (std::size_t k = 0; k < n; ++k)
        {
            p.confusion.add(bits[k], decided[k]);
            if (bits[k] == 0)
            {
                p.silent_energy += energies[k];
                ++p.silent_slots;
            }
        }
    });

    ThzRunSummary out;
    double silent_energy = 0.0;
    std::uint64_t silent_slots = 0;
    for (const auto &p : partials)
    {
        out.confusion.merge(p.confusion);
        silent_energy += p.silent_energy;
        silent_slots += p.silent_slots;
    }

    const double errors = static_cast<double>(out.confusion.at(0, 1) + out.confusion.at(1, 0));
    out.bit_error_rate = errors / static_cast<double>(out.confusion.total());
    const double mean_silent = silent_slots ? silent_energy / silent_slots : 0.0;
    out.measured_snr = mean_silent > 0 ? received_pulse_energy(cfg) / mean_silent : INFINITY;

    out.rate = thz_rate(cfg, estimate_mi(out.confusion));
    out.rate.n_realizations = cfg.n_symbols;
    out.rate.seed = rng.master_seed();
    return out;
}

} // namespace nanolink::thz
