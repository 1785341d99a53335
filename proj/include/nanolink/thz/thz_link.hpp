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

#ifndef NANOLINK_THZ_THZ_LINK_HPP
#define NANOLINK_THZ_THZ_LINK_HPP

#include "nanolink/core/digest.hpp"
#include "nanolink/core/information.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/core/rate_result.hpp"
#include "nanolink/core/units.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nanolink::thz
{

/// Terahertz hop from the implanted nano-transceiver to the on-body interface.
///
/// Pathloss is a spreading term plus a Beer-Lambert absorption term with a
/// flat coefficient over the band, evaluated at the band centre. The default
/// coefficient is a generic 120 /m; see tissue_preset() for the ~120 dB regime.
struct ThzLinkConfig
{
    double f_low = 0.5e12;                     // Hz
    double f_high = 1.5e12;                    // Hz
    double bandwidth = 1e12;                   // Hz
    double pulse_duration = 100e-15;           // s
    double spread_ratio_beta = 100.0;          // symbol spacing / pulse duration
    double distance = 5e-3;                    // m
    double absorption_coeff = 120.0;           // 1/m
    double tx_pulse_energy = 1e-12;            // J
    double noise_psd = units::boltzmann * 310; // W/Hz, thermal at body temperature
    std::uint64_t n_symbols = 100'000;         // Monte-Carlo symbols per run
};

/// Absorption coefficient giving ~120 dB total pathloss over 5 mm at 1 THz.
inline constexpr double kTissueAbsorptionCoeff = 3388.0; // 1/m

/// Default link with the tissue absorption coefficient.
ThzLinkConfig tissue_preset();

/// Throws ParameterError naming the violated constraint.
void validate(const ThzLinkConfig &cfg);

DigestBuilder describe(const ThzLinkConfig &cfg);
std::string config_digest(const ThzLinkConfig &cfg);

double center_frequency(const ThzLinkConfig &cfg) noexcept;

/// Free-space spreading loss 20 log10(4 pi d f / c) in dB.
double spreading_loss_db(double frequency, double distance);

/// Molecular absorption loss 10 log10(exp(k d)) in dB.
double absorption_loss_db(double absorption_coeff, double distance);

/// Spreading plus absorption at (f, d). f must lie in [f_low, f_high].
double total_pathloss_db(const ThzLinkConfig &cfg, double frequency, double distance);

/// TS-OOK symbols: slot k starts at k * beta * pulse_duration.
struct PulseTrain
{
    std::vector<double> symbol_times;
    std::vector<std::uint8_t> amplitudes;
};

/// Throws ParameterError for symbols other than 0 and 1.
PulseTrain tsook_modulate(std::span<const std::uint8_t> bits, const ThzLinkConfig &cfg);

/// Noiseless received energy of one pulse at band centre and cfg.distance.
double received_pulse_energy(const ThzLinkConfig &cfg);

/// Mean noise energy collected in one pulse slot: N0 * B * Tp.
double mean_noise_energy(const ThzLinkConfig &cfg) noexcept;

/// Energy-detector output per slot: attenuated pulse energy (if on) plus a
/// half-normal noise energy whose mean is mean_noise_energy().
std::vector<double> thz_receive(const PulseTrain &train, const ThzLinkConfig &cfg, RandomSource &rng);

/// Decides 1 when the slot energy exceeds half the noiseless pulse energy.
std::vector<std::uint8_t> energy_detect(std::span<const double> energies, const ThzLinkConfig &cfg);

/// Pulse SNR: received_pulse_energy / mean_noise_energy. +inf when noise_psd is 0.
double thz_snr(const ThzLinkConfig &cfg);

/// rate = mi_bits / (beta * pulse_duration). mi_bits must be in [0, 1].
RateResult thz_rate(const ThzLinkConfig &cfg, double mi_bits);

struct ThzRunSummary
{
    RateResult rate;
    ConfusionMatrix confusion;
    double bit_error_rate = 0.0;
    /// Received pulse energy over the mean energy seen in silent slots.
    double measured_snr = 0.0;
};

/// Monte-Carlo TS-OOK run over n_symbols uniformly random bits. Symbols are
/// processed in fixed blocks, block b on stream b of `rng`, so the result does
/// not depend on `workers`.
ThzRunSummary run_thz_link(const ThzLinkConfig &cfg, const RandomSource &rng, unsigned workers = 1);

} // namespace nanolink::thz

#endif
