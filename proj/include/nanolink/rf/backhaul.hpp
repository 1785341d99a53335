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

#ifndef NANOLINK_RF_BACKHAUL_HPP
#define NANOLINK_RF_BACKHAUL_HPP

#include "nanolink/core/digest.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/core/rate_result.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nanolink::rf
{

using ChannelMatrix = Eigen::MatrixXcd;

enum class Hop
{
    Hop1, ///< handheld -> gateway
    Hop2, ///< gateway -> endpoint
};

/// How the gateway drives its antennas on the second hop.
/// EIGEN_BEAMFORMING: single stream along the dominant right singular vector.
/// SINGLE_ANTENNA: single stream from one gateway antenna.
enum class Hop2Precoding
{
    EigenBeamforming,
    SingleAntenna,
};

/// Over-the-air backhaul: handheld -> gateway -> application endpoint.
struct BackhaulConfig
{
    std::uint32_t n_tx_handheld = 1;
    std::uint32_t n_rx_gateway = 16;
    std::uint32_t n_tx_gateway = 16;
    std::uint32_t n_rx_endpoint = 8;
    double fd_norm = 0.01;          // cycles per fading sample
    double carrier_freq = 3.5e9;    // Hz
    double bandwidth = 20e6;        // Hz
    double d_hop1 = 1000.0;         // m
    double d_hop2 = 1000.0;         // m
    double avg_snr_db_at_ref = 15.0; // per-hop average SNR at the 1 km reference
    std::uint64_t n_fading_samples = 10'000;
    Hop2Precoding hop2_precoding = Hop2Precoding::EigenBeamforming;
};

/// Distance at which avg_snr_db_at_ref applies.
inline constexpr double kReferenceDistance = 1000.0; // m

/// Throws ParameterError naming the violated constraint.
void validate(const BackhaulConfig &cfg);

DigestBuilder describe(const BackhaulConfig &cfg);
std::string config_digest(const BackhaulConfig &cfg);

std::string_view to_string(Hop hop) noexcept;
std::string_view to_string(Hop2Precoding p) noexcept;

/// 3GPP UMi street-canyon LOS, single slope:
/// 32.4 + 21 log10(d / 1 m) + 20 log10(fc / 1 GHz) dB.
/// Throws OutOfValidityError for d < 10 m.
double umi_pathloss_db(double distance, double carrier_freq);

/// Lag-1 correlation J0(2 pi fd_norm) of the Gauss-Markov fading process.
double gauss_markov_coefficient(double fd_norm);

/// First-order Gauss-Markov Rayleigh process
/// H[t] = rho H[t-1] + sqrt(1 - rho^2) W[t], W i.i.d. unit-variance CSCG,
/// started from the stationary distribution.
class GaussMarkovFading
{
  public:
    GaussMarkovFading(std::uint32_t n_rx, std::uint32_t n_tx, double fd_norm, RandomSource rng);

    double rho() const noexcept { return rho_; }
    const ChannelMatrix &current() const noexcept { return h_; }

    /// Advances one sample and returns the new matrix.
    const ChannelMatrix &next();

  private:
    void fill_innovation();

    RandomSource rng_;
    double rho_;
    double innovation_scale_;
    ChannelMatrix h_;
    ChannelMatrix w_;
};

/// n consecutive samples of a GaussMarkovFading process.
std::vector<ChannelMatrix> rayleigh_sequence(std::uint32_t n_rx, std::uint32_t n_tx, double fd_norm, std::size_t n,
                                             RandomSource &rng);

/// Zero-forcing combiner (H^H H)^-1 H^H. Throws SingularChannelError when H
/// does not have full column rank.
Eigen::MatrixXcd zf_combiner(const ChannelMatrix &h);

/// Post-ZF SNR of each stream: snr / [(H^H H)^-1]_kk, where snr is the
/// per-stream transmit SNR. Throws SingularChannelError when H does not have
/// full column rank.
std::vector<double> zf_detect(const ChannelMatrix &h, double snr_linear);

/// Average SNR of a hop at distance d: snr_db re-referenced from 1 km with the
/// UMi pathloss difference, in linear units.
double hop_snr_linear(const BackhaulConfig &cfg, double snr_db, double distance);

/// Ergodic rate of one hop: bandwidth times the mean over n_fading_samples of
/// the ZF sum spectral efficiency. Fading for hop h is drawn from stream h of
/// `rng`, so equal seeds give common random numbers across SNR and distance.
RateResult hop_ergodic_rate(const BackhaulConfig &cfg, Hop hop, double snr_db, double distance,
                            const RandomSource &rng);

struct BackhaulRates
{
    RateResult hop1;
    RateResult hop2;
    RateResult e2e; ///< decode-and-forward: min of the hops
};

/// Both hops at (d_hop1, d_hop2) and their bottleneck.
BackhaulRates evaluate_backhaul(const BackhaulConfig &cfg, double snr_db, const RandomSource &rng);

/// Bottleneck rate only, tagged E2E.
RateResult backhaul_rate(const BackhaulConfig &cfg, double snr_db, const RandomSource &rng);

} // namespace nanolink::rf

#endif
