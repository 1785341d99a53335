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

#include "nanolink/rf/backhaul.hpp"

#include "nanolink/core/error.hpp"

#include <cmath>
#include <numbers>

namespace nanolink::rf
{

namespace
{

void require(bool ok, const char *what)
{
    if (!ok)
        throw ParameterError(std::string("backhaul: ") + what);
}

std::uint64_t hop_stream(Hop hop) noexcept
{
    return hop == Hop::Hop1 ? 1 : 2;
}

/// Spectral efficiency of one channel use.
double hop_efficiency(const BackhaulConfig &cfg, Hop hop, const ChannelMatrix &h, double snr)
{
    double efficiency = 0.0;
    if (hop == Hop::Hop1)
    {
        // Transmit power is split evenly over the handheld's streams.
        for (const double s : zf_detect(h, snr / static_cast<double>(h.cols())))
            efficiency += std::log2(1.0 + s);
        return efficiency;
    }

    if (cfg.hop2_precoding == Hop2Precoding::SingleAntenna)
        return std::log2(1.0 + zf_detect(h, snr).front());

    // Dominant eigenmode of H H^H (n_rx x n_rx) gives the beamformer
    // v = H^H u / |H^H u| and the effective single-stream channel H v.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h * h.adjoint());
    const Eigen::VectorXcd u = eig.eigenvectors().col(h.rows() - 1);
    Eigen::VectorXcd v = h.adjoint() * u;
    const double norm = v.norm();
    if (norm == 0.0)
        throw SingularChannelError("hop2: channel has no nonzero singular value");
    v /= norm;
    const ChannelMatrix effective = h * v;
    return std::log2(1.0 + zf_detect(effective, snr).front());
}

} // namespace

void validate(const BackhaulConfig &cfg)
{
    require(cfg.n_tx_handheld >= 1 && cfg.n_rx_gateway >= 1 && cfg.n_tx_gateway >= 1 && cfg.n_rx_endpoint >= 1,
            "antenna counts must be at least 1");
    require(cfg.n_rx_gateway >= cfg.n_tx_handheld, "n_rx_gateway must be at least n_tx_handheld for zero forcing");
    require(cfg.fd_norm >= 0 && cfg.fd_norm < 0.5, "fd_norm must lie in [0, 0.5)");
    require(cfg.carrier_freq > 0, "carrier_freq must be positive");
    require(cfg.bandwidth > 0, "bandwidth must be positive");
    require(cfg.d_hop1 >= 10 && cfg.d_hop2 >= 10, "hop distances must be at least 10 m (UMi validity)");
    require(!std::isnan(cfg.avg_snr_db_at_ref), "avg_snr_db_at_ref must be a number");
    require(cfg.n_fading_samples >= 1, "n_fading_samples must be at least 1");
}

DigestBuilder describe(const BackhaulConfig &cfg)
{
    DigestBuilder d;
    d.add("n_tx_handheld", std::uint64_t{cfg.n_tx_handheld})
        .add("n_rx_gateway", std::uint64_t{cfg.n_rx_gateway})
        .add("n_tx_gateway", std::uint64_t{cfg.n_tx_gateway})
        .add("n_rx_endpoint", std::uint64_t{cfg.n_rx_endpoint})
        .add("fd_norm", cfg.fd_norm)
        .add("carrier_freq", cfg.carrier_freq)
        .add("bandwidth", cfg.bandwidth)
        .add("d_hop1", cfg.d_hop1)
        .add("d_hop2", cfg.d_hop2)
        .add("avg_snr_db_at_ref", cfg.avg_snr_db_at_ref)
        .add("n_fading_samples", cfg.n_fading_samples)
        .add("hop2_precoding", to_string(cfg.hop2_precoding));
    return d;
}

std::string config_digest(const BackhaulConfig &cfg)
{
    return describe(cfg).hex();
}

std::string_view to_string(Hop hop) noexcept
{
    return hop == Hop::Hop1 ? "HOP1" : "HOP2";
}

std::string_view to_string(Hop2Precoding p) noexcept
{
    return p == Hop2Precoding::EigenBeamforming ? "EIGEN_BEAMFORMING" : "SINGLE_ANTENNA";
}

double umi_pathloss_db(double distance, double carrier_freq)
{
    if (!(distance >= 10.0))
        throw OutOfValidityError("umi_pathloss_db: distance below the 10 m validity limit");
    if (!(carrier_freq > 0.0))
        throw ParameterError("umi_pathloss_db: carrier frequency must be positive");
    return 32.4 + 21.0 * std::log10(distance) + 20.0 * std::log10(carrier_freq / 1e9);
}

double gauss_markov_coefficient(double fd_norm)
{
    if (!(fd_norm >= 0.0 && fd_norm < 0.5))
        throw ParameterError("gauss_markov_coefficient: fd_norm must lie in [0, 0.5)");
    return std::cyl_bessel_j(0.0, 2.0 * std::numbers::pi * fd_norm);
}

GaussMarkovFading::GaussMarkovFading(std::uint32_t n_rx, std::uint32_t n_tx, double fd_norm, RandomSource rng)
    : rng_(std::move(rng)), rho_(gauss_markov_coefficient(fd_norm)),
      innovation_scale_(std::sqrt(std::max(0.0, 1.0 - rho_ * rho_))), h_(n_rx, n_tx), w_(n_rx, n_tx)
{
    if (n_rx < 1 || n_tx < 1)
        throw ParameterError("GaussMarkovFading: matrix dimensions must be positive");
    fill_innovation();
    h_ = w_;
}

void GaussMarkovFading::fill_innovation()
{
    const double s = std::sqrt(0.5);
    for (Eigen::Index j = 0; j < w_.cols(); ++j)
        for (Eigen::Index i = 0; i < w_.rows(); ++i)
        {
            const double re = s * rng_.normal();
            const double im = s * rng_.normal();
            w_(i, j) = {re, im};
        }
}

const ChannelMatrix &GaussMarkovFading::next()
{
    fill_innovation();
    h_ = rho_ * h_ + innovation_scale_ * w_;
    return h_;
}

std::vector<ChannelMatrix> rayleigh_sequence(std::uint32_t n_rx, std::uint32_t n_tx, double fd_norm, std::size_t n,
                                             RandomSource &rng)
{
    if (n < 1)
        throw ParameterError("rayleigh_sequence: n must be at least 1");
    GaussMarkovFading process(n_rx, n_tx, fd_norm, rng.derive(0));
    std::vector<ChannelMatrix> out;
    out.reserve(n);
    out.push_back(process.current());
    while (out.size() < n)
        out.push_back(process.next());
    return out;
}

namespace
{

Eigen::LLT<Eigen::MatrixXcd> gram_factor(const ChannelMatrix &h)
{
    if (h.rows() < h.cols())
        throw SingularChannelError("zero forcing needs at least as many receive antennas as streams");
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(h);
    if (qr.rank() < h.cols())
        throw SingularChannelError("channel matrix does not have full column rank");
    Eigen::LLT<Eigen::MatrixXcd> llt(h.adjoint() * h);
    if (llt.info() != Eigen::Success)
        throw SingularChannelError("Gram matrix is not positive definite");
    return llt;
}

} // namespace

Eigen::MatrixXcd zf_combiner(const ChannelMatrix &h)
{
    return gram_factor(h).solve(h.adjoint());
}

std::vector<double> zf_detect(const ChannelMatrix &h, double snr_linear)
{
    if (!(snr_linear >= 0.0))
        throw ParameterError("zf_detect: snr must be nonnegative");
    if (h.cols() == 1)
    {
        // Single stream: ZF reduces to maximum-ratio combining.
        if (h.squaredNorm() == 0.0)
            throw SingularChannelError("channel vector is zero");
        return {snr_linear * h.squaredNorm()};
    }
    const auto llt = gram_factor(h);
    const Eigen::MatrixXcd inverse =
        llt.solve(Eigen::MatrixXcd::Identity(h.cols(), h.cols()));
    std::vector<double> out(static_cast<std::size_t>(h.cols()));
    for (Eigen::Index k = 0; k < h.cols(); ++k)
        out[static_cast<std::size_t>(k)] = snr_linear / inverse(k, k).real();
    return out;
}

double hop_snr_linear(const BackhaulConfig &cfg, double snr_db, double distance)
{
    const double extra_loss =
        umi_pathloss_db(distance, cfg.carrier_freq) - umi_pathloss_db(kReferenceDistance, cfg.carrier_freq);
    return std::pow(10.0, (snr_db - extra_loss) / 10.0);
}

RateResult hop_ergodic_rate(const BackhaulConfig &cfg, Hop hop, double snr_db, double distance,
                            const RandomSource &rng)
{
    validate(cfg);
    const double snr = hop_snr_linear(cfg, snr_db, distance);

    std::uint32_t n_rx = cfg.n_rx_gateway;
    std::uint32_t n_tx = cfg.n_tx_handheld;
    if (hop == Hop::Hop2)
    {
        n_rx = cfg.n_rx_endpoint;
        n_tx = cfg.hop2_precoding == Hop2Precoding::SingleAntenna ? 1 : cfg.n_tx_gateway;
    }

    GaussMarkovFading fading(n_rx, n_tx, cfg.fd_norm, rng.derive(hop_stream(hop)));
    double sum = hop_efficiency(cfg, hop, fading.current(), snr);
    for (std::uint64_t t = 1; t < cfg.n_fading_samples; ++t)
        sum += hop_efficiency(cfg, hop, fading.next(), snr);

    RateResult r;
    r.segment = hop == Hop::Hop1 ? Segment::HOP1 : Segment::HOP2;
    r.mi_bits_per_use = sum / static_cast<double>(cfg.n_fading_samples);
    r.rate_bps = cfg.bandwidth * r.mi_bits_per_use;
    r.n_realizations = cfg.n_fading_samples;
    DigestBuilder d = describe(cfg);
    d.add("run.hop", to_string(hop)).add("run.snr_db", snr_db).add("run.distance", distance);
    r.config_digest = d.hex();
    r.seed = rng.master_seed();
    return r;
}

BackhaulRates evaluate_backhaul(const BackhaulConfig &cfg, double snr_db, const RandomSource &rng)
{
    BackhaulRates out;
    out.hop1 = hop_ergodic_rate(cfg, Hop::Hop1, snr_db, cfg.d_hop1, rng);
    out.hop2 = hop_ergodic_rate(cfg, Hop::Hop2, snr_db, cfg.d_hop2, rng);
    const RateResult &bottleneck = out.hop1.rate_bps <= out.hop2.rate_bps ? out.hop1 : out.hop2;
    out.e2e = bottleneck;
    out.e2e.segment = Segment::E2E;
    DigestBuilder d = describe(cfg);
    d.add("run.snr_db", snr_db);
    out.e2e.config_digest = d.hex();
    return out;
}

RateResult backhaul_rate(const BackhaulConfig &cfg, double snr_db, const RandomSource &rng)
{
    return evaluate_backhaul(cfg, snr_db, rng).e2e;
}

} // namespace nanolink::rf
