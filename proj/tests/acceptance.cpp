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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include "nanolink/core/information.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/mc/channel.hpp"
#include "nanolink/mc/information.hpp"
#include "nanolink/mc/particles.hpp"
#include "nanolink/pipeline/pipeline.hpp"
#include "nanolink/rf/backhaul.hpp"
#include "nanolink/thz/thz_link.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace nanolink;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok)
        {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(double v, int digits = 6)
{
    std::ostringstream s;
    s.precision(digits);
    s << v;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome calibration_anchor()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const pipeline::ArchitectureConfig cfg;
    const double grid[] = {45.0};
    const double rate = pipeline::sweep_snr(cfg, grid).front().rate.rate_bps;
    const double elapsed = seconds_since(t0);
    o.require(rate >= 2e8 && rate <= 4e8, "rate outside [200, 400] Mbps");
    o.require(elapsed < 60, "slower than 1 min");
    o.detail = "backhaul at 45 dB = " + fmt(rate / 1e6) + " Mbps in " + fmt(elapsed, 3) + " s" +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome diffusion_oracle()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    // One sensor, one impulse of 10^4 molecules, 4 us sampling out to 400 us.
    mc::McLinkConfig cfg;
    cfg.n_sensors = 1;
    cfg.molecules_per_impulse = 10'000;
    cfg.bit_duration = 40e-6;
    cfg.samples_per_bit = 10;
    cfg.sequence_length = 10;
    std::vector<std::uint32_t> frame(cfg.sequence_length, 0);
    frame[0] = 1;
    RandomSource rng(20260101, 0);
    const mc::SampleMatrix s = mc::transmit_sequence(frame, cfg, rng);

    const std::size_t probes[] = {0, 1, 2, 4, 9, 19, 39, 59, 79, 99};
    const double dt = cfg.bit_duration / cfg.samples_per_bit;
    const double n = static_cast<double>(cfg.molecules_per_impulse);
    double worst = 0;
    std::uint64_t cumulative = 0;
    std::size_t next = 0;
    for (std::size_t g = 0; g < s.flat().size() && next < std::size(probes); ++g)
    {
        cumulative += s.flat()[g];
        if (g != probes[next])
            continue;
        ++next;
        const double t = (g + 1) * dt;
        const double a = cfg.receiver_radius, r = cfg.ring_radius, D = cfg.diffusion_coeff;
        const double F = (a / r) * std::erfc((r - a) / (2 * std::sqrt(D * t)));
        const double se = std::sqrt(F * (1 - F) / n);
        const double z = (cumulative / n - F) / se;
        worst = std::max(worst, std::abs(z));
        o.require(std::abs(z) <= 3, "t=" + fmt(t) + " z=" + fmt(z, 3));
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 300, "slower than 5 min");
    o.detail = "10 probe times, max |z| = " + fmt(worst, 3) + ", " + fmt(elapsed, 3) + " s" +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

// P(|X| <= a) for X ~ N(c, s^2 I), |c| = r.
double ball_probability(double a, double r, double s)
{
    const double k = std::sqrt(2.0) * s;
    return 0.5 * (std::erf((a - r) / k) + std::erf((a + r) / k)) -
           s / (r * std::sqrt(2 * std::numbers::pi)) *
               (std::exp(-(r - a) * (r - a) / (2 * s * s)) - std::exp(-(r + a) * (r + a) / (2 * s * s)));
}

Outcome passive_oracle()
{
    Outcome o;
    mc::McLinkConfig cfg;
    cfg.n_sensors = 1;
    cfg.molecules_per_impulse = 100'000;
    cfg.receiver_mode = mc::ReceiverMode::Passive;
    cfg.bit_duration = 1e-6;
    cfg.samples_per_bit = 1;
    cfg.sequence_length = 5;
    std::vector<std::uint32_t> frame(cfg.sequence_length, 0);
    frame[0] = 1;
    RandomSource rng(20260102, 0);
    const mc::SampleMatrix s = mc::transmit_sequence(frame, cfg, rng);
    double worst = 0;
    for (std::uint32_t g = 0; g < 5; ++g)
    {
        const double t = (g + 1) * cfg.bit_duration;
        const double p = ball_probability(cfg.receiver_radius, cfg.ring_radius, std::sqrt(2 * cfg.diffusion_coeff * t));
        const double mean = 1e5 * p;
        const double z = (static_cast<double>(s.at(g, 0)) - mean) / std::sqrt(mean * (1 - p));
        worst = std::max(worst, std::abs(z));
        o.require(std::abs(z) <= 3, "t=" + fmt(t) + " z=" + fmt(z, 3));
    }
    o.detail = "5 probe times, max |z| = " + fmt(worst, 3) + (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome zf_oracle()
{
    Outcome o;
    RandomSource rng(20260103, 0);
    double worst_snr = 0, worst_recovery = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto n_tx = static_cast<Eigen::Index>(1 + rng.below(4));
        const auto n_rx = static_cast<Eigen::Index>(n_tx + rng.below(static_cast<std::uint64_t>(17 - n_tx)));
        rf::ChannelMatrix h(n_rx, n_tx);
        for (Eigen::Index i = 0; i < n_rx; ++i)
            for (Eigen::Index j = 0; j < n_tx; ++j)
                h(i, j) = {rng.normal(), rng.normal()};

        const double snr = 31.6;
        const auto zf = rf::zf_detect(h, snr);
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::MatrixXcd pinv =
            svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
        for (Eigen::Index k = 0; k < n_tx; ++k)
        {
            const double ref = snr / pinv.row(k).squaredNorm();
            worst_snr = std::max(worst_snr, std::abs(zf[static_cast<std::size_t>(k)] - ref) / ref);
        }

        Eigen::VectorXcd x(n_tx);
        for (Eigen::Index k = 0; k < n_tx; ++k)
            x(k) = {rng.below(2) ? 1.0 : -1.0, rng.below(2) ? 1.0 : -1.0};
        const Eigen::VectorXcd y = h * x;
        worst_recovery = std::max(worst_recovery, (rf::zf_combiner(h) * y - x).cwiseAbs().maxCoeff());
    }
    o.require(worst_snr <= 1e-10, "post-ZF SNR mismatch");
    o.require(worst_recovery <= 1e-10, "noiseless recovery error");
    o.detail = "100 matrices, max rel SNR err " + fmt(worst_snr, 3) + ", max recovery err " + fmt(worst_recovery, 3) +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome fading_statistics()
{
    Outcome o;
    // Statistics pooled over the 256 entries of a 16x16 process.
    const std::uint32_t n = 16;
    const std::size_t samples = 100'000;
    rf::GaussMarkovFading process(n, n, 0.01, RandomSource(20260104, 0));
    rf::ChannelMatrix prev = process.current();
    double power = prev.squaredNorm();
    double lag = 0;
    for (std::size_t t = 1; t < samples; ++t)
    {
        const rf::ChannelMatrix &h = process.next();
        power += h.squaredNorm();
        lag += (h.array() * prev.array().conjugate()).real().sum();
        prev = h;
    }
    const double entries = n * n;
    const double variance = power / (entries * samples);
    const double rho_hat = lag / (entries * (samples - 1)) / variance;
    const double rho = std::cyl_bessel_j(0.0, 2 * std::numbers::pi * 0.01);
    o.require(std::abs(rho_hat - rho) <= 0.005, "lag-1 autocorrelation");
    o.require(std::abs(variance - 1) <= 0.02, "variance");
    o.detail = "lag-1 " + fmt(rho_hat, 8) + " vs J0 " + fmt(rho, 8) + ", variance " + fmt(variance, 5) +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome monotonicity()
{
    Outcome o;
    const pipeline::ArchitectureConfig cfg;
    std::vector<double> snr;
    for (int i = 0; i <= 10; ++i)
        snr.push_back(5.0 * i);
    const auto s = pipeline::sweep_snr(cfg, snr);
    for (std::size_t i = 1; i < s.size(); ++i)
        o.require(s[i].rate.rate_bps > s[i - 1].rate.rate_bps, "SNR sweep not increasing at " + fmt(s[i].x));

    std::vector<double> d;
    for (int i = 0; i < 6; ++i)
        d.push_back(1000.0 + 1800.0 * i);
    const auto h1 = pipeline::sweep_distance(cfg, rf::Hop::Hop1, d);
    const auto h2 = pipeline::sweep_distance(cfg, rf::Hop::Hop2, d);
    for (std::size_t i = 1; i < d.size(); ++i)
    {
        o.require(h1[i].rate.rate_bps <= h1[i - 1].rate.rate_bps, "HOP1 sweep increases at " + fmt(d[i]));
        o.require(h2[i].rate.rate_bps <= h2[i - 1].rate.rate_bps, "HOP2 sweep increases at " + fmt(d[i]));
        o.require(h1[i].rate.rate_bps < h2[i].rate.rate_bps, "HOP1 curve not below HOP2 at " + fmt(d[i]));
    }
    o.detail = "SNR 0..50 dB: " + fmt(s.front().rate.rate_bps / 1e6, 4) + " -> " +
               fmt(s.back().rate.rate_bps / 1e6, 4) + " Mbps; at 10 km HOP1-swept " +
               fmt(h1.back().rate.rate_bps / 1e6, 4) + " < HOP2-swept " + fmt(h2.back().rate.rate_bps / 1e6, 4) +
               " Mbps" + (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome mc_rate_sanity()
{
    Outcome o;
    std::vector<std::pair<std::string, mc::McLinkConfig>> configs;
    mc::McLinkConfig base;
    base.n_realizations = 2;
    configs.emplace_back("default", base);
    mc::McLinkConfig c = base;
    c.molecules_per_impulse = 100;
    c.n_realizations = 20;
    configs.emplace_back("100 molecules", c);
    c = base;
    c.molecules_per_impulse = 1'000;
    c.receiver_mode = mc::ReceiverMode::Passive;
    configs.emplace_back("passive", c);
    c = base;
    c.molecules_per_impulse = 1'000;
    c.sensor_mode = mc::SensorMode::Independent;
    configs.emplace_back("independent", c);

    std::string rates;
    for (const auto &[name, cfg] : configs)
    {
        const double r = mc::mc_information_rate(cfg, RandomSource(20260105, 0)).rate_bps;
        o.require(r <= 2500.0, name + " exceeds 2500 bps");
        rates += (rates.empty() ? "" : ", ") + name + " " + fmt(r, 5);
    }

    ConfusionMatrix perfect(2);
    perfect.add(0, 0, 500'000);
    perfect.add(1, 1, 500'000);
    const double mi_perfect = estimate_mi(perfect);
    o.require(mi_perfect == 1.0, "perfect channel MI != 1");

    RandomSource rng(20260106, 0);
    ConfusionMatrix bsc(2);
    for (int i = 0; i < 1'000'000; ++i)
    {
        const auto tx = static_cast<std::uint32_t>(rng.below(2));
        bsc.add(tx, rng.uniform() < 0.11 ? 1 - tx : tx);
    }
    const double p = 0.11;
    const double expected = 1 + p * std::log2(p) + (1 - p) * std::log2(1 - p);
    const double mi_bsc = estimate_mi(bsc);
    o.require(std::abs(mi_bsc - expected) <= 0.01, "BSC(0.11) MI");
    o.detail = "rates [bps] " + rates + "; MI perfect " + fmt(mi_perfect) + ", BSC " + fmt(mi_bsc, 5) + " vs " +
               fmt(expected, 5) + (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

Outcome tsook_round_trip()
{
    Outcome o;
    thz::ThzLinkConfig cfg;
    cfg.noise_psd = 0;
    RandomSource rng(20260107, 0);
    std::size_t errors = 0;
    for (int k = 0; k < 10'000; ++k)
    {
        std::vector<std::uint8_t> bits(100);
        for (auto &b : bits)
            b = static_cast<std::uint8_t>(rng.below(2));
        const auto decided = thz::energy_detect(thz::thz_receive(thz::tsook_modulate(bits, cfg), cfg, rng), cfg);
        for (std::size_t i = 0; i < bits.size(); ++i)
            errors += decided[i] != bits[i];
    }
    o.require(errors == 0, "bit errors in noiseless loopback");
    const double rate = thz::thz_rate(thz::ThzLinkConfig{}, 1.0).rate_bps;
    o.require(std::abs(rate - 1e11) <= 1e-9 * 1e11, "rate at MI=1 != 100 Gbps");
    o.detail = "10^4 sequences, " + std::to_string(errors) + " errors; rate(MI=1) = " + fmt(rate / 1e9) + " Gbps" +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_determinism()
{
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("nanolink_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path config = dir / "run.cfg";
    std::ofstream(config) << "mc.molecules_per_impulse = 500\nmc.sequence_length = 12\nmc.n_realizations = 4\n"
                             "mc.pilot_frames = 3\nthz.n_symbols = 30000\nbackhaul.n_fading_samples = 1500\n"
                             "seed = 314159\n";

    const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
        {"mc", {"mc.csv"}},
        {"thz", {"thz.csv"}},
        {"backhaul", {"backhaul.csv"}},
        {"pipeline", {"pipeline.csv"}},
        {"sweep-snr --grid 0:50:5", {"sweep_snr.csv"}},
        {"sweep-distance", {"sweep_distance_hop1.csv", "sweep_distance_hop2.csv"}},
    };
    int compared = 0;
    for (const auto &[args, files] : runs)
    {
        std::vector<fs::path> outs;
        for (const std::string workers : {"1", "1", "4"})
        {
            const fs::path out = dir / ("run" + std::to_string(outs.size()));
            fs::remove_all(out);
            const std::string cmd = std::string(NANOLINK_CLI_PATH) + " " + args + " --config " + config.string() +
                                    " --workers " + workers + " --out " + out.string() + " > /dev/null";
            const int status = std::system(cmd.c_str());
            o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "'" + args + "' failed");
            outs.push_back(out);
        }
        for (const auto &f : files)
        {
            const std::string ref = slurp(outs[0] / f);
            o.require(!ref.empty(), f + " missing");
            o.require(ref == slurp(outs[1] / f), f + " differs between repeats");
            o.require(ref == slurp(outs[2] / f), f + " differs with 4 workers");
            ++compared;
        }
    }
    fs::remove_all(dir);
    o.detail = std::to_string(compared) + " CSV files byte-identical across repeats and --workers 1/4" +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"calibration anchor", calibration_anchor},
        {"diffusion oracle", diffusion_oracle},
        {"passive-receiver oracle", passive_oracle},
        {"ZF oracle", zf_oracle},
        {"fading statistics", fading_statistics},
        {"monotonicity suite", monotonicity},
        {"MC rate sanity", mc_rate_sanity},
        {"TS-OOK round trip", tsook_round_trip},
        {"determinism", cli_determinism},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria)
    {
        Outcome result;
        try
        {
            result = check();
        }
        catch (const std::exception &e)
        {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        failures += result.pass ? 0 : 1;
        std::cout << (result.pass ? "PASS " : "FAIL ") << name << ": " << result.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures;
}
