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

#include "nanolink/mc/information.hpp"

#include "nanolink/core/error.hpp"
#include "nanolink/core/parallel.hpp"
#include "nanolink/mc/channel.hpp"

#include <algorithm>
#include <cmath>

namespace nanolink::mc
{

namespace
{

struct PilotObservation
{
    std::uint32_t symbol;
    std::uint64_t total;
};

double pilot_mi(const std::vector<PilotObservation> &obs, std::uint64_t threshold, const McLinkConfig &cfg)
{
    const std::uint32_t L = alphabet_size(cfg);
    std::vector<std::vector<double>> transition(L, std::vector<double>(L, 0.0));
    std::vector<double> per_class(L, 0.0);
    for (const auto &o : obs)
    {
        const std::uint64_t level = (o.total + threshold) / (2 * threshold);
        transition[o.symbol][std::min<std::uint64_t>(level, L - 1)] += 1.0;
        per_class[o.symbol] += 1.0;
    }
    for (std::uint32_t x = 0; x < L; ++x)
        for (auto &p : transition[x])
            p /= per_class[x];
    return channel_mi(transition, std::vector<double>(L, 1.0 / L));
}

} // namespace

ThresholdCalibration calibrate_threshold(const McLinkConfig &cfg, RandomSource &rng)
{
    validate(cfg);
    const std::uint32_t L = alphabet_size(cfg);

    std::vector<PilotObservation> obs;
    std::vector<std::uint32_t> frame(cfg.sequence_length, 0);
    for (std::uint32_t symbol = 0; symbol < L; ++symbol)
    {
        frame[0] = symbol;
        for (std::uint32_t f = 0; f < cfg.pilot_frames; ++f)
        {
            const SampleMatrix rx = transmit_sequence(frame, cfg, rng);
            for (std::uint32_t i = 0; i < cfg.sequence_length; ++i)
                obs.push_back({i == 0 ? symbol : 0u, rx.bit_total(i)});
        }
    }

    // Decisions only change where some (2s+1) t crosses an observed total, so
    // these candidates cover every distinct outcome: candidate c stands for all
    // integer thresholds in (previous candidate, c].
    std::vector<std::uint64_t> candidates{1};
    std::uint64_t max_total = 0;
    for (const auto &o : obs)
    {
        max_total = std::max(max_total, o.total);
        for (std::uint32_t s = 0; s + 1 < L; ++s)
            candidates.push_back(std::max<std::uint64_t>(1, o.total / (2 * s + 1)));
    }
    candidates.push_back(max_total + 1);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<double> mi(candidates.size());
    for (std::size_t j = 0; j < candidates.size(); ++j)
        mi[j] = pilot_mi(obs, candidates[j], cfg);

    const double best = *std::max_element(mi.begin(), mi.end());
    ThresholdCalibration out;
    out.pilot_mi = best;
    if (best <= 1e-12)
    {
        out.degenerate = true;
        out.threshold = 1;
        return out;
    }

    constexpr double kTie = 1e-12;
    const auto first = static_cast<std::size_t>(
        std::find_if(mi.begin(), mi.end(), [&](double v) { return v >= best - kTie; }) - mi.begin());
    std::size_t last = first;
    while (last + 1 < mi.size() && mi[last + 1] >= best - kTie)
        ++last;
    const std::uint64_t lo = first == 0 ? 1 : candidates[first - 1] + 1;
    const std::uint64_t hi = candidates[last];
    out.threshold = lo + (hi - lo) / 2;
    return out;
}

double IsiStats::error_rate_after_silent() const noexcept
{
    return after_silent_total ? static_cast<double>(after_silent_errors) / after_silent_total : 0.0;
}

double IsiStats::error_rate_after_emission() const noexcept
{
    return after_emission_total ? static_cast<double>(after_emission_errors) / after_emission_total : 0.0;
}

IsiStats &IsiStats::merge(const IsiStats &o) noexcept
{
    after_silent_errors += o.after_silent_errors;
    after_silent_total += o.after_silent_total;
    after_emission_errors += o.after_emission_errors;
    after_emission_total += o.after_emission_total;
    return *this;
}

McRunSummary run_mc_link(const McLinkConfig &cfg, const RandomSource &rng, unsigned workers)
{
    validate(cfg);
    const std::uint32_t L = alphabet_size(cfg);

    RandomSource pilot_rng = rng.derive(0);
    const ThresholdCalibration calibration = calibrate_threshold(cfg, pilot_rng);

    struct Partial
    {
        ConfusionMatrix confusion;
        IsiStats isi;
    };
    std::vector<Partial> partials(cfg.n_realizations, Partial{ConfusionMatrix(L), {}});

    parallel_for(cfg.n_realizations, workers, [&](std::size_t k) {
        RandomSource stream = rng.derive(k + 1);
        std::vector<std::uint32_t> tx(cfg.sequence_length);
        for (auto &s : tx)
            s = static_cast<std::uint32_t>(stream.below(L));
        const SampleMatrix samples = transmit_sequence(tx, cfg, stream);
        const auto rx = detect(samples, calibration.threshold, cfg.modulation, L);

        Partial &p = partials[k];
        for (std::uint32_t i = 0; i < cfg.sequence_length; ++i)
        {
            p.confusion.add(tx[i], rx[i]);
            if (i == 0)
                continue;
            const bool error = tx[i] != rx[i];
            if (tx[i - 1] == 0)
            {
                ++p.isi.after_silent_total;
                p.isi.after_silent_errors += error ? 1 : 0;
            }
            else
            {
                ++p.isi.after_emission_total;
                p.isi.after_emission_errors += error ? 1 : 0;
            }
        }
    });

    McRunSummary summary{{}, ConfusionMatrix(L), {}, calibration};
    for (const auto &p : partials)
    {
        summary.confusion.merge(p.confusion);
        summary.isi.merge(p.isi);
    }

    RateResult &rate = summary.rate;
    rate.segment = Segment::MC;
    rate.mi_bits_per_use = summary.confusion.total() ? estimate_mi(summary.confusion) : 0.0;
    rate.rate_bps = rate.mi_bits_per_use / cfg.bit_duration;
    rate.n_realizations = cfg.n_realizations;
    rate.config_digest = config_digest(cfg);
    rate.seed = rng.master_seed();
    return summary;
}

RateResult mc_information_rate(const McLinkConfig &cfg, const RandomSource &rng, unsigned workers)
{
    return run_mc_link(cfg, rng, workers).rate;
}

} // namespace nanolink::mc
