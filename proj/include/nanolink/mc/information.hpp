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

#ifndef NANOLINK_MC_INFORMATION_HPP
#define NANOLINK_MC_INFORMATION_HPP

#include "nanolink/core/information.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/core/rate_result.hpp"
#include "nanolink/mc/config.hpp"

#include <cstdint>
#include <vector>

namespace nanolink::mc
{

using nanolink::channel_mi;
using nanolink::ConfusionMatrix;
using nanolink::estimate_mi;

/// The binary case of the confusion matrix.
using BinaryChannelStats = ConfusionMatrix;

struct ThresholdCalibration
{
    std::uint64_t threshold = 1;
    /// True when no threshold separates the pilot classes at all.
    bool degenerate = false;
    double pilot_mi = 0.0;
};

/// Pilot-based decision threshold.
///
/// Sends pilot_frames frames of each isolated nonzero symbol (symbol in slot 0,
/// zeros after) and pilot_frames all-zero frames, then picks the integer
/// threshold maximizing mutual information with equiprobable inputs. Ties are
/// broken towards the middle of the best plateau. Deterministic in `rng`.
ThresholdCalibration calibrate_threshold(const McLinkConfig &cfg, RandomSource &rng);

/// Decision errors in bit i > 0, split by whether bit i-1 was silent.
struct IsiStats
{
    std::uint64_t after_silent_errors = 0;
    std::uint64_t after_silent_total = 0;
    std::uint64_t after_emission_errors = 0;
    std::uint64_t after_emission_total = 0;

    double error_rate_after_silent() const noexcept;
    double error_rate_after_emission() const noexcept;
    IsiStats &merge(const IsiStats &o) noexcept;
};

struct McRunSummary
{
    RateResult rate;
    ConfusionMatrix confusion;
    IsiStats isi;
    ThresholdCalibration calibration;
};

/// Full Monte-Carlo run: calibrates on stream 0 of `rng`, then sends
/// n_realizations uniformly random frames, realization k on stream k + 1.
/// The result does not depend on `workers`.
McRunSummary run_mc_link(const McLinkConfig &cfg, const RandomSource &rng, unsigned workers = 1);

/// Rate of the molecular hop: estimated MI per symbol over bit_duration.
RateResult mc_information_rate(const McLinkConfig &cfg, const RandomSource &rng, unsigned workers = 1);

} // namespace nanolink::mc

#endif
