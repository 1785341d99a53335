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

#ifndef NANOLINK_PIPELINE_PIPELINE_HPP
#define NANOLINK_PIPELINE_PIPELINE_HPP

#include "nanolink/core/digest.hpp"
#include "nanolink/core/rate_result.hpp"
#include "nanolink/mc/config.hpp"
#include "nanolink/rf/backhaul.hpp"
#include "nanolink/thz/thz_link.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nanolink::pipeline
{

/// Intra-body molecular hop, body-area THz hop and the two-hop RF backhaul.
struct ArchitectureConfig
{
    mc::McLinkConfig mc;
    thz::ThzLinkConfig thz;
    rf::BackhaulConfig backhaul;
    std::uint64_t master_seed = 1;
};

// Stream indices derived from master_seed, one per segment.
inline constexpr std::uint64_t kMcStream = 1;
inline constexpr std::uint64_t kThzStream = 2;
inline constexpr std::uint64_t kBackhaulStream = 3;

void validate(const ArchitectureConfig &cfg);

/// Every semantically meaningful value, keyed `mc.*`, `thz.*`, `backhaul.*`
/// and `seed`.
DigestBuilder describe(const ArchitectureConfig &cfg);
std::string config_digest(const ArchitectureConfig &cfg);

struct PipelineReport
{
    std::vector<RateResult> per_segment; ///< MC, THZ, HOP1, HOP2 in that order
    RateResult backhaul_e2e;             ///< min(HOP1, HOP2)
    RateResult alert_bottleneck;         ///< copy of the slowest per-segment result
    std::string config_digest;
    std::uint64_t master_seed = 0;

    friend bool operator==(const PipelineReport &, const PipelineReport &) = default;
};

/// Runs all segments on streams derived from cfg.master_seed. Failures are
/// rethrown as SegmentError tagged with the segment name.
PipelineReport run_pipeline(const ArchitectureConfig &cfg, unsigned workers = 1);

struct SweepRow
{
    double x = 0.0; ///< swept value (dB or m)
    RateResult rate;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

/// Backhaul end-to-end rate at each SNR, hop distances as configured.
/// All points share the same fading realizations.
std::vector<SweepRow> sweep_snr(const ArchitectureConfig &cfg, std::span<const double> snr_grid,
                                unsigned workers = 1);

/// Backhaul end-to-end rate as one hop's distance varies. The other hop keeps
/// its configured distance and the SNR is backhaul.avg_snr_db_at_ref.
std::vector<SweepRow> sweep_distance(const ArchitectureConfig &cfg, rf::Hop hop, std::span<const double> d_grid,
                                     unsigned workers = 1);

/// Pretty-printed JSON; doubles keep round-trip precision.
std::string to_json(const PipelineReport &report);

} // namespace nanolink::pipeline

#endif
