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

#include "nanolink/pipeline/pipeline.hpp"

#include "nanolink/core/error.hpp"
#include "nanolink/core/parallel.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/mc/information.hpp"

#include <json.hpp>

#include <algorithm>

namespace nanolink::pipeline
{

namespace
{

template <typename Fn>
auto tagged(Segment segment, Fn &&fn) -> decltype(fn())
{
    try
    {
        return fn();
    }
    catch (const SegmentError &)
    {
        throw;
    }
    catch (const std::exception &e)
    {
        throw SegmentError(std::string(to_string(segment)), e.what());
    }
}

nlohmann::ordered_json rate_json(const RateResult &r)
{
    nlohmann::ordered_json j;
    j["segment"] = to_string(r.segment);
    j["rate_bps"] = r.rate_bps;
    j["mi_bits_per_use"] = r.mi_bits_per_use;
    j["n_realizations"] = r.n_realizations;
    j["config_digest"] = r.config_digest;
    j["seed"] = r.seed;
    return j;
}

} // namespace

void validate(const ArchitectureConfig &cfg)
{
    mc::validate(cfg.mc);
    thz::validate(cfg.thz);
    rf::validate(cfg.backhaul);
}

DigestBuilder describe(const ArchitectureConfig &cfg)
{
    DigestBuilder d;
    d.merge("mc", mc::describe(cfg.mc))
        .merge("thz", thz::describe(cfg.thz))
        .merge("backhaul", rf::describe(cfg.backhaul))
        .add("seed", cfg.master_seed);
    return d;
}

std::string config_digest(const ArchitectureConfig &cfg)
{
    return describe(cfg).hex();
}

PipelineReport run_pipeline(const ArchitectureConfig &cfg, unsigned workers)
{
    PipelineReport report;
    report.config_digest = config_digest(cfg);
    report.master_seed = cfg.master_seed;

    const RateResult mc_rate = tagged(Segment::MC, [&] {
        return mc::mc_information_rate(cfg.mc, derive_stream(cfg.master_seed, kMcStream), workers);
    });
    const RateResult thz_rate = tagged(Segment::THZ, [&] {
        return thz::run_thz_link(cfg.thz, derive_stream(cfg.master_seed, kThzStream), workers).rate;
    });
    const rf::BackhaulRates backhaul = tagged(Segment::E2E, [&] {
        return rf::evaluate_backhaul(cfg.backhaul, cfg.backhaul.avg_snr_db_at_ref,
                                     derive_stream(cfg.master_seed, kBackhaulStream));
    });

    report.per_segment = {mc_rate, thz_rate, backhaul.hop1, backhaul.hop2};
    report.backhaul_e2e = backhaul.e2e;
    report.alert_bottleneck = *std::min_element(
        report.per_segment.begin(), report.per_segment.end(),
        [](const RateResult &a, const RateResult &b) { return a.rate_bps < b.rate_bps; });
    return report;
}

std::vector<SweepRow> sweep_snr(const ArchitectureConfig &cfg, std::span<const double> snr_grid, unsigned workers)
{
    const RandomSource rng = derive_stream(cfg.master_seed, kBackhaulStream);
    std::vector<SweepRow> rows(snr_grid.size());
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        rows[i].x = snr_grid[i];
        rows[i].rate = tagged(Segment::E2E, [&] { return rf::backhaul_rate(cfg.backhaul, snr_grid[i], rng); });
    });
    return rows;
}

std::vector<SweepRow> sweep_distance(const ArchitectureConfig &cfg, rf::Hop hop, std::span<const double> d_grid,
                                     unsigned workers)
{
    const RandomSource rng = derive_stream(cfg.master_seed, kBackhaulStream);
    const double snr_db = cfg.backhaul.avg_snr_db_at_ref;
    std::vector<SweepRow> rows(d_grid.size());
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        rf::BackhaulConfig point = cfg.backhaul;
        (hop == rf::Hop::Hop1 ? point.d_hop1 : point.d_hop2) = d_grid[i];
        rows[i].x = d_grid[i];
        rows[i].rate = tagged(Segment::E2E, [&] { return rf::backhaul_rate(point, snr_db, rng); });
    });
    return rows;
}

std::string to_json(const PipelineReport &report)
{
    nlohmann::ordered_json j;
    j["config_digest"] = report.config_digest;
    j["master_seed"] = report.master_seed;
    j["per_segment"] = nlohmann::ordered_json::array();
    for (const auto &r : report.per_segment)
        j["per_segment"].push_back(rate_json(r));
    j["backhaul_e2e"] = rate_json(report.backhaul_e2e);
    j["alert_bottleneck"] = rate_json(report.alert_bottleneck);
    return j.dump(2) + "\n";
}

} // namespace nanolink::pipeline
