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

#ifndef NANOLINK_CORE_RATE_RESULT_HPP
#define NANOLINK_CORE_RATE_RESULT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace nanolink
{

/// Link segments of the architecture. E2E is the two-hop backhaul.
enum class Segment
{
    MC,
    THZ,
    HOP1,
    HOP2,
    E2E,
};

std::string_view to_string(Segment s) noexcept;

/// Inverse of to_string. Throws ParameterError on unknown names.
Segment parse_segment(std::string_view name);

/// Achievable rate of one segment together with the provenance needed to
/// reproduce it.
struct RateResult
{
    Segment segment = Segment::MC;
    double rate_bps = 0.0;
    /// Mutual information per channel use (MC, THz) or mean spectral
    /// efficiency in bit/s/Hz (backhaul hops).
    double mi_bits_per_use = 0.0;
    std::uint64_t n_realizations = 0;
    std::string config_digest;
    std::uint64_t seed = 0;

    friend bool operator==(const RateResult &, const RateResult &) = default;
};

} // namespace nanolink

#endif
