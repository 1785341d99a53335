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

#include "nanolink/core/random.hpp"

#include "nanolink/core/error.hpp"

#include <array>

namespace nanolink
{

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace
{

std::mt19937_64 seeded_engine(std::uint64_t master_seed, std::uint64_t stream_id)
{
    const std::uint64_t a = mix64(master_seed);
    const std::uint64_t b = mix64(stream_id ^ 0x6a09e667f3bcc909ULL);
    std::array<std::uint32_t, 4> words{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                                       static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

} // namespace

RandomSource::RandomSource(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id), engine_(seeded_engine(master_seed, stream_id))
{
}

double RandomSource::gaussian(double mean, double sigma)
{
    if (!(sigma >= 0.0))
        throw ParameterError("gaussian: sigma must be nonnegative");
    return mean + sigma * normal();
}

std::uint64_t RandomSource::below(std::uint64_t n)
{
    if (n == 0)
        throw ParameterError("below: n must be positive");
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

RandomSource RandomSource::derive(std::uint64_t index) const
{
    // The child family is keyed by a hash of the parent identity.
    const std::uint64_t child_master = mix64(master_seed_ ^ mix64(stream_id_ + 0x3c6ef372fe94f82bULL));
    return RandomSource(child_master, index);
}

RandomSource derive_stream(std::uint64_t master_seed, std::uint64_t index)
{
    return RandomSource(master_seed, index);
}

double gaussian(RandomSource &rng, double mean, double sigma)
{
    return rng.gaussian(mean, sigma);
}

} // namespace nanolink
