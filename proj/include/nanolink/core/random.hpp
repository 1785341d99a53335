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

#ifndef NANOLINK_CORE_RANDOM_HPP
#define NANOLINK_CORE_RANDOM_HPP

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include <cstdint>
#include <random>

namespace nanolink
{

/// Deterministic pseudo-random stream identified by (master_seed, stream_id).
///
/// The engine seed is a hash of both identifiers, so the stream assigned to a
/// Monte-Carlo realization depends only on its index and never on how many
/// workers are running. Values are cheap to move between threads; a single
/// instance must not be shared.
class RandomSource
{
  public:
    RandomSource(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Standard normal draw.
    double normal() { return normal_(engine_); }

    /// Unit-mean exponential draw.
    double exponential() { return exponential_(engine_); }

    /// Draw from N(mean, sigma^2). Throws ParameterError when sigma < 0.
    double gaussian(double mean, double sigma);

    /// Uniform on [0, 1).
    double uniform() { return std::generate_canonical<double, 53>(engine_); }

    /// Uniform integer on [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Child stream `index` of this stream. Children of distinct parents and
    /// distinct indices are distinct streams.
    RandomSource derive(std::uint64_t index) const;

    std::mt19937_64 &engine() noexcept { return engine_; }

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    boost::random::normal_distribution<double> normal_{0.0, 1.0};
    boost::random::exponential_distribution<double> exponential_{1.0};
};

/// Stream `index` of the family rooted at `master_seed`.
RandomSource derive_stream(std::uint64_t master_seed, std::uint64_t index);

/// Free-function form of RandomSource::gaussian.
double gaussian(RandomSource &rng, double mean, double sigma);

/// SplitMix64 finalizer; bijective on 64-bit integers.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace nanolink

#endif
