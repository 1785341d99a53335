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

#ifndef NANOLINK_MC_CHANNEL_HPP
#define NANOLINK_MC_CHANNEL_HPP

#include "nanolink/core/random.hpp"
#include "nanolink/mc/config.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nanolink::mc
{

/// Receiver observations: one row per bit period, one column per sample.
///
/// FULLY_ABSORBING: molecules absorbed since the previous sample instant.
/// PASSIVE: molecules inside the receiver sphere at the sample instant.
class SampleMatrix
{
  public:
    SampleMatrix(std::uint32_t n_bits, std::uint32_t samples_per_bit, ReceiverMode mode);

    std::uint32_t n_bits() const noexcept { return n_bits_; }
    std::uint32_t samples_per_bit() const noexcept { return samples_per_bit_; }
    ReceiverMode mode() const noexcept { return mode_; }

    std::uint64_t &at(std::uint32_t bit, std::uint32_t sample) { return counts_[index(bit, sample)]; }
    std::uint64_t at(std::uint32_t bit, std::uint32_t sample) const { return counts_[index(bit, sample)]; }

    /// Row-major view, sample index = bit * samples_per_bit + sample.
    std::span<const std::uint64_t> flat() const noexcept { return counts_; }
    std::span<std::uint64_t> flat() noexcept { return counts_; }

    /// Detection statistic of one bit period: sum over its samples.
    std::uint64_t bit_total(std::uint32_t bit) const;
    std::uint64_t total() const;

    friend bool operator==(const SampleMatrix &, const SampleMatrix &) = default;

  private:
    std::size_t index(std::uint32_t bit, std::uint32_t sample) const;

    std::uint32_t n_bits_;
    std::uint32_t samples_per_bit_;
    ReceiverMode mode_;
    std::vector<std::uint64_t> counts_;
};

/// Simulates one frame. Symbol i is released at the start of bit period i by
/// every emitting sensor (emission_size molecules); molecules persist across
/// bit boundaries until absorbed or retired, so inter-symbol interference is
/// part of the output. Throws ParameterError when the frame length differs
/// from sequence_length or a symbol is outside the alphabet.
SampleMatrix transmit_sequence(std::span<const std::uint32_t> symbols, const McLinkConfig &cfg, RandomSource &rng);

/// Symbol decisions from per-bit totals.
///
/// OOK: 1 iff total >= threshold. CSK with L levels: nearest of the reference
/// totals 0, 2t, 4t, ..., 2(L-1)t, i.e. boundaries at odd multiples of t; for
/// L = 2 this is the OOK rule.
std::vector<std::uint32_t> detect(const SampleMatrix &samples, std::uint64_t threshold, Modulation modulation,
                                  std::uint32_t levels = 2);

} // namespace nanolink::mc

#endif
