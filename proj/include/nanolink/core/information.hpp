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

#ifndef NANOLINK_CORE_INFORMATION_HPP
#define NANOLINK_CORE_INFORMATION_HPP

#include <cstdint>
#include <vector>

namespace nanolink
{

/// Joint counts of (transmitted, decided) symbols over an L-ary alphabet.
class ConfusionMatrix
{
  public:
    explicit ConfusionMatrix(std::uint32_t levels = 2);

    std::uint32_t levels() const noexcept { return levels_; }
    void add(std::uint32_t tx, std::uint32_t rx, std::uint64_t n = 1);
    std::uint64_t at(std::uint32_t tx, std::uint32_t rx) const;
    std::uint64_t total() const noexcept { return total_; }

    /// Cell-wise sum; alphabets must match.
    ConfusionMatrix &merge(const ConfusionMatrix &other);

    friend bool operator==(const ConfusionMatrix &, const ConfusionMatrix &) = default;

  private:
    std::uint32_t levels_;
    std::vector<std::uint64_t> cells_;
    std::uint64_t total_ = 0;
};

/// Plug-in mutual information of the empirical joint distribution, in bits.
/// Throws ParameterError on an empty matrix.
double estimate_mi(const ConfusionMatrix &stats);

/// Mutual information in bits of a channel given as P(rx | tx) rows and an
/// input distribution.
double channel_mi(const std::vector<std::vector<double>> &transition, const std::vector<double> &prior);

} // namespace nanolink

#endif
