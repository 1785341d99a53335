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

#include "nanolink/core/information.hpp"

#include "nanolink/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace nanolink
{

ConfusionMatrix::ConfusionMatrix(std::uint32_t levels) : levels_(levels), cells_(std::size_t{levels} * levels, 0)
{
    if (levels < 2)
        throw ParameterError("ConfusionMatrix: at least two levels are required");
}

void ConfusionMatrix::add(std::uint32_t tx, std::uint32_t rx, std::uint64_t n)
{
    if (tx >= levels_ || rx >= levels_)
        throw ParameterError("ConfusionMatrix: symbol outside the alphabet");
    cells_[std::size_t{tx} * levels_ + rx] += n;
    total_ += n;
}

std::uint64_t ConfusionMatrix::at(std::uint32_t tx, std::uint32_t rx) const
{
    if (tx >= levels_ || rx >= levels_)
        throw ParameterError("ConfusionMatrix: symbol outside the alphabet");
    return cells_[std::size_t{tx} * levels_ + rx];
}

ConfusionMatrix &ConfusionMatrix::merge(const ConfusionMatrix &other)
{
    if (other.levels_ != levels_)
        throw ParameterError("ConfusionMatrix: cannot merge different alphabets");
    for (std::size_t i = 0; i < cells_.size(); ++i)
        cells_[i] += other.cells_[i];
    total_ += other.total_;
    return *this;
}

double estimate_mi(const ConfusionMatrix &stats)
{
    if (stats.total() == 0)
        throw ParameterError("estimate_mi: no observations");
    const std::uint32_t L = stats.levels();
    const double n = static_cast<double>(stats.total());
    std::vector<double> px(L, 0.0), py(L, 0.0);
    for (std::uint32_t x = 0; x < L; ++x)
        for (std::uint32_t y = 0; y < L; ++y)
        {
            px[x] += stats.at(x, y) / n;
            py[y] += stats.at(x, y) / n;
        }
    double mi = 0.0;
    for (std::uint32_t x = 0; x < L; ++x)
        for (std::uint32_t y = 0; y < L; ++y)
        {
            const double pxy = stats.at(x, y) / n;
            if (pxy > 0.0)
                mi += pxy * std::log2(pxy / (px[x] * py[y]));
        }
    // Rounding can leave tiny negative values on independent data.
    return std::clamp(mi, 0.0, std::log2(static_cast<double>(L)));
}

double channel_mi(const std::vector<std::vector<double>> &transition, const std::vector<double> &prior)
{
    const std::size_t nx = prior.size();
    if (transition.size() != nx || nx == 0)
        throw ParameterError("channel_mi: prior and transition rows disagree");
    const std::size_t ny = transition.front().size();
    std::vector<double> py(ny, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            py[y] += prior[x] * transition[x][y];
    double mi = 0.0;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
        {
            const double joint = prior[x] * transition[x][y];
            if (joint > 0.0)
                mi += joint * std::log2(transition[x][y] / py[y]);
        }
    return std::max(mi, 0.0);
}

} // namespace nanolink
