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

#include "nanolink/core/digest.hpp"

#include <charconv>
#include <cstdio>

namespace nanolink
{

std::string format_double(double value)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

DigestBuilder &DigestBuilder::add(std::string_view key, double value)
{
    entries_.insert_or_assign(std::string(key), format_double(value));
    return *this;
}

DigestBuilder &DigestBuilder::add(std::string_view key, std::uint64_t value)
{
    entries_.insert_or_assign(std::string(key), std::to_string(value));
    return *this;
}

DigestBuilder &DigestBuilder::add(std::string_view key, std::string_view value)
{
    entries_.insert_or_assign(std::string(key), std::string(value));
    return *this;
}

DigestBuilder &DigestBuilder::merge(std::string_view prefix, const DigestBuilder &other)
{
    for (const auto &[k, v] : other.entries_)
        entries_.insert_or_assign(std::string(prefix) + "." + k, v);
    return *this;
}

std::string DigestBuilder::canonical() const
{
    std::string out;
    for (const auto &[k, v] : entries_)
    {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

std::string DigestBuilder::hex() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : canonical())
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace nanolink
