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

#ifndef NANOLINK_CORE_DIGEST_HPP
#define NANOLINK_CORE_DIGEST_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace nanolink
{

/// Order-independent fingerprint of a set of named configuration values.
///
/// Values are rendered with round-trip precision and sorted by key before
/// hashing, so the digest depends on what was configured and not on the order
/// in which keys were written.
class DigestBuilder
{
  public:
    DigestBuilder &add(std::string_view key, double value);
    DigestBuilder &add(std::string_view key, std::uint64_t value);
    DigestBuilder &add(std::string_view key, std::string_view value);

    /// Merges another builder's entries under `prefix.`.
    DigestBuilder &merge(std::string_view prefix, const DigestBuilder &other);

    /// Canonical "key=value" lines.
    std::string canonical() const;

    /// 16 hex digits (FNV-1a 64 of canonical()).
    std::string hex() const;

  private:
    std::map<std::string, std::string, std::less<>> entries_;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace nanolink

#endif
