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

#ifndef NANOLINK_CLI_COMMANDS_HPP
#define NANOLINK_CLI_COMMANDS_HPP

#include "nanolink/core/units.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nanolink::cli
{

inline constexpr std::string_view kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;  ///< config, flag or grid error
inline constexpr int kExitRuntime = 3; ///< simulation or I/O failure

/// CSV columns: <first>,rate_bps,segment,n_realizations,seed where <first> is
/// snr_db or d_m for sweeps and `quantity` (a row label) otherwise.
inline constexpr std::string_view kCsvTail = "rate_bps,segment,n_realizations,seed";

/// Expands "start:stop:step" (inclusive of stop), a comma list, or a single
/// value. Entries may carry unit suffixes of `dim`. Throws ConfigError.
std::vector<double> parse_grid(std::string_view text, Dimension dim);

/// Entry point of the nanolink executable.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nanolink::cli

#endif
