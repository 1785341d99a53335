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

#ifndef NANOLINK_CLI_CONFIG_FILE_HPP
#define NANOLINK_CLI_CONFIG_FILE_HPP

#include "nanolink/pipeline/pipeline.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nanolink::cli
{

// Config files are flat "key = value" lines (":" also works as separator).
// Keys carry their section: mc.*, thz.*, backhaul.*, plus the top-level
// `seed`. A key without a section is accepted when its name is unique across
// sections. Values may carry unit suffixes ("45 nm", "400 us", "3.5 GHz") and
// may be quoted. '#' starts a comment.
//
// Every key can be overridden from the environment as
// NANOLINK_<SECTION>__<NAME>, e.g. NANOLINK_MC__RING_RADIUS="50 nm" or
// NANOLINK_SEED=7. Precedence: command-line flags, environment, file, defaults.

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string &name);

/// Every recognized fully qualified key, sorted.
std::vector<std::string> config_keys();

/// Environment variable that overrides `key`.
std::string env_name(std::string_view key);

/// Assigns one value. Throws ConfigError naming the key when the key is
/// unknown or ambiguous or the value does not parse.
void set_config_value(pipeline::ArchitectureConfig &cfg, std::string_view key, std::string_view value);

/// Parses config text, applies environment overrides and validates. Throws
/// ConfigError naming the key (or line) and the violated constraint.
pipeline::ArchitectureConfig parse_config_text(std::string_view text, const EnvLookup &env = {});

/// parse_config_text on the contents of `path`.
pipeline::ArchitectureConfig parse_config(const std::filesystem::path &path, const EnvLookup &env = process_env);

/// Runs pipeline::validate and rethrows failures as ConfigError.
void validate_config(const pipeline::ArchitectureConfig &cfg);

} // namespace nanolink::cli

#endif
