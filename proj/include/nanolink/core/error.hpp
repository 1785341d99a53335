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

#ifndef NANOLINK_CORE_ERROR_HPP
#define NANOLINK_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nanolink
{

// Error taxonomy shared by all segments. Everything derives from std::exception
// so the CLI can map families onto exit codes.

/// A function argument violates its documented precondition.
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A model is evaluated outside its range of validity (e.g. UMi below 10 m).
class OutOfValidityError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Channel matrix is rank deficient, zero forcing is undefined.
class SingularChannelError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Configuration file or key problem. `key()` names the offending key when known.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string &what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }

    const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

/// Wraps a failure raised while simulating one segment of the pipeline.
class SegmentError : public std::runtime_error
{
  public:
    SegmentError(std::string segment, const std::string &what)
        : std::runtime_error("[" + segment + "] " + what), segment_(std::move(segment))
    {
    }

    const std::string &segment() const noexcept { return segment_; }

  private:
    std::string segment_;
};

} // namespace nanolink

#endif
