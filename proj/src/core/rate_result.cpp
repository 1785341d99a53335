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

#include "nanolink/core/rate_result.hpp"

#include "nanolink/core/error.hpp"

namespace nanolink
{

std::string_view to_string(Segment s) noexcept
{
    switch (s)
    {
    case Segment::MC:
        return "MC";
    case Segment::THZ:
        return "THZ";
    case Segment::HOP1:
        return "HOP1";
    case Segment::HOP2:
        return "HOP2";
    case Segment::E2E:
        return "E2E";
    }
    return "?";
}

Segment parse_segment(std::string_view name)
{
    for (auto s : {Segment::MC, Segment::THZ, Segment::HOP1, Segment::HOP2, Segment::E2E})
        if (to_string(s) == name)
            return s;
    throw ParameterError("unknown segment '" + std::string(name) + "'");
}

} // namespace nanolink
