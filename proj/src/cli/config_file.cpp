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

#include "nanolink/cli/config_file.hpp"

#include "nanolink/core/error.hpp"
#include "nanolink/core/units.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace nanolink::cli
{

namespace
{

using pipeline::ArchitectureConfig;
using Setter = std::function<void(ArchitectureConfig &, std::string_view)>;

#define NANOLINK_FIELD(path) [](ArchitectureConfig & c) -> auto & { return c.path; }

template <typename Ref>
Setter quantity(Ref ref, Dimension dim)
{
    return [=](ArchitectureConfig &c, std::string_view v) { ref(c) = parse_quantity(v, dim); };
}

template <typename Ref>
Setter count(Ref ref)
{
    return [=](ArchitectureConfig &c, std::string_view v) {
        using T = std::remove_reference_t<decltype(ref(c))>;
        const std::uint64_t n = parse_count(v);
        if (n > std::numeric_limits<T>::max())
            throw ParameterError("value " + std::string(v) + " is too large");
        ref(c) = static_cast<T>(n);
    };
}

std::string normalize_token(std::string_view s)
{
    std::string out;
    for (const char ch : s)
        out.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    return out;
}

template <typename E, typename Ref>
Setter enumeration(Ref ref, std::initializer_list<E> values)
{
    const std::vector<E> options(values);
    return [=](ArchitectureConfig &c, std::string_view v) {
        const std::string wanted = normalize_token(v);
        std::string known;
        for (const E e : options)
        {
            const std::string_view name = to_string(e);
            if (wanted == name)
            {
                ref(c) = e;
                return;
            }
            known += (known.empty() ? "" : ", ") + std::string(name);
        }
        throw ParameterError("'" + std::string(v) + "' is not one of " + known);
    };
}

const std::map<std::string, Setter, std::less<>> &registry()
{
    using D = Dimension;
    using namespace nanolink::mc;
    using rf::Hop2Precoding;
    static const std::map<std::string, Setter, std::less<>> table = {
        {"seed", count(NANOLINK_FIELD(master_seed))},

        {"mc.n_sensors", count(NANOLINK_FIELD(mc.n_sensors))},
        {"mc.ring_radius", quantity(NANOLINK_FIELD(mc.ring_radius), D::Length)},
        {"mc.molecules_per_impulse", count(NANOLINK_FIELD(mc.molecules_per_impulse))},
        {"mc.diffusion_coeff", quantity(NANOLINK_FIELD(mc.diffusion_coeff), D::Diffusivity)},
        {"mc.bit_duration", quantity(NANOLINK_FIELD(mc.bit_duration), D::Time)},
        {"mc.samples_per_bit", count(NANOLINK_FIELD(mc.samples_per_bit))},
        {"mc.sequence_length", count(NANOLINK_FIELD(mc.sequence_length))},
        {"mc.n_realizations", count(NANOLINK_FIELD(mc.n_realizations))},
        {"mc.receiver_radius", quantity(NANOLINK_FIELD(mc.receiver_radius), D::Length)},
        {"mc.receiver_mode",
         enumeration(NANOLINK_FIELD(mc.receiver_mode), {ReceiverMode::FullyAbsorbing, ReceiverMode::Passive})},
        {"mc.modulation", enumeration(NANOLINK_FIELD(mc.modulation), {Modulation::OOK, Modulation::CSK})},
        {"mc.csk_levels", count(NANOLINK_FIELD(mc.csk_levels))},
        {"mc.time_step", quantity(NANOLINK_FIELD(mc.time_step), D::Time)},
        {"mc.sensor_mode", enumeration(NANOLINK_FIELD(mc.sensor_mode), {SensorMode::Redundant, SensorMode::Independent})},
        {"mc.step_control", enumeration(NANOLINK_FIELD(mc.step_control), {StepControl::Adaptive, StepControl::Fixed})},
        {"mc.adaptive_step_fraction", quantity(NANOLINK_FIELD(mc.adaptive_step_fraction), D::Dimensionless)},
        {"mc.near_step_fraction", quantity(NANOLINK_FIELD(mc.near_step_fraction), D::Dimensionless)},
        {"mc.far_field_factor", quantity(NANOLINK_FIELD(mc.far_field_factor), D::Dimensionless)},
        {"mc.retire_after_bits", count(NANOLINK_FIELD(mc.retire_after_bits))},
        {"mc.pilot_frames", count(NANOLINK_FIELD(mc.pilot_frames))},

        {"thz.f_low", quantity(NANOLINK_FIELD(thz.f_low), D::Frequency)},
        {"thz.f_high", quantity(NANOLINK_FIELD(thz.f_high), D::Frequency)},
        {"thz.bandwidth", quantity(NANOLINK_FIELD(thz.bandwidth), D::Frequency)},
        {"thz.pulse_duration", quantity(NANOLINK_FIELD(thz.pulse_duration), D::Time)},
        {"thz.spread_ratio_beta", quantity(NANOLINK_FIELD(thz.spread_ratio_beta), D::Dimensionless)},
        {"thz.distance", quantity(NANOLINK_FIELD(thz.distance), D::Length)},
        {"thz.absorption_coeff", quantity(NANOLINK_FIELD(thz.absorption_coeff), D::InverseLength)},
        {"thz.tx_pulse_energy", quantity(NANOLINK_FIELD(thz.tx_pulse_energy), D::Energy)},
        {"thz.noise_psd", quantity(NANOLINK_FIELD(thz.noise_psd), D::SpectralDensity)},
        {"thz.n_symbols", count(NANOLINK_FIELD(thz.n_symbols))},

        {"backhaul.n_tx_handheld", count(NANOLINK_FIELD(backhaul.n_tx_handheld))},
        {"backhaul.n_rx_gateway", count(NANOLINK_FIELD(backhaul.n_rx_gateway))},
        {"backhaul.n_tx_gateway", count(NANOLINK_FIELD(backhaul.n_tx_gateway))},
        {"backhaul.n_rx_endpoint", count(NANOLINK_FIELD(backhaul.n_rx_endpoint))},
        {"backhaul.fd_norm", quantity(NANOLINK_FIELD(backhaul.fd_norm), D::Dimensionless)},
        {"backhaul.carrier_freq", quantity(NANOLINK_FIELD(backhaul.carrier_freq), D::Frequency)},
        {"backhaul.bandwidth", quantity(NANOLINK_FIELD(backhaul.bandwidth), D::Frequency)},
        {"backhaul.d_hop1", quantity(NANOLINK_FIELD(backhaul.d_hop1), D::Length)},
        {"backhaul.d_hop2", quantity(NANOLINK_FIELD(backhaul.d_hop2), D::Length)},
        {"backhaul.avg_snr_db_at_ref", quantity(NANOLINK_FIELD(backhaul.avg_snr_db_at_ref), D::Decibel)},
        {"backhaul.n_fading_samples", count(NANOLINK_FIELD(backhaul.n_fading_samples))},
        {"backhaul.hop2_precoding",
         enumeration(NANOLINK_FIELD(backhaul.hop2_precoding),
                     {Hop2Precoding::EigenBeamforming, Hop2Precoding::SingleAntenna})},
    };
    return table;
}

#undef NANOLINK_FIELD

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s)
{
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        return s.substr(1, s.size() - 2);
    return s;
}

/// Fully qualified key for `key`, resolving bare names.
std::string resolve_key(std::string_view key)
{
    const auto &table = registry();
    if (table.find(key) != table.end())
        return std::string(key);
    if (key.find('.') == std::string_view::npos)
    {
        std::vector<std::string> matches;
        for (const auto &[name, setter] : table)
        {
            const auto dot = name.find('.');
            if (dot != std::string::npos && std::string_view(name).substr(dot + 1) == key)
                matches.push_back(name);
        }
        if (matches.size() == 1)
            return matches.front();
        if (matches.size() > 1)
            throw ConfigError(std::string(key), "ambiguous key, qualify it as " + matches[0] + " or " + matches[1]);
    }
    throw ConfigError(std::string(key), "unknown key");
}

} // namespace

std::optional<std::string> process_env(const std::string &name)
{
    if (const char *value = std::getenv(name.c_str()))
        return std::string(value);
    return std::nullopt;
}

std::vector<std::string> config_keys()
{
    std::vector<std::string> keys;
    for (const auto &[name, setter] : registry())
        keys.push_back(name);
    return keys;
}

std::string env_name(std::string_view key)
{
    std::string out = "NANOLINK_";
    for (const char ch : key)
    {
        if (ch == '.')
            out += "__";
        else
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    return out;
}

void set_config_value(pipeline::ArchitectureConfig &cfg, std::string_view key, std::string_view value)
{
    const std::string name = resolve_key(key);
    try
    {
        registry().find(name)->second(cfg, trim(unquote(trim(value))));
    }
    catch (const ParameterError &e)
    {
        throw ConfigError(name, e.what());
    }
}

void validate_config(const pipeline::ArchitectureConfig &cfg)
{
    try
    {
        pipeline::validate(cfg);
    }
    catch (const ParameterError &e)
    {
        throw ConfigError("", std::string("invalid configuration: ") + e.what());
    }
}

pipeline::ArchitectureConfig parse_config_text(std::string_view text, const EnvLookup &env)
{
    pipeline::ArchitectureConfig cfg;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no)
    {
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto sep = line.find_first_of("=:");
        if (sep == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string_view key = trim(line.substr(0, sep));
        if (key.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + ": missing key");
        const std::string name = resolve_key(key);
        if (!seen.insert(name).second)
            throw ConfigError(name, "set more than once");
        set_config_value(cfg, name, line.substr(sep + 1));
    }

    if (env)
        for (const auto &name : config_keys())
            if (const auto value = env(env_name(name)))
                set_config_value(cfg, name, *value);

    validate_config(cfg);
    return cfg;
}

pipeline::ArchitectureConfig parse_config(const std::filesystem::path &path, const EnvLookup &env)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), env);
}

} // namespace nanolink::cli
