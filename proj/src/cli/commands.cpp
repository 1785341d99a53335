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

#include "nanolink/cli/commands.hpp"

#include "nanolink/cli/config_file.hpp"
#include "nanolink/core/digest.hpp"
#include "nanolink/core/error.hpp"
#include "nanolink/core/random.hpp"
#include "nanolink/mc/information.hpp"
#include "nanolink/pipeline/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace nanolink::cli
{

namespace
{

namespace fs = std::filesystem;
using pipeline::ArchitectureConfig;

constexpr std::size_t kMaxGridPoints = 100'000;

struct Options
{
    std::string config;
    std::string seed;
    std::string out = "results";
    std::string realizations;
    std::string grid;
    std::string hop = "both";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

struct Output
{
    fs::path path;
    std::string text;
};

class CsvTable
{
  public:
    explicit CsvTable(std::string_view first_column)
    {
        text_ << first_column << ',' << kCsvTail << '\n';
    }

    void row(std::string_view label, const RateResult &r)
    {
        text_ << label << ',' << format_double(r.rate_bps) << ',' << to_string(r.segment) << ','
              << r.n_realizations << ',' << r.seed << '\n';
    }

    std::string str() const { return text_.str(); }

  private:
    std::ostringstream text_;
};

std::string sweep_csv(std::string_view column, const std::vector<pipeline::SweepRow> &rows)
{
    CsvTable csv(column);
    for (const auto &row : rows)
        csv.row(format_double(row.x), row.rate);
    return csv.str();
}

void write_file(const fs::path &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
}

std::string normalize_hop(std::string_view hop)
{
    std::string out;
    for (const char ch : hop)
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    return out;
}

void apply_realizations(ArchitectureConfig &cfg, std::string_view command, std::uint64_t n)
{
    if (command == "thz")
        cfg.thz.n_symbols = n;
    else if (command == "backhaul" || command == "sweep-snr" || command == "sweep-distance")
        cfg.backhaul.n_fading_samples = n;
    else
        cfg.mc.n_realizations = n;
}

std::vector<Output> execute(std::string_view command, const ArchitectureConfig &cfg, const Options &opt,
                            const std::vector<double> &grid, std::ostream &out)
{
    const fs::path dir(opt.out);
    const unsigned workers = opt.workers;
    std::vector<Output> outputs;

    if (command == "mc")
    {
        const auto summary =
            mc::run_mc_link(cfg.mc, derive_stream(cfg.master_seed, pipeline::kMcStream), workers);
        CsvTable csv("quantity");
        csv.row("mc_rate", summary.rate);
        outputs.push_back({dir / "mc.csv", csv.str()});
        out << "MC rate " << format_double(summary.rate.rate_bps) << " bps, threshold "
            << summary.calibration.threshold << (summary.calibration.degenerate ? " (degenerate)" : "") << '\n';
    }
    else if (command == "thz")
    {
        const auto summary =
            thz::run_thz_link(cfg.thz, derive_stream(cfg.master_seed, pipeline::kThzStream), workers);
        CsvTable csv("quantity");
        csv.row("thz_rate", summary.rate);
        outputs.push_back({dir / "thz.csv", csv.str()});
        out << "THz rate " << format_double(summary.rate.rate_bps) << " bps, BER "
            << format_double(summary.bit_error_rate) << '\n';
    }
    else if (command == "backhaul")
    {
        const auto rates = rf::evaluate_backhaul(cfg.backhaul, cfg.backhaul.avg_snr_db_at_ref,
                                                 derive_stream(cfg.master_seed, pipeline::kBackhaulStream));
        CsvTable csv("quantity");
        csv.row("hop1", rates.hop1);
        csv.row("hop2", rates.hop2);
        csv.row("backhaul_e2e", rates.e2e);
        outputs.push_back({dir / "backhaul.csv", csv.str()});
        out << "backhaul rate " << format_double(rates.e2e.rate_bps) << " bps\n";
    }
    else if (command == "pipeline")
    {
        const auto report = pipeline::run_pipeline(cfg, workers);
        CsvTable csv("quantity");
        for (const auto &r : report.per_segment)
            csv.row(to_string(r.segment), r);
        csv.row("backhaul_e2e", report.backhaul_e2e);
        csv.row("alert_bottleneck", report.alert_bottleneck);
        outputs.push_back({dir / "pipeline.csv", csv.str()});
        outputs.push_back({dir / "pipeline_report.json", pipeline::to_json(report)});
        out << "alert bottleneck " << to_string(report.alert_bottleneck.segment) << ' '
            << format_double(report.alert_bottleneck.rate_bps) << " bps, backhaul "
            << format_double(report.backhaul_e2e.rate_bps) << " bps\n";
    }
    else if (command == "sweep-snr")
    {
        outputs.push_back({dir / "sweep_snr.csv", sweep_csv("snr_db", pipeline::sweep_snr(cfg, grid, workers))});
    }
    else if (command == "sweep-distance")
    {
        const std::string hop = normalize_hop(opt.hop);
        for (const rf::Hop h : {rf::Hop::Hop1, rf::Hop::Hop2})
        {
            if (hop != "BOTH" && hop != rf::to_string(h))
                continue;
            const std::string name = h == rf::Hop::Hop1 ? "sweep_distance_hop1.csv" : "sweep_distance_hop2.csv";
            outputs.push_back({dir / name, sweep_csv("d_m", pipeline::sweep_distance(cfg, h, grid, workers))});
        }
    }
    return outputs;
}

} // namespace

std::vector<double> parse_grid(std::string_view text, Dimension dim)
{
    std::vector<double> points;
    try
    {
        if (text.find(':') != std::string_view::npos)
        {
            std::vector<std::string_view> parts;
            std::size_t begin = 0;
            for (std::size_t pos = text.find(':'); pos != std::string_view::npos; pos = text.find(':', begin))
            {
                parts.push_back(text.substr(begin, pos - begin));
                begin = pos + 1;
            }
            parts.push_back(text.substr(begin));
            if (parts.size() != 3)
                throw ConfigError("--grid", "expected start:stop:step");
            const double start = parse_quantity(parts[0], dim);
            const double stop = parse_quantity(parts[1], dim);
            const double step = parse_quantity(parts[2], dim);
            if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
                throw ConfigError("--grid", "range bounds and step must be finite");
            if (!(step > 0))
                throw ConfigError("--grid", "step must be positive");
            if (stop < start)
                throw ConfigError("--grid", "stop must not be below start");
            const double span = (stop - start) / step;
            if (span >= static_cast<double>(kMaxGridPoints))
                throw ConfigError("--grid", "too many grid points");
            const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
            for (std::size_t i = 0; i < n; ++i)
            {
                double x = start + static_cast<double>(i) * step;
                if (std::abs(x - stop) <= 1e-9 * step)
                    x = stop;
                points.push_back(x);
            }
        }
        else
        {
            std::size_t begin = 0;
            for (;;)
            {
                const auto pos = text.find(',', begin);
                points.push_back(parse_quantity(text.substr(begin, pos - begin), dim));
                if (pos == std::string_view::npos)
                    break;
                begin = pos + 1;
            }
        }
    }
    catch (const ParameterError &e)
    {
        throw ConfigError("--grid", e.what());
    }
    return points;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"nanolink: hybrid intra-body to cloud link simulator", "nanolink"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"mc", "molecular hop information rate"},
        {"thz", "THz TS-OOK hop information rate"},
        {"backhaul", "two-hop RF backhaul ergodic rates"},
        {"pipeline", "all segments, backhaul and alert-path bottleneck"},
        {"sweep-snr", "backhaul rate versus average SNR"},
        {"sweep-distance", "backhaul rate versus per-hop distance"},
    };
    for (const auto &[name, help] : commands)
    {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "config file (key = value)");
        sub->add_option("--seed", opt.seed, "master seed");
        sub->add_option("--out", opt.out, "output directory")->capture_default_str();
        sub->add_option("--realizations", opt.realizations,
                        "mc realizations, thz symbols or backhaul fading samples");
        sub->add_option("--workers", opt.workers, "worker threads (results do not depend on it)")
            ->check(CLI::PositiveNumber);
        if (name == "sweep-snr")
            sub->add_option("--grid", opt.grid, "start:stop:step, list or value (dB)")->default_str("0:50:5");
        if (name == "sweep-distance")
        {
            sub->add_option("--grid", opt.grid, "start:stop:step, list or value (m)")
                ->default_str("1km:10km:1.8km");
            sub->add_option("--hop", opt.hop, "HOP1, HOP2 or both")->capture_default_str();
        }
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    ArchitectureConfig cfg;
    std::vector<double> grid;
    try
    {
        cfg = opt.config.empty() ? parse_config_text("", process_env) : parse_config(opt.config);
        if (!opt.seed.empty())
            cfg.master_seed = parse_count(opt.seed);
        if (!opt.realizations.empty())
            apply_realizations(cfg, command, parse_count(opt.realizations));
        validate_config(cfg);
        if (command == "sweep-snr")
            grid = parse_grid(opt.grid.empty() ? "0:50:5" : opt.grid, Dimension::Decibel);
        if (command == "sweep-distance")
        {
            grid = parse_grid(opt.grid.empty() ? "1km:10km:1.8km" : opt.grid, Dimension::Length);
            const std::string hop = normalize_hop(opt.hop);
            if (hop != "BOTH" && hop != "HOP1" && hop != "HOP2")
                throw ConfigError("--hop", "expected HOP1, HOP2 or both");
        }
    }
    catch (const std::exception &e)
    {
        err << "nanolink: configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    try
    {
        const auto started = std::chrono::steady_clock::now();
        const auto outputs = execute(command, cfg, opt, grid, out);
        fs::create_directories(opt.out);
        for (const auto &o : outputs)
        {
            write_file(o.path, o.text);
            out << "wrote " << o.path.string() << '\n';
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

        nlohmann::ordered_json manifest;
        manifest["command"] = command;
        manifest["config_digest"] = pipeline::config_digest(cfg);
        manifest["master_seed"] = cfg.master_seed;
        manifest["tool_version"] = kToolVersion;
        manifest["wall_time_s"] = elapsed.count();
        if (!grid.empty())
        {
            manifest["grid"] = nlohmann::ordered_json::array();
            for (const double x : grid)
                manifest["grid"].push_back(format_double(x));
        }
        manifest["outputs"] = nlohmann::ordered_json::array();
        for (const auto &o : outputs)
            manifest["outputs"].push_back(o.path.string());
        std::string name = command + "_manifest.json";
        std::replace(name.begin(), name.end(), '-', '_');
        write_file(fs::path(opt.out) / name, manifest.dump(2) + "\n");
    }
    catch (const std::exception &e)
    {
        err << "nanolink: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace nanolink::cli
