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
#include "nanolink/core/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace nanolink;
using namespace nanolink::cli;
namespace fs = std::filesystem;

namespace
{

const char *kTinyConfig = R"(# small but complete run
mc.molecules_per_impulse = 300
mc.sequence_length = 10
mc.n_realizations = 2
mc.pilot_frames = 2
thz.n_symbols = 20000
backhaul.n_fading_samples = 1000
)";

struct TempDir
{
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("nanolink_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(std::vector<std::string> args, std::string *out_text = nullptr, std::string *err_text = nullptr)
{
    args.insert(args.begin(), "nanolink");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str();
    if (err_text)
        *err_text = err.str();
    return code;
}

bool parse_number(const std::string &s, double &v)
{
    if (s == "-inf")
    {
        v = -INFINITY;
        return true;
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    return cells;
}

// Schema: <first>,rate_bps,segment,n_realizations,seed. Sweep files have a
// numeric first column; other files a row label. Returns the row count.
std::size_t check_csv_schema(const fs::path &p, std::uint64_t seed)
{
    std::ifstream in(p);
    std::string line;
    REQUIRE(std::getline(in, line));
    const auto header = split(line);
    REQUIRE(header.size() == 5);
    const std::set<std::string> firsts = {"snr_db", "d_m", "quantity"};
    CHECK(firsts.count(header[0]) == 1);
    CHECK(line.substr(header[0].size() + 1) == kCsvTail);
    const bool numeric_first = header[0] != "quantity";
    const std::set<std::string> segments = {"MC", "THZ", "HOP1", "HOP2", "E2E"};

    std::size_t rows = 0;
    while (std::getline(in, line))
    {
        const auto cells = split(line);
        REQUIRE(cells.size() == 5);
        double x = 0, rate = 0;
        if (numeric_first)
            CHECK(parse_number(cells[0], x));
        else
            CHECK_FALSE(cells[0].empty());
        CHECK(parse_number(cells[1], rate));
        CHECK(rate >= 0.0);
        CHECK(segments.count(cells[2]) == 1);
        std::uint64_t n = 0, s = 0;
        CHECK(std::from_chars(cells[3].data(), cells[3].data() + cells[3].size(), n).ec == std::errc());
        CHECK(n >= 1);
        CHECK(std::from_chars(cells[4].data(), cells[4].data() + cells[4].size(), s).ec == std::errc());
        CHECK(s == seed);
        ++rows;
    }
    return rows;
}

} // namespace

TEST_CASE("empty config gives the documented defaults")
{
    const auto cfg = parse_config_text("");
    CHECK(cfg.mc.n_sensors == 5);
    CHECK(cfg.mc.ring_radius == 45e-9);
    CHECK(cfg.mc.molecules_per_impulse == 10'000);
    CHECK(cfg.mc.bit_duration == 400e-6);
    CHECK(cfg.thz.spread_ratio_beta == 100);
    CHECK(cfg.backhaul.n_rx_gateway == 16);
    CHECK(cfg.backhaul.n_rx_endpoint == 8);
    CHECK(cfg.backhaul.d_hop1 == 1000);
    CHECK(cfg.backhaul.d_hop2 == 1000);
    CHECK(cfg.backhaul.bandwidth == 20e6);
    CHECK(cfg.backhaul.carrier_freq == 3.5e9);
}

TEST_CASE("values, units and keys")
{
    auto cfg = parse_config_text("mc.ring_radius = 60 nm\nreceiver_radius: \"12 nm\"  # bare key\n"
                                 "mc.receiver_mode = passive\nmc.modulation = CSK\nmc.csk_levels = 4\n"
                                 "backhaul.hop2_precoding = single-antenna\nbackhaul.d_hop1 = 2.5 km\n"
                                 "thz.bandwidth = 1 THz\nseed = 77\n");
    CHECK(cfg.mc.ring_radius == doctest::Approx(60e-9).epsilon(1e-15));
    CHECK(cfg.mc.receiver_radius == doctest::Approx(12e-9).epsilon(1e-15));
    CHECK(cfg.mc.receiver_mode == mc::ReceiverMode::Passive);
    CHECK(cfg.mc.modulation == mc::Modulation::CSK);
    CHECK(cfg.backhaul.hop2_precoding == rf::Hop2Precoding::SingleAntenna);
    CHECK(cfg.backhaul.d_hop1 == 2500.0);
    CHECK(cfg.master_seed == 77);

    const auto keys = config_keys();
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(keys.size() == 43);
    CHECK(env_name("mc.ring_radius") == "NANOLINK_MC__RING_RADIUS");
    CHECK(env_name("seed") == "NANOLINK_SEED");
}

TEST_CASE("config errors name the key")
{
    auto key_of = [](const std::string &text) {
        try
        {
            parse_config_text(text);
        }
        catch (const ConfigError &e)
        {
            return e.key() + "|" + e.what();
        }
        return std::string("no error");
    };
    CHECK(key_of("mc.wobble = 3").starts_with("mc.wobble|"));
    CHECK(key_of("bandwidth = 3 MHz").find("ambiguous") != std::string::npos);
    CHECK(key_of("mc.ring_radius = 45 ms").starts_with("mc.ring_radius|"));
    CHECK(key_of("mc.modulation = QAM").starts_with("mc.modulation|"));
    CHECK(key_of("mc.n_sensors = 3\nmc.n_sensors = 4").find("more than once") != std::string::npos);
    CHECK(key_of("just words").find("line 1") != std::string::npos);
    CHECK(key_of("mc.n_sensors = 99999999999").starts_with("mc.n_sensors|"));

    const std::string both = key_of("mc.receiver_radius = 50 nm");
    CHECK(both.find("receiver_radius") != std::string::npos);
    CHECK(both.find("ring_radius") != std::string::npos);

    CHECK_THROWS_AS(parse_config("/nonexistent/nanolink.cfg"), ConfigError);
}

TEST_CASE("environment overrides")
{
    const EnvLookup env = [](const std::string &name) -> std::optional<std::string> {
        if (name == "NANOLINK_MC__RING_RADIUS")
            return "50 nm";
        if (name == "NANOLINK_SEED")
            return "9";
        return std::nullopt;
    };
    const auto cfg = parse_config_text("mc.ring_radius = 45 nm\n", env);
    CHECK(cfg.mc.ring_radius == doctest::Approx(50e-9).epsilon(1e-15));
    CHECK(cfg.master_seed == 9);
}

TEST_CASE("digest follows values, not layout")
{
    const auto a = parse_config_text("mc.ring_radius = 45 nm\nthz.distance = 4 mm\n");
    const auto b = parse_config_text("\n# reordered\nthz.distance=0.004\n  mc.ring_radius = 45e-9 \n");
    CHECK(pipeline::config_digest(a) == pipeline::config_digest(b));
    const auto defaults = parse_config_text("mc.ring_radius = 45 nm\n");
    CHECK(pipeline::config_digest(defaults) == pipeline::config_digest(parse_config_text("")));
    CHECK(pipeline::config_digest(a) != pipeline::config_digest(defaults));
}

TEST_CASE("grid parsing")
{
    CHECK(parse_grid("0:50:5", Dimension::Decibel).size() == 11);
    const auto d = parse_grid("1km:10km:1.8km", Dimension::Length);
    REQUIRE(d.size() == 6);
    CHECK(d.front() == 1000.0);
    CHECK(d.back() == 10000.0);
    CHECK(parse_grid("0:1:0.1", Dimension::Decibel).size() == 11);
    CHECK(parse_grid("-inf", Dimension::Decibel) == std::vector<double>{-INFINITY});
    CHECK(parse_grid("1,2, 4 dB", Dimension::Decibel) == std::vector<double>{1, 2, 4});
    CHECK(parse_grid("3:3:1", Dimension::Decibel) == std::vector<double>{3});

    CHECK_THROWS_AS(parse_grid("5:0:1", Dimension::Decibel), ConfigError);
    CHECK_THROWS_AS(parse_grid("0:10:0", Dimension::Decibel), ConfigError);
    CHECK_THROWS_AS(parse_grid("0:10", Dimension::Decibel), ConfigError);
    CHECK_THROWS_AS(parse_grid("a:b:c", Dimension::Decibel), ConfigError);
    CHECK_THROWS_AS(parse_grid("0:1e9:1e-3", Dimension::Decibel), ConfigError);
    CHECK_THROWS_AS(parse_grid("1 s", Dimension::Length), ConfigError);
}

TEST_CASE("every command writes schema-conforming CSV and a manifest")
{
    TempDir dir;
    const fs::path config = dir.path / "tiny.cfg";
    std::ofstream(config) << kTinyConfig;
    const fs::path out = dir.path / "out";
    const std::vector<std::string> base = {"--config", config.string(), "--out", out.string(), "--seed", "5"};

    struct Case
    {
        std::string command;
        std::vector<std::string> extra;
        std::map<std::string, std::size_t> files; // csv -> rows
    };
    const std::vector<Case> cases = {
        {"mc", {}, {{"mc.csv", 1}}},
        {"thz", {}, {{"thz.csv", 1}}},
        {"backhaul", {}, {{"backhaul.csv", 3}}},
        {"pipeline", {}, {{"pipeline.csv", 6}}},
        {"sweep-snr", {"--grid", "0:50:5"}, {{"sweep_snr.csv", 11}}},
        {"sweep-distance", {}, {{"sweep_distance_hop1.csv", 6}, {"sweep_distance_hop2.csv", 6}}},
    };
    for (const auto &c : cases)
    {
        CAPTURE(c.command);
        std::vector<std::string> args = {c.command};
        args.insert(args.end(), base.begin(), base.end());
        args.insert(args.end(), c.extra.begin(), c.extra.end());
        std::string err;
        REQUIRE(run(args, nullptr, &err) == kExitOk);
        for (const auto &[file, rows] : c.files)
            CHECK(check_csv_schema(out / file, 5) == rows);

        std::string manifest_name = c.command + "_manifest.json";
        std::replace(manifest_name.begin(), manifest_name.end(), '-', '_');
        const auto m = nlohmann::json::parse(slurp(out / manifest_name));
        CHECK(m["master_seed"].get<std::uint64_t>() == 5);
        CHECK(m["tool_version"] == std::string(kToolVersion));
        CHECK(m["config_digest"].get<std::string>().size() == 16);
        CHECK(m["wall_time_s"].get<double>() >= 0.0);
        CHECK(m["outputs"].size() == c.files.size() + (c.command == "pipeline" ? 1 : 0));
    }

    const std::string header = slurp(out / "sweep_snr.csv").substr(0, 45);
    CHECK(header == "snr_db,rate_bps,segment,n_realizations,seed\n0");

    const auto pipeline_csv = slurp(out / "pipeline.csv");
    CHECK(pipeline_csv.find("\nalert_bottleneck,") != std::string::npos);
    CHECK(pipeline_csv.find("\nbackhaul_e2e,") != std::string::npos);
    const auto report = nlohmann::json::parse(slurp(out / "pipeline_report.json"));
    CHECK(report["alert_bottleneck"]["segment"] == "MC");
}

TEST_CASE("identical invocations give identical bytes for any worker count")
{
    TempDir dir;
    const fs::path config = dir.path / "tiny.cfg";
    std::ofstream(config) << kTinyConfig;
    for (const std::string command : {"sweep-snr", "pipeline"})
    {
        std::vector<std::string> texts;
        for (const std::string workers : {"1", "1", "3"})
        {
            const fs::path out = dir.path / ("w" + std::to_string(texts.size()));
            REQUIRE(run({command, "--config", config.string(), "--out", out.string(), "--workers", workers}) == kExitOk);
            texts.push_back(slurp(out / (command == "pipeline" ? "pipeline.csv" : "sweep_snr.csv")));
        }
        CHECK(texts[0] == texts[1]);
        CHECK(texts[0] == texts[2]);
    }
}

TEST_CASE("flags override the config")
{
    TempDir dir;
    const fs::path config = dir.path / "tiny.cfg";
    std::ofstream(config) << kTinyConfig;
    REQUIRE(run({"sweep-snr", "--config", config.string(), "--out", dir.path.string(), "--grid", "10",
                 "--realizations", "300", "--seed", "8"}) == kExitOk);
    const auto text = slurp(dir.path / "sweep_snr.csv");
    CHECK(text.find("\n10,") != std::string::npos);
    CHECK(text.find(",E2E,300,8\n") != std::string::npos);

    REQUIRE(run({"sweep-distance", "--config", config.string(), "--out", dir.path.string(), "--hop", "hop2",
                 "--grid", "1km,2km"}) == kExitOk);
    CHECK(fs::exists(dir.path / "sweep_distance_hop2.csv"));
    CHECK_FALSE(fs::exists(dir.path / "sweep_distance_hop1.csv"));
}

TEST_CASE("exit codes")
{
    TempDir dir;
    const fs::path bad = dir.path / "bad.cfg";
    std::ofstream(bad) << "mc.wobble = 1\n";
    std::string err;
    CHECK(run({"mc", "--config", bad.string(), "--out", dir.path.string()}, nullptr, &err) == kExitConfig);
    CHECK(err.find("mc.wobble") != std::string::npos);
    CHECK(run({"sweep-snr", "--grid", "10:0:1", "--out", dir.path.string()}) == kExitConfig);
    CHECK(run({"sweep-distance", "--hop", "HOP3", "--out", dir.path.string()}) == kExitConfig);
    CHECK(run({"thz", "--realizations", "0", "--out", dir.path.string()}) == kExitConfig);
    CHECK(run({"thz", "--seed", "x", "--out", dir.path.string()}) == kExitConfig);
    CHECK(run({}) == kExitConfig);
    CHECK(run({"teleport"}) == kExitConfig);
    CHECK(run({"--help"}) == kExitOk);

    // Output directory path is an existing regular file.
    const fs::path blocker = dir.path / "blocker";
    std::ofstream(blocker) << "x";
    CHECK(run({"sweep-snr", "--grid", "0", "--realizations", "10", "--out", (blocker / "sub").string()}) ==
          kExitRuntime);
}

TEST_CASE("executable smoke test")
{
    TempDir dir;
    const std::string cmd = std::string(NANOLINK_CLI_PATH) + " sweep-snr --grid 0:10:5 --realizations 200 --out " +
                            dir.path.string() + " > /dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(check_csv_schema(dir.path / "sweep_snr.csv", 1) == 3);

    const int bad = std::system((std::string(NANOLINK_CLI_PATH) + " sweep-snr --grid nope 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(bad) == 2);
}
