#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../src/app/io.hpp"
#include "nfbeam/metrics.hpp"
#include "nfbeam/response.hpp"

using namespace nfbeam;
using nlohmann::ordered_json;

namespace {

std::filesystem::path scratch_dir() {
    const std::filesystem::path dir = std::filesystem::current_path() / "cli_scratch";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string path_str(const std::string& name) {
    return (scratch_dir() / name).string();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& args, const std::string& stderr_path = "") {
    std::string cmd = std::string("\"") + BEAMSCOPE_BIN + "\" " + args + " >/dev/null";
    if (!stderr_path.empty()) {
        cmd += " 2>\"" + stderr_path + "\"";
    } else {
        cmd += " 2>/dev/null";
    }
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("usage errors exit with the configuration code") {
    CHECK(run_cli("") == 2);                       // a subcommand is required
    CHECK(run_cli("pattern --format xml") == 2);   // not a member of {csv, json}
    CHECK(run_cli("mystery") == 2);                // unknown subcommand
}

TEST_CASE("pattern without a geometry reports what is missing") {
    const std::string err = path_str("no_geometry.err");
    CHECK(run_cli("pattern", err) == 2);
    CHECK(read_file(err).find("geometry") != std::string::npos);
}

TEST_CASE("unknown config keys are named in the error") {
    const std::string cfg = path_str("typo.json");
    write_file(cfg, R"({"sweep": "eta", "trails": 500})");
    const std::string err = path_str("typo.err");
    CHECK(run_cli("eta-sweep --config \"" + cfg + "\"", err) == 2);
    CHECK(read_file(err).find("trails") != std::string::npos);
}

TEST_CASE("config sweep must match the subcommand") {
    const std::string cfg = path_str("mismatch.json");
    write_file(cfg, R"({"geometry": {"kind": "ula", "count": 8}, "sweep": "axial"})");
    const std::string err = path_str("mismatch.err");
    CHECK(run_cli("sumrate --config \"" + cfg + "\"", err) == 2);
    CHECK(read_file(err).find("does not match") != std::string::npos);
}

TEST_CASE("the reference table only renders as json") {
    CHECK(run_cli("table1 --format csv --output \"" + path_str("t1.csv") + "\"") == 2);
}

TEST_CASE("malformed json config exits with the configuration code") {
    const std::string cfg = path_str("broken.json");
    write_file(cfg, "{ not json");
    CHECK(run_cli("pattern --config \"" + cfg + "\"") == 2);
    CHECK(run_cli("pattern --config \"" + path_str("missing.json") + "\"") == 2);
}

TEST_CASE("command-line overrides are validated") {
    const std::string cfg = path_str("sumrate_tiny.json");
    write_file(cfg, R"({
        "geometry": {"kind": "ula", "count": 8},
        "sweep": "sumrate", "users": 1, "trials": 2, "snr_grid_db": [0.0]
    })");
    CHECK(run_cli("sumrate --config \"" + cfg + "\" --trials 0") == 2);
    CHECK(run_cli("sumrate --config \"" + cfg + "\" --threads 0") == 2);
}

TEST_CASE("axial pattern csv round-trips and matches its sidecar report") {
    const std::string cfg = path_str("pattern_axial.json");
    const std::string out = path_str("pattern_axial.csv");
    write_file(cfg, R"({
        "geometry": {"kind": "ula", "count": 96},
        "focus": "boresight_over40",
        "sweep": "axial",
        "grid": {"points": 3001},
        "format": "csv",
        "output": ")" + out + R"("
    })");
    REQUIRE(run_cli("pattern --config \"" + cfg + "\"") == 0);

    const app::csv_document doc = app::parse_csv(read_file(out));
    REQUIRE(doc.header == std::vector<std::string>{"coordinate", "gain_db"});
    REQUIRE(doc.rows.size() == 3001);
    CHECK(doc.config["sweep"] == "axial");
    CHECK(doc.config["geometry"]["kind"] == "ula");
    CHECK(doc.config["geometry"]["elements"] == 96);
    CHECK(doc.config["grid"]["spacing"] == "reciprocal");
    CHECK(doc.config["focus"]["preset"] == "boresight_over40");

    pattern_trace trace;
    trace.axis = sweep_axis::range;
    for (const std::vector<double>& row : doc.rows) {
        REQUIRE(row.size() == 2);
        trace.coordinate.push_back(row[0]);
        trace.gain.push_back(std::pow(10.0, row[1] / 10.0));
    }
    const sidelobe_report recomputed = analyze(trace);

    const ordered_json sidecar = ordered_json::parse(read_file(out + ".report.json"));
    CHECK(sidecar["schema"] == "nf-beamscope/1");
    CHECK(sidecar["kind"] == "sidelobe_report");
    CHECK(std::abs(recomputed.psll_db - sidecar["report"]["psll_db"].get<double>()) < 1e-9);
    CHECK(std::abs(recomputed.isll_db - sidecar["report"]["isll_db"].get<double>()) < 1e-9);
    CHECK(sidecar["report"]["mainlobe"]["has_half_power_width"].get<bool>());
}

TEST_CASE("lateral pattern json document carries the trace and report") {
    const std::string cfg = path_str("pattern_lateral.json");
    const std::string out = path_str("pattern_lateral.json.out");
    write_file(cfg, R"({
        "geometry": {"kind": "ucca", "rings": 2, "outer_count": 8},
        "focus": "boresight_over40",
        "sweep": "lateral",
        "grid": {"points": 501},
        "format": "json",
        "output": ")" + out + R"("
    })");
    REQUIRE(run_cli("pattern --config \"" + cfg + "\"") == 0);

    const ordered_json j = ordered_json::parse(read_file(out));
    CHECK(j["schema"] == "nf-beamscope/1");
    CHECK(j["kind"] == "pattern");
    // A ring layout focused along its axis defaults to the elevation cut.
    CHECK(j["config"]["lateral_axis"] == "elevation");
    CHECK(j["trace"]["axis"] == "elevation");
    REQUIRE(j["trace"]["coordinate"].size() == 501);
    REQUIRE(j["trace"]["gain_db"].size() == 501);
    CHECK(j["report"]["psll_db"].is_number());
}

TEST_CASE("explicit eta values yield the frozen endpoint level") {
    const std::string cfg = path_str("eta_single.json");
    const std::string out = path_str("eta_single.csv");
    write_file(cfg, R"({
        "sweep": "eta",
        "grid": {"values": [1.0]},
        "format": "csv",
        "output": ")" + out + R"("
    })");
    REQUIRE(run_cli("eta-sweep --config \"" + cfg + "\"") == 0);
    const app::csv_document doc = app::parse_csv(read_file(out));
    REQUIRE(doc.header == std::vector<std::string>{"eta_hat", "psll_db"});
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0][0] == 1.0);
    CHECK(std::abs(doc.rows[0][1] - (-17.5674115580)) < 1e-6);
}

TEST_CASE("sumrate runs are reproducible and seed-sensitive") {
    const std::string cfg = path_str("sumrate.json");
    write_file(cfg, R"({
        "geometry": {"kind": "ula", "count": 16},
        "sweep": "sumrate",
        "users": 3, "trials": 25,
        "angle_policy": "hemisphere", "snr_axis": "element",
        "snr_grid_db": [0.0, 10.0],
        "format": "csv"
    })");
    const std::string a = path_str("sumrate_a.csv");
    const std::string b = path_str("sumrate_b.csv");
    const std::string c = path_str("sumrate_c.csv");
    REQUIRE(run_cli("sumrate --config \"" + cfg + "\" --output \"" + a + "\"") == 0);
    REQUIRE(run_cli("sumrate --config \"" + cfg + "\" --output \"" + b + "\"") == 0);
    REQUIRE(run_cli("sumrate --config \"" + cfg + "\" --output \"" + c + "\" --seed 9") == 0);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(a) != read_file(c));

    const ordered_json meta = ordered_json::parse(read_file(a + ".meta.json"));
    CHECK(meta["schema"] == "nf-beamscope/1");
    CHECK(meta["kind"] == "sumrate_meta");
    CHECK(meta["seed"] == 1);
    CHECK(meta["trials"] == 25);
    CHECK(meta["config_hash"] == app::fnv1a_hex(meta["config"].dump()));
    CHECK(meta["config"]["angle_policy"] == "hemisphere");
    CHECK(meta["config"]["snr_axis"] == "element");
}

TEST_CASE("single-user sumrate matches the interference-free curve") {
    const std::string cfg = path_str("sumrate_solo.json");
    const std::string out = path_str("sumrate_solo.csv");
    write_file(cfg, R"({
        "geometry": {"kind": "ula", "count": 16},
        "sweep": "sumrate",
        "users": 1, "trials": 1,
        "snr_axis": "array",
        "snr_grid_db": [0.0, 5.0, 10.0],
        "format": "csv",
        "output": ")" + out + R"("
    })");
    REQUIRE(run_cli("sumrate --config \"" + cfg + "\"") == 0);
    const app::csv_document doc = app::parse_csv(read_file(out));
    REQUIRE(doc.rows.size() == 3);
    for (const std::vector<double>& row : doc.rows) {
        REQUIRE(row.size() == 3);
        const double gamma_n = std::pow(10.0, row[0] / 10.0);
        CHECK(std::abs(row[1] - std::log2(1.0 + gamma_n)) < 1e-12);
        CHECK(row[2] == 0.0);  // one trial: no spread
    }
}

TEST_CASE("default output lands next to the working directory") {
    const std::string dir = scratch_dir().string();
    const std::string cmd = "cd \"" + dir + "\" && \"" + BEAMSCOPE_BIN +
                            "\" eta-sweep >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(std::filesystem::exists(scratch_dir() / "eta_sweep.csv"));
    const app::csv_document doc =
        app::parse_csv(read_file((scratch_dir() / "eta_sweep.csv").string()));
    CHECK(doc.rows.size() == 100);  // default grid
}
