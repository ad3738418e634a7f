#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "../../src/app/commands.hpp"
#include "../../src/app/scenario.hpp"
#include "nfbeam/errors.hpp"

namespace {

using nfbeam::app::scenario;
using nfbeam::app::sweep_kind;

struct cli_options {
    std::string config_path;
    std::string output;
    std::string format;
    std::uint64_t seed = 0;
    int trials = 0;
    int threads = 0;
    bool has_output = false;
    bool has_format = false;
    bool has_seed = false;
    bool has_trials = false;
    bool has_threads = false;
};

void add_common_flags(CLI::App* cmd, cli_options& opts) {
    cmd->add_option("--config", opts.config_path, "scenario configuration file (JSON)");
    cmd->add_option("--output", opts.output, "output file path")
        ->each([&opts](const std::string&) { opts.has_output = true; });
    cmd->add_option("--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->each([&opts](const std::string&) { opts.has_format = true; });
    cmd->add_option("--seed", opts.seed, "random seed")
        ->each([&opts](const std::string&) { opts.has_seed = true; });
    cmd->add_option("--trials", opts.trials, "Monte-Carlo trial count")
        ->each([&opts](const std::string&) { opts.has_trials = true; });
    cmd->add_option("--threads", opts.threads, "worker thread count")
        ->each([&opts](const std::string&) { opts.has_threads = true; });
}

scenario build_scenario(const cli_options& opts, sweep_kind forced_default) {
    scenario s;
    if (!opts.config_path.empty()) {
        s = nfbeam::app::load_scenario_file(opts.config_path);
    } else {
        s.sweep = forced_default;
    }
    if (forced_default == sweep_kind::eta) {
        if (!opts.config_path.empty() && s.sweep != sweep_kind::eta) {
            throw nfbeam::config_error("config sweep '" + to_string(s.sweep) +
                                       "' does not match subcommand 'eta-sweep'");
        }
        s.sweep = sweep_kind::eta;
    } else if (forced_default == sweep_kind::sumrate) {
        if (!opts.config_path.empty() && s.sweep != sweep_kind::sumrate) {
            throw nfbeam::config_error("config sweep '" + to_string(s.sweep) +
                                       "' does not match subcommand 'sumrate'");
        }
        s.sweep = sweep_kind::sumrate;
    }
    if (opts.has_output) {
        s.output = opts.output;
    }
    if (opts.has_format) {
        s.format = opts.format;
    }
    if (opts.has_seed) {
        s.sumrate.seed = opts.seed;
    }
    if (opts.has_trials) {
        if (opts.trials < 1) {
            throw nfbeam::config_error("trials must be >= 1");
        }
        s.sumrate.trials = opts.trials;
    }
    if (opts.has_threads) {
        if (opts.threads < 1) {
            throw nfbeam::config_error("threads must be >= 1");
        }
        s.sumrate.threads = opts.threads;
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-field beam patterns, sidelobe metrics, and multi-user sumrate"};
    app.require_subcommand(1);

    cli_options pattern_opts;
    CLI::App* pattern = app.add_subcommand("pattern", "axial or lateral beam pattern with sidelobe report");
    add_common_flags(pattern, pattern_opts);

    cli_options eta_opts;
    CLI::App* eta = app.add_subcommand("eta-sweep", "planar closed-form sidelobe level vs argument ratio");
    add_common_flags(eta, eta_opts);

    cli_options sumrate_opts;
    CLI::App* sumrate = app.add_subcommand("sumrate", "Monte-Carlo multi-user sumrate vs SNR");
    add_common_flags(sumrate, sumrate_opts);

    cli_options table_opts;
    CLI::App* table = app.add_subcommand("table1", "sidelobe-level reference table for the four standard layouts");
    add_common_flags(table, table_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pattern->parsed()) {
            nfbeam::app::run_pattern(build_scenario(pattern_opts, sweep_kind::axial));
        } else if (eta->parsed()) {
            nfbeam::app::run_eta_sweep(build_scenario(eta_opts, sweep_kind::eta));
        } else if (sumrate->parsed()) {
            nfbeam::app::run_sumrate(build_scenario(sumrate_opts, sweep_kind::sumrate));
        } else if (table->parsed()) {
            scenario s = build_scenario(table_opts, sweep_kind::axial);
            if (!table_opts.has_format) {
                s.format = "json";
            }
            nfbeam::app::run_table1(std::move(s));
        }
    } catch (const nfbeam::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const nfbeam::numeric_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
