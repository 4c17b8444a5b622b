#include "yardsale/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "yardsale/config_io.hpp"
#include "yardsale/emit.hpp"
#include "yardsale/errors.hpp"
#include "yardsale/harness.hpp"
#include "yardsale/presets.hpp"

namespace yardsale {

namespace {

namespace fs = std::filesystem;

struct RunOptions {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t runs = 0;
    bool runs_set = false;
    std::uint32_t threads = 0;
    bool threads_set = false;
    bool quiet = false;
};

int do_run(const RunOptions& opt) {
    ExperimentConfig config;
    std::string source;
    if (!opt.preset.empty() && !opt.config_path.empty()) {
        std::cerr << "error: give either a config file or --preset, not both\n";
        return kExitConfigError;
    }
    if (!opt.preset.empty()) {
        const auto* preset = presets::find(opt.preset);
        if (preset == nullptr) {
            std::cerr << "error: unknown preset \"" << opt.preset
                      << "\" (run `yardsale presets` for the list)\n";
            return kExitConfigError;
        }
        config = parse_config_text(std::string(preset->text));
        source = "preset \"" + opt.preset + "\"";
    } else if (!opt.config_path.empty()) {
        config = parse_config(opt.config_path);
        source = opt.config_path;
    } else {
        std::cerr << "error: a config file or --preset is required\n";
        return kExitConfigError;
    }

    if (opt.seed_set) config.run.master_seed = opt.seed;
    if (opt.runs_set) {
        if (opt.runs < 1 || opt.runs > 100'000'000) {
            throw ConfigError("--runs: must be a positive run count");
        }
        config.run.n_runs = static_cast<std::uint32_t>(opt.runs);
    }
    if (opt.threads_set) config.run.threads = opt.threads;
    config.run.validate();

    fs::path out_dir = config.output.directory;
    if (const char* env = std::getenv("YARDSALE_OUT_DIR"); env != nullptr && *env != '\0') {
        out_dir = env;
    }
    if (!opt.out_dir.empty()) out_dir = opt.out_dir;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw RuntimeFailure("cannot create output directory " + out_dir.string() + ": " +
                             ec.message());
    }

    RunResult representative(WealthVector::uniform(config.run.n_agents));
    EnsembleSummary summary = run_ensemble(config.run, &representative);

    const TradeGraph graph = config.run.build_graph();
    nlohmann::json echo = config_to_json(config);
    std::vector<std::string> written;
    if (config.output.csv) {
        emit_timeseries(representative, out_dir / "timeseries.csv");
        written.push_back((out_dir / "timeseries.csv").string());
        if (config.run.n_runs > 1) {
            emit_ensemble_series(summary, out_dir / "ensemble_series.csv");
            written.push_back((out_dir / "ensemble_series.csv").string());
        }
    }
    if (config.output.dot) {
        emit_graph_drawing(representative, graph, out_dir / "graph.dot");
        written.push_back((out_dir / "graph.dot").string());
    }
    if (config.output.svg) {
        emit_graph_svg(representative, graph, out_dir / "graph.svg");
        written.push_back((out_dir / "graph.svg").string());
    }
    if (config.output.summary) {
        emit_summary(summary, echo, out_dir / "summary.json");
        written.push_back((out_dir / "summary.json").string());
    }

    if (!opt.quiet) {
        std::printf("config: %s (seed %llu, runs %u)\n", source.c_str(),
                    static_cast<unsigned long long>(config.run.master_seed), config.run.n_runs);
        std::printf("run %u: %llu steps, %s, final gap %.3g\n", representative.run_index,
                    static_cast<unsigned long long>(representative.steps_executed),
                    representative.stop_reason == StopReason::gap_reached ? "gap_reached"
                                                                          : "max_steps",
                    representative.samples.back().gap);
        std::printf("condensation_rate %.4f, independence_rate %.4f, runs_at_max_steps %u\n",
                    summary.condensation_rate, summary.independence_rate,
                    summary.runs_hit_max_steps);
        std::printf("mean_cumulative_stake_sq %.6f +- %.6f\n", summary.mean_cumulative_stake_sq,
                    summary.se_cumulative_stake_sq);
        std::printf("winner_frequencies:");
        for (double f : summary.winner_frequencies) std::printf(" %.4f", f);
        std::printf("\n");
        if (summary.total_admissibility_violations > 0) {
            std::printf("admissibility violations: %llu across %u runs\n",
                        static_cast<unsigned long long>(summary.total_admissibility_violations),
                        summary.runs_with_violations);
        }
        for (const auto& f : written) std::printf("wrote %s\n", f.c_str());
    }
    return kExitOk;
}

int do_presets() {
    for (const auto& p : presets::all()) {
        std::printf("%-20s %.*s\n", std::string(p.name).c_str(),
                    static_cast<int>(p.description.size()), p.description.data());
    }
    return kExitOk;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Deterministic simulator for yard-sale wealth exchange on trading graphs"};
    app.require_subcommand(1);

    RunOptions opt;
    auto* run_cmd = app.add_subcommand("run", "Execute a config file or a named preset");
    run_cmd->add_option("config", opt.config_path, "JSON config file");
    run_cmd->add_option("--preset", opt.preset, "built-in preset name");
    run_cmd->add_option("--seed", opt.seed, "override run.seed");
    run_cmd->add_option("--runs", opt.runs, "override run.n_runs");
    run_cmd->add_option("--threads", opt.threads, "override run.threads (0 = hardware)");
    run_cmd->add_option("--out", opt.out_dir, "output directory (overrides config and "
                                              "YARDSALE_OUT_DIR)");
    run_cmd->add_flag("--quiet", opt.quiet, "suppress progress output");

    auto* presets_cmd = app.add_subcommand("presets", "List built-in presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    opt.seed_set = run_cmd->count("--seed") > 0;
    opt.runs_set = run_cmd->count("--runs") > 0;
    opt.threads_set = run_cmd->count("--threads") > 0;

    try {
        if (presets_cmd->parsed()) return do_presets();
        return do_run(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}

} // namespace yardsale
