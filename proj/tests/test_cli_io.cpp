#include "doctest.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "yardsale/cli.hpp"
#include "yardsale/config_io.hpp"
#include "yardsale/emit.hpp"
#include "yardsale/errors.hpp"
#include "yardsale/harness.hpp"
#include "yardsale/presets.hpp"

using namespace yardsale;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() /
                   ("yardsale_test_" + tag + "_" + std::to_string(++counter));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("yardsale");
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace

TEST_CASE("minimal config applies the documented defaults") {
    const auto cfg = parse_config_text(R"({"model": {"n_agents": 4}})");
    CHECK(cfg.run.n_agents == 4);
    CHECK(cfg.run.delta == 0.01);
    CHECK(std::holds_alternative<UniformInit>(cfg.run.initial));
    CHECK(cfg.run.graph.kind == GraphKind::complete);
    CHECK(std::holds_alternative<ConstantFraction>(cfg.run.b_policy));
    CHECK(std::get<ConstantFraction>(cfg.run.b_policy).value == 0.25);
    CHECK(std::holds_alternative<FairCoin>(cfg.run.p_policy));
    CHECK(cfg.run.max_steps == 10'000'000);
    CHECK(cfg.run.stop_gap == 1e-9);
    CHECK(cfg.run.record_every == 100);
    CHECK(cfg.run.master_seed == 1);
    CHECK(cfg.run.n_runs == 1);
    CHECK(cfg.run.dominance_threshold == 0.99);
    CHECK(cfg.run.wealthy_threshold == 0.01);
    CHECK(cfg.output.directory == ".");
    CHECK(cfg.output.csv);
    CHECK(cfg.output.summary);
    CHECK_FALSE(cfg.output.dot);
}

TEST_CASE("fail-closed parsing rejects bad documents") {
    // unknown keys at every level
    CHECK_THROWS_AS(parse_config_text(R"({"modle": {"n_agents": 4}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n_agents": 4, "extra": 1}})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 4}, "run": {"seeed": 3}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(
                        R"({"model": {"n_agents": 4},
                            "policies": {"b_policy": {"kind": "constant", "bb": 2}}})"),
                    ConfigError);

    // range violations
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n_agents": 2, "delta": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n_agents": 2, "delta": 1}})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 2, "initial_wealth": [0.5, 0.6]}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 2, "initial_wealth": [0.0, 1.0]}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n_agents": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n_agents": 4}, "run": {"max_steps": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 4}, "run": {"stop_gap": 1.5}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 4}, "run": {"dominance_threshold": 0.4}})"),
        ConfigError);

    // graph problems
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 4}, "graph": {"kind": "tree"}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"model": {"n_agents": 2}, "graph": {"kind": "cycle"}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 4}, "graph": {"kind": "edge_list", "edges": [[0, 9]]}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 4},
                "graph": {"kind": "edge_list", "edges": [[0,1],[1,0]]}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 4}, "graph": {"kind": "complete", "edges": [[0,1]]}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 3}, "graph": {"kind": "path", "weights": [1.0]}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 3}, "graph": {"kind": "path", "weights": [1.0, -1.0]}})"),
        ConfigError);

    // policy problems
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 2, "delta": 0.3},
                "policies": {"b_policy": {"kind": "constant", "b": 0.25}}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 2},
                "policies": {"p_policy": {"kind": "constant", "p": 1.0}}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 2},
                "policies": {"p_policy": {"kind": "saturating_poverty", "kappa": 1.5}}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 3},
                "policies": {"b_policy": {"kind": "per_agent", "coeffs": [0.2, 0.5]}}})"),
        ConfigError);

    // malformed JSON names the parse failure
    CHECK_THROWS_AS(parse_config_text("{"), ConfigError);
    CHECK_THROWS_AS(parse_config(fs::path("/no/such/config.json")), ConfigError);
}

TEST_CASE("explicit initial wealth can fix the agent count") {
    const auto cfg =
        parse_config_text(R"({"model": {"initial_wealth": [0.5, 0.3, 0.2]}})");
    CHECK(cfg.run.n_agents == 3);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"model": {"n_agents": 4, "initial_wealth": [0.5, 0.3, 0.2]}})"),
        ConfigError);
}

TEST_CASE("config echo round-trips through parse_config") {
    const auto cfg = parse_config_text(R"({
        "model": {"n_agents": 4, "delta": 0.02, "initial_wealth": [0.1, 0.2, 0.3, 0.4]},
        "graph": {"kind": "edge_list", "edges": [[0,1],[1,2],[2,3]], "weights": [1, 2, 1]},
        "policies": {"b_policy": {"kind": "uniform", "lo": 0.1, "hi": 0.6},
                     "p_policy": {"kind": "saturating_poverty", "kappa": 0.9, "floor": 0.2}},
        "run": {"max_steps": 5000, "stop_gap": 1e-7, "record_every": 7, "seed": 99,
                "n_runs": 3, "dominance_threshold": 0.95, "threads": 2},
        "output": {"directory": "somewhere", "formats": ["csv", "dot"],
                   "wealth_columns": true, "wealthy_threshold": 0.02}
    })");
    const auto echo = config_to_json(cfg);
    const auto reparsed = parse_config_json(echo);
    CHECK(config_to_json(reparsed) == echo);
    CHECK(reparsed.run.master_seed == 99);
    CHECK(reparsed.run.record_wealth);
}

TEST_CASE("timeseries CSV: row count, stop contract, and exact round-trip") {
    RunConfig cfg;
    cfg.n_agents = 2;
    cfg.delta = 0.05;
    cfg.initial = ExplicitInit{{0.5, 0.5}};
    cfg.b_policy = ConstantFraction{0.25};
    cfg.max_steps = 100000;
    cfg.stop_gap = 1e-6;
    cfg.record_every = 25;
    cfg.master_seed = 77;
    const auto result = run_single(cfg);
    REQUIRE(result.stop_reason == StopReason::gap_reached);

    const auto dir = fresh_dir("csv");
    emit_timeseries(result, dir / "ts.csv");
    const std::string text = slurp(dir / "ts.csv");

    // header + one row per sample
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == result.samples.size() + 1);

    // every emitted double re-parses to the exact binary64 value
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,norm2_sq,gini,gap,cum_stake_sq");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 5);
        const auto& s = result.samples[row];
        CHECK(std::stoull(fields[0]) == s.step);
        CHECK(std::strtod(fields[1].c_str(), nullptr) == s.norm2_sq);
        CHECK(std::strtod(fields[2].c_str(), nullptr) == s.gini);
        CHECK(std::strtod(fields[3].c_str(), nullptr) == s.gap);
        CHECK(std::strtod(fields[4].c_str(), nullptr) == s.cum_stake_sq);
        ++row;
    }
    CHECK(row == result.samples.size());

    // the final recorded gap respects the stopping contract
    CHECK(result.samples.back().gap < cfg.stop_gap);

    // re-running the same seed gives byte-identical output
    const auto again = run_single(cfg);
    emit_timeseries(again, dir / "ts2.csv");
    CHECK(slurp(dir / "ts2.csv") == text);

    fs::remove_all(dir);
}

TEST_CASE("a three-sample result emits exactly four lines") {
    RunResult result(WealthVector({0.5, 0.5}));
    result.samples.resize(3);
    result.samples[0] = {0, 0.5, 0.0, 0.5, 0.0, {}};
    result.samples[1] = {10, 0.6, 0.2, 0.4, 0.01, {}};
    result.samples[2] = {20, 0.7, 0.3, 0.3, 0.02, {}};
    const auto dir = fresh_dir("rows");
    emit_timeseries(result, dir / "three.csv");
    const std::string text = slurp(dir / "three.csv");
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 4);
    fs::remove_all(dir);
}

TEST_CASE("wealth columns appear when snapshots were recorded") {
    RunConfig cfg;
    cfg.n_agents = 3;
    cfg.delta = 0.05;
    cfg.b_policy = ConstantFraction{0.25};
    cfg.max_steps = 50;
    cfg.stop_gap = 0.0;
    cfg.record_every = 10;
    cfg.record_wealth = true;
    const auto result = run_single(cfg);
    const auto dir = fresh_dir("wcols");
    emit_timeseries(result, dir / "w.csv");
    const std::string text = slurp(dir / "w.csv");
    CHECK(text.find("step,norm2_sq,gini,gap,cum_stake_sq,w0,w1,w2") == 0);
    fs::remove_all(dir);
}

TEST_CASE("DOT drawing shows condensed states with the graph's edges") {
    const auto dir = fresh_dir("dot");

    SUBCASE("path graph with two non-adjacent wealthy agents") {
        RunResult result(WealthVector({0.5, 0.0, 0.5}));
        const auto graph = TradeGraph::path(3);
        emit_graph_drawing(result, graph, dir / "path.dot");
        const std::string text = slurp(dir / "path.dot");
        CHECK(text.find("a0 -- a1;") != std::string::npos);
        CHECK(text.find("a1 -- a2;") != std::string::npos);
        CHECK(text.find("a0 -- a2;") == std::string::npos);
        // the impoverished middle node renders at the minimum size
        CHECK(text.find("a1 [label=\"a1\\n0.000000\", width=0.2500") != std::string::npos);
        CHECK(text.find("a0 [label=\"a0\\n0.500000\", width=1.4874") != std::string::npos);

        // byte-stable across re-emissions
        emit_graph_drawing(result, graph, dir / "path2.dot");
        CHECK(slurp(dir / "path2.dot") == text);
    }

    SUBCASE("complete graph condensed to one owner has one large node") {
        RunResult result(WealthVector({0.0, 1.0, 0.0, 0.0}));
        emit_graph_drawing(result, TradeGraph::complete(4), dir / "complete.dot");
        const std::string text = slurp(dir / "complete.dot");
        std::size_t big_nodes = 0;
        std::size_t pos = 0;
        while ((pos = text.find("width=2.0000", pos)) != std::string::npos) {
            ++big_nodes;
            pos += 1;
        }
        CHECK(big_nodes == 1);
    }

    fs::remove_all(dir);
}

TEST_CASE("SVG drawing is deterministic and complete") {
    const auto dir = fresh_dir("svg");
    RunResult result(WealthVector({0.5, 0.0, 0.5}));
    const auto graph = TradeGraph::path(3);
    emit_graph_svg(result, graph, dir / "a.svg");
    emit_graph_svg(result, graph, dir / "b.svg");
    const std::string text = slurp(dir / "a.svg");
    CHECK(slurp(dir / "b.svg") == text);
    std::size_t circles = 0;
    std::size_t pos = 0;
    while ((pos = text.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 1;
    }
    CHECK(circles == 3);
    std::size_t edges = 0;
    pos = 0;
    while ((pos = text.find("<line", pos)) != std::string::npos) {
        ++edges;
        pos += 1;
    }
    CHECK(edges == graph.edges().size());
    fs::remove_all(dir);
}

TEST_CASE("summary JSON carries the ensemble indicators and a parsable echo") {
    auto cfg = parse_config_text(R"({
        "model": {"n_agents": 3, "delta": 0.05, "initial_wealth": [0.5, 0.3, 0.2]},
        "run": {"max_steps": 200000, "stop_gap": 1e-6, "seed": 11, "n_runs": 25,
                "threads": 2}
    })");
    const auto summary = run_ensemble(cfg.run);
    const auto dir = fresh_dir("summary");
    emit_summary(summary, config_to_json(cfg), dir / "summary.json");

    const auto doc = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(doc.at("n_runs").get<std::uint32_t>() == 25);
    CHECK(doc.at("seed").get<std::uint64_t>() == 11);
    double total = 0.0;
    for (const auto& f : doc.at("winner_frequencies")) total += f.get<double>();
    CHECK(total <= 1.0 + 1e-12);
    CHECK(doc.at("condensation_rate").get<double>() == summary.condensation_rate);
    CHECK(doc.at("mean_cumulative_stake_sq").get<double>() ==
          summary.mean_cumulative_stake_sq); // exact binary64 round-trip

    // the embedded config echo parses back to an equivalent config
    const auto reparsed = parse_config_json(doc.at("config"));
    CHECK(config_to_json(reparsed) == config_to_json(cfg));

    fs::remove_all(dir);
}

TEST_CASE("all presets parse, validate, and name distinct experiments") {
    CHECK(presets::all().size() == 6);
    for (const auto& preset : presets::all()) {
        CAPTURE(preset.name);
        const auto cfg = parse_config_text(std::string(preset.text));
        CHECK(cfg.run.n_runs >= 200);
    }
    CHECK(presets::find("who-wins") != nullptr);
    CHECK(presets::find("nope") == nullptr);

    const auto fig1 = parse_config_text(std::string(presets::find("fig1-local")->text));
    CHECK(fig1.run.graph.edges == presets::fig1_edges());

    const auto who = parse_config_text(std::string(presets::find("who-wins")->text));
    REQUIRE(std::holds_alternative<ExplicitInit>(who.run.initial));
    CHECK(std::get<ExplicitInit>(who.run.initial).shares ==
          std::vector<double>{0.5, 0.3, 0.2});
}

TEST_CASE("shipped preset files match the embedded catalog") {
    for (const auto& preset : presets::all()) {
        CAPTURE(preset.name);
        const fs::path path =
            fs::path(YARDSALE_PRESET_DIR) / (std::string(preset.name) + ".json");
        REQUIRE(fs::exists(path));
        const auto from_file = parse_config(path);
        const auto embedded = parse_config_text(std::string(preset.text));
        CHECK(config_to_json(from_file) == config_to_json(embedded));
    }
}

TEST_CASE("CLI exit codes and outputs") {
    const auto dir = fresh_dir("cli");

    SUBCASE("config file run writes the requested artifacts") {
        const auto config_path = dir / "exp.json";
        std::ofstream(config_path) << R"({
            "model": {"n_agents": 3, "delta": 0.05},
            "run": {"max_steps": 100000, "stop_gap": 1e-6, "seed": 5, "n_runs": 4,
                    "threads": 1},
            "output": {"formats": ["csv", "dot", "svg", "summary"]}
        })";
        const int code = run_cli({"run", config_path.string(), "--out",
                                  (dir / "out").string(), "--quiet"});
        CHECK(code == kExitOk);
        CHECK(fs::exists(dir / "out" / "timeseries.csv"));
        CHECK(fs::exists(dir / "out" / "ensemble_series.csv"));
        CHECK(fs::exists(dir / "out" / "graph.dot"));
        CHECK(fs::exists(dir / "out" / "graph.svg"));
        CHECK(fs::exists(dir / "out" / "summary.json"));
    }

    SUBCASE("usage and config failures exit with 2") {
        CHECK(run_cli({"run"}) == kExitConfigError);
        CHECK(run_cli({"run", (dir / "missing.json").string()}) == kExitConfigError);
        CHECK(run_cli({"run", "--preset", "no-such-preset"}) == kExitConfigError);
        CHECK(run_cli({"run", "a.json", "--preset", "who-wins"}) == kExitConfigError);
        CHECK(run_cli({"bogus-subcommand"}) == kExitConfigError);

        const auto bad_path = dir / "bad.json";
        std::ofstream(bad_path) << R"({"model": {"n_agents": 1}})";
        CHECK(run_cli({"run", bad_path.string()}) == kExitConfigError);
    }

    SUBCASE("runtime failures exit with 3") {
        const auto config_path = dir / "tiny.json";
        std::ofstream(config_path) << R"({
            "model": {"n_agents": 2, "delta": 0.05},
            "run": {"max_steps": 10, "stop_gap": 0, "seed": 5}
        })";
        CHECK(run_cli({"run", config_path.string(), "--out", "/proc/yardsale_no_write",
                       "--quiet"}) == kExitRuntimeError);
    }

    SUBCASE("the environment variable supplies the default output directory") {
        const auto config_path = dir / "env.json";
        std::ofstream(config_path) << R"({
            "model": {"n_agents": 2, "delta": 0.05},
            "run": {"max_steps": 5000, "stop_gap": 1e-4, "seed": 6}
        })";
        const auto env_dir = dir / "env_out";
        setenv("YARDSALE_OUT_DIR", env_dir.string().c_str(), 1);
        const int code = run_cli({"run", config_path.string(), "--quiet"});
        unsetenv("YARDSALE_OUT_DIR");
        CHECK(code == kExitOk);
        CHECK(fs::exists(env_dir / "timeseries.csv"));
    }

    SUBCASE("seed and runs overrides land in the echo") {
        const auto config_path = dir / "ovr.json";
        std::ofstream(config_path) << R"({
            "model": {"n_agents": 2, "delta": 0.05},
            "run": {"max_steps": 50000, "stop_gap": 1e-6, "seed": 1}
        })";
        const int code = run_cli({"run", config_path.string(), "--seed", "424242", "--runs",
                                  "3", "--out", (dir / "ovr_out").string(), "--quiet"});
        CHECK(code == kExitOk);
        const auto doc =
            nlohmann::json::parse(slurp(dir / "ovr_out" / "summary.json"));
        CHECK(doc.at("seed").get<std::uint64_t>() == 424242);
        CHECK(doc.at("n_runs").get<std::uint32_t>() == 3);
    }

    SUBCASE("presets subcommand lists the catalog") {
        CHECK(run_cli({"presets"}) == kExitOk);
    }

    fs::remove_all(dir);
}
