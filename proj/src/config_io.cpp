#include "yardsale/config_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>

#include "yardsale/errors.hpp"

namespace yardsale {

using nlohmann::json;

namespace {

void require_object(const json& node, const std::string& where) {
    if (!node.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
        }
    }
}

double get_double(const json& obj, const std::string& where, const char* key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::uint64_t get_u64(const json& obj, const std::string& where, const char* key,
                      std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i < 0) throw ConfigError(where + "." + key + ": must be nonnegative");
        return static_cast<std::uint64_t>(i);
    }
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (d < 0.0 || d != std::floor(d) || d > 1.8e19) {
            throw ConfigError(where + "." + key + ": expected a nonnegative integer");
        }
        return static_cast<std::uint64_t>(d);
    }
    throw ConfigError(where + "." + key + ": expected an integer");
}

bool get_bool(const json& obj, const std::string& where, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
        throw ConfigError(where + "." + key + ": expected true or false");
    }
    return v.get<bool>();
}

std::vector<double> get_double_array(const json& node, const std::string& where) {
    if (!node.is_array()) {
        throw ConfigError(where + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) {
            throw ConfigError(where + ": expected an array of numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

void parse_model(const json& node, RunConfig& cfg) {
    require_object(node, "model");
    reject_unknown_keys(node, "model", {"n_agents", "delta", "initial_wealth"});

    std::uint64_t n_agents = get_u64(node, "model", "n_agents", 0);

    if (node.contains("initial_wealth")) {
        const json& init = node.at("initial_wealth");
        if (init.is_string()) {
            const auto kind = init.get<std::string>();
            if (kind == "uniform") {
                cfg.initial = UniformInit{};
            } else if (kind == "random_simplex") {
                cfg.initial = RandomSimplexInit{};
            } else {
                throw ConfigError("model.initial_wealth: unknown kind \"" + kind +
                                  "\" (expected \"uniform\", \"random_simplex\", or an array)");
            }
        } else if (init.is_array()) {
            auto shares = get_double_array(init, "model.initial_wealth");
            if (n_agents != 0 && shares.size() != n_agents) {
                throw ConfigError("model.initial_wealth: length " +
                                  std::to_string(shares.size()) +
                                  " does not match model.n_agents = " + std::to_string(n_agents));
            }
            if (n_agents == 0) n_agents = shares.size();
            cfg.initial = ExplicitInit{std::move(shares)};
        } else {
            throw ConfigError("model.initial_wealth: expected a string or an array");
        }
    }

    if (n_agents == 0) {
        throw ConfigError("model.n_agents: required (or derivable from an explicit "
                          "initial_wealth array)");
    }
    if (n_agents > 1'000'000) {
        throw ConfigError("model.n_agents: implausibly large, got " + std::to_string(n_agents));
    }
    cfg.n_agents = static_cast<std::uint32_t>(n_agents);
    cfg.delta = get_double(node, "model", "delta", cfg.delta);
}

void parse_graph(const json& node, RunConfig& cfg) {
    require_object(node, "graph");
    reject_unknown_keys(node, "graph", {"kind", "edges", "weights"});

    std::string kind = "complete";
    if (node.contains("kind")) {
        if (!node.at("kind").is_string()) throw ConfigError("graph.kind: expected a string");
        kind = node.at("kind").get<std::string>();
    }
    if (kind == "complete") {
        cfg.graph.kind = GraphKind::complete;
    } else if (kind == "cycle") {
        cfg.graph.kind = GraphKind::cycle;
    } else if (kind == "star") {
        cfg.graph.kind = GraphKind::star;
    } else if (kind == "path") {
        cfg.graph.kind = GraphKind::path;
    } else if (kind == "edge_list") {
        cfg.graph.kind = GraphKind::edge_list;
    } else {
        throw ConfigError("graph.kind: unknown kind \"" + kind +
                          "\" (expected complete|cycle|star|path|edge_list)");
    }

    if (node.contains("edges")) {
        if (cfg.graph.kind != GraphKind::edge_list) {
            throw ConfigError("graph.edges: only allowed with kind \"edge_list\"");
        }
        const json& edges = node.at("edges");
        if (!edges.is_array()) {
            throw ConfigError("graph.edges: expected an array of [i,j] pairs");
        }
        for (const auto& e : edges) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw ConfigError("graph.edges: each edge must be a pair of agent indices");
            }
            const auto i = e[0].get<std::int64_t>();
            const auto j = e[1].get<std::int64_t>();
            if (i < 0 || j < 0) {
                throw ConfigError("graph.edges: agent indices are 0-based and nonnegative");
            }
            cfg.graph.edges.emplace_back(static_cast<std::uint32_t>(i),
                                         static_cast<std::uint32_t>(j));
        }
    } else if (cfg.graph.kind == GraphKind::edge_list) {
        throw ConfigError("graph.edges: required for kind \"edge_list\"");
    }

    if (node.contains("weights")) {
        cfg.graph.weights = get_double_array(node.at("weights"), "graph.weights");
    }
}

void parse_policies(const json& node, RunConfig& cfg) {
    require_object(node, "policies");
    reject_unknown_keys(node, "policies", {"b_policy", "p_policy"});

    if (node.contains("b_policy")) {
        const json& b = node.at("b_policy");
        require_object(b, "policies.b_policy");
        if (!b.contains("kind") || !b.at("kind").is_string()) {
            throw ConfigError("policies.b_policy.kind: required string");
        }
        const auto kind = b.at("kind").get<std::string>();
        if (kind == "constant") {
            reject_unknown_keys(b, "policies.b_policy", {"kind", "b"});
            cfg.b_policy = ConstantFraction{get_double(b, "policies.b_policy", "b", 0.25)};
        } else if (kind == "per_agent") {
            reject_unknown_keys(b, "policies.b_policy", {"kind", "coeffs"});
            if (!b.contains("coeffs")) {
                throw ConfigError("policies.b_policy.coeffs: required for kind \"per_agent\"");
            }
            cfg.b_policy =
                PerAgentFraction{get_double_array(b.at("coeffs"), "policies.b_policy.coeffs")};
        } else if (kind == "uniform") {
            reject_unknown_keys(b, "policies.b_policy", {"kind", "lo", "hi"});
            UniformFraction u;
            u.lo = get_double(b, "policies.b_policy", "lo", 0.0);
            u.hi = get_double(b, "policies.b_policy", "hi", 0.5);
            cfg.b_policy = u;
        } else {
            throw ConfigError("policies.b_policy.kind: unknown kind \"" + kind +
                              "\" (expected constant|per_agent|uniform)");
        }
    }

    if (node.contains("p_policy")) {
        const json& p = node.at("p_policy");
        require_object(p, "policies.p_policy");
        if (!p.contains("kind") || !p.at("kind").is_string()) {
            throw ConfigError("policies.p_policy.kind: required string");
        }
        const auto kind = p.at("kind").get<std::string>();
        if (kind == "fair") {
            reject_unknown_keys(p, "policies.p_policy", {"kind"});
            cfg.p_policy = FairCoin{};
        } else if (kind == "constant") {
            reject_unknown_keys(p, "policies.p_policy", {"kind", "p"});
            cfg.p_policy = ConstantBias{get_double(p, "policies.p_policy", "p", 0.5)};
        } else if (kind == "saturating_poverty") {
            reject_unknown_keys(p, "policies.p_policy", {"kind", "kappa", "floor"});
            SaturatingPovertyBias s;
            s.kappa = get_double(p, "policies.p_policy", "kappa", 1.0);
            s.floor = get_double(p, "policies.p_policy", "floor", 0.3);
            cfg.p_policy = s;
        } else {
            throw ConfigError("policies.p_policy.kind: unknown kind \"" + kind +
                              "\" (expected fair|constant|saturating_poverty)");
        }
    }
}

void parse_run(const json& node, RunConfig& cfg) {
    require_object(node, "run");
    reject_unknown_keys(node, "run",
                        {"max_steps", "stop_gap", "renormalize_every", "record_every",
                         "record_geometric", "seed", "run_index", "n_runs",
                         "dominance_threshold", "threads"});
    cfg.max_steps = get_u64(node, "run", "max_steps", cfg.max_steps);
    cfg.stop_gap = get_double(node, "run", "stop_gap", cfg.stop_gap);
    cfg.renormalize_every = get_u64(node, "run", "renormalize_every", cfg.renormalize_every);
    cfg.record_every = get_u64(node, "run", "record_every", cfg.record_every);
    cfg.record_geometric = get_bool(node, "run", "record_geometric", cfg.record_geometric);
    cfg.master_seed = get_u64(node, "run", "seed", cfg.master_seed);
    const auto run_index = get_u64(node, "run", "run_index", cfg.run_index);
    if (run_index > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigError("run.run_index: too large");
    }
    cfg.run_index = static_cast<std::uint32_t>(run_index);
    const auto n_runs = get_u64(node, "run", "n_runs", cfg.n_runs);
    if (n_runs > 100'000'000) {
        throw ConfigError("run.n_runs: implausibly large, got " + std::to_string(n_runs));
    }
    cfg.n_runs = static_cast<std::uint32_t>(n_runs);
    cfg.dominance_threshold =
        get_double(node, "run", "dominance_threshold", cfg.dominance_threshold);
    const auto threads = get_u64(node, "run", "threads", cfg.threads);
    if (threads > 4096) throw ConfigError("run.threads: implausibly large");
    cfg.threads = static_cast<std::uint32_t>(threads);
}

void parse_output(const json& node, ExperimentConfig& cfg) {
    require_object(node, "output");
    reject_unknown_keys(node, "output",
                        {"directory", "formats", "wealth_columns", "wealthy_threshold"});
    if (node.contains("directory")) {
        if (!node.at("directory").is_string()) {
            throw ConfigError("output.directory: expected a string");
        }
        cfg.output.directory = node.at("directory").get<std::string>();
    }
    if (node.contains("formats")) {
        const json& formats = node.at("formats");
        if (!formats.is_array()) {
            throw ConfigError("output.formats: expected an array of format names");
        }
        cfg.output.csv = cfg.output.dot = cfg.output.svg = cfg.output.summary = false;
        for (const auto& f : formats) {
            if (!f.is_string()) throw ConfigError("output.formats: entries must be strings");
            const auto name = f.get<std::string>();
            if (name == "csv") {
                cfg.output.csv = true;
            } else if (name == "dot") {
                cfg.output.dot = true;
            } else if (name == "svg") {
                cfg.output.svg = true;
            } else if (name == "summary") {
                cfg.output.summary = true;
            } else {
                throw ConfigError("output.formats: unknown format \"" + name +
                                  "\" (expected csv|dot|svg|summary)");
            }
        }
    }
    cfg.output.wealth_columns = get_bool(node, "output", "wealth_columns", false);
    cfg.run.record_wealth = cfg.output.wealth_columns;
    cfg.run.wealthy_threshold =
        get_double(node, "output", "wealthy_threshold", cfg.run.wealthy_threshold);
}

} // namespace

ExperimentConfig parse_config_json(const json& doc) {
    require_object(doc, "config");
    reject_unknown_keys(doc, "config", {"model", "graph", "policies", "run", "output"});
    if (!doc.contains("model")) {
        throw ConfigError("config: missing required section \"model\"");
    }

    ExperimentConfig cfg;
    parse_model(doc.at("model"), cfg.run);
    if (doc.contains("graph")) parse_graph(doc.at("graph"), cfg.run);
    if (doc.contains("policies")) parse_policies(doc.at("policies"), cfg.run);
    if (doc.contains("run")) parse_run(doc.at("run"), cfg.run);
    if (doc.contains("output")) parse_output(doc.at("output"), cfg);

    cfg.run.validate();
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config_json(doc);
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config file not readable: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config_json(doc);
}

json config_to_json(const ExperimentConfig& config) {
    const RunConfig& run = config.run;
    json doc;

    json model;
    model["n_agents"] = run.n_agents;
    model["delta"] = run.delta;
    if (std::holds_alternative<UniformInit>(run.initial)) {
        model["initial_wealth"] = "uniform";
    } else if (std::holds_alternative<RandomSimplexInit>(run.initial)) {
        model["initial_wealth"] = "random_simplex";
    } else {
        model["initial_wealth"] = std::get<ExplicitInit>(run.initial).shares;
    }
    doc["model"] = model;

    json graph;
    switch (run.graph.kind) {
    case GraphKind::complete: graph["kind"] = "complete"; break;
    case GraphKind::cycle: graph["kind"] = "cycle"; break;
    case GraphKind::star: graph["kind"] = "star"; break;
    case GraphKind::path: graph["kind"] = "path"; break;
    case GraphKind::edge_list: graph["kind"] = "edge_list"; break;
    }
    if (!run.graph.edges.empty()) {
        json edges = json::array();
        for (const auto& [i, j] : run.graph.edges) edges.push_back({i, j});
        graph["edges"] = edges;
    }
    if (!run.graph.weights.empty()) graph["weights"] = run.graph.weights;
    doc["graph"] = graph;

    json policies;
    if (const auto* c = std::get_if<ConstantFraction>(&run.b_policy)) {
        policies["b_policy"] = {{"kind", "constant"}, {"b", c->value}};
    } else if (const auto* a = std::get_if<PerAgentFraction>(&run.b_policy)) {
        policies["b_policy"] = {{"kind", "per_agent"}, {"coeffs", a->coeffs}};
    } else {
        const auto& u = std::get<UniformFraction>(run.b_policy);
        policies["b_policy"] = {{"kind", "uniform"}, {"lo", u.lo}, {"hi", u.hi}};
    }
    if (std::holds_alternative<FairCoin>(run.p_policy)) {
        policies["p_policy"] = {{"kind", "fair"}};
    } else if (const auto* c = std::get_if<ConstantBias>(&run.p_policy)) {
        policies["p_policy"] = {{"kind", "constant"}, {"p", c->value}};
    } else {
        const auto& s = std::get<SaturatingPovertyBias>(run.p_policy);
        policies["p_policy"] = {
            {"kind", "saturating_poverty"}, {"kappa", s.kappa}, {"floor", s.floor}};
    }
    doc["policies"] = policies;

    json run_section;
    run_section["max_steps"] = run.max_steps;
    run_section["stop_gap"] = run.stop_gap;
    run_section["renormalize_every"] = run.renormalize_every;
    run_section["record_every"] = run.record_every;
    run_section["record_geometric"] = run.record_geometric;
    run_section["seed"] = run.master_seed;
    run_section["run_index"] = run.run_index;
    run_section["n_runs"] = run.n_runs;
    run_section["dominance_threshold"] = run.dominance_threshold;
    run_section["threads"] = run.threads;
    doc["run"] = run_section;

    json output;
    output["directory"] = config.output.directory;
    json formats = json::array();
    if (config.output.csv) formats.push_back("csv");
    if (config.output.dot) formats.push_back("dot");
    if (config.output.svg) formats.push_back("svg");
    if (config.output.summary) formats.push_back("summary");
    output["formats"] = formats;
    output["wealth_columns"] = config.output.wealth_columns;
    output["wealthy_threshold"] = run.wealthy_threshold;
    doc["output"] = output;

    return doc;
}

} // namespace yardsale
