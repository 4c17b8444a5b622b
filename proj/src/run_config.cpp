#include "yardsale/run_config.hpp"

#include <cmath>
#include <string>

#include "yardsale/errors.hpp"
#include "yardsale/metrics.hpp"

namespace yardsale {

void RunConfig::validate() const {
    if (n_agents < 2) {
        throw ConfigError("model.n_agents: need at least 2 agents, got " +
                          std::to_string(n_agents));
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("model.delta: must lie in (0,1), got " + std::to_string(delta));
    }
    if (const auto* init = std::get_if<ExplicitInit>(&initial)) {
        if (init->shares.size() != n_agents) {
            throw ConfigError("model.initial_wealth: expected " + std::to_string(n_agents) +
                              " entries, got " + std::to_string(init->shares.size()));
        }
        double total = 0.0;
        for (std::size_t i = 0; i < init->shares.size(); ++i) {
            const double s = init->shares[i];
            if (!(s > 0.0 && s < 1.0)) {
                throw ConfigError("model.initial_wealth[" + std::to_string(i) +
                                  "]: must lie strictly in (0,1), got " + std::to_string(s));
            }
            total += s;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw ConfigError("model.initial_wealth: entries must sum to 1 within 1e-12, got " +
                              std::to_string(total));
        }
    }

    if (graph.kind != GraphKind::edge_list && !graph.edges.empty()) {
        throw ConfigError("graph.edges: only allowed with kind \"edge_list\"");
    }
    build_graph(); // graph invariants (edge ranges, weights, duplicates)

    PolicySet policies;
    policies.delta = delta;
    policies.fraction = b_policy;
    policies.bias = p_policy;
    validate_policies(policies, n_agents);

    if (max_steps < 1) {
        throw ConfigError("run.max_steps: must be >= 1, got " + std::to_string(max_steps));
    }
    if (!(stop_gap >= 0.0 && stop_gap < 1.0)) {
        throw ConfigError("run.stop_gap: must lie in [0,1), got " + std::to_string(stop_gap));
    }
    if (record_every < 1) {
        throw ConfigError("run.record_every: must be >= 1, got " + std::to_string(record_every));
    }
    if (n_runs < 1) {
        throw ConfigError("run.n_runs: must be >= 1, got " + std::to_string(n_runs));
    }
    if (n_runs > 1 && run_index != 0) {
        throw ConfigError("run.run_index: must be 0 when n_runs > 1 (ensembles always use "
                          "run indices 0..n_runs-1)");
    }
    if (!(dominance_threshold > 0.5 && dominance_threshold < 1.0)) {
        throw ConfigError("run.dominance_threshold: must lie in (1/2,1), got " +
                          std::to_string(dominance_threshold));
    }
    if (!(wealthy_threshold > 0.0 && wealthy_threshold < 1.0)) {
        throw ConfigError("output.wealthy_threshold: must lie in (0,1), got " +
                          std::to_string(wealthy_threshold));
    }
}

TradeGraph RunConfig::build_graph() const {
    switch (graph.kind) {
    case GraphKind::complete:
        return {n_agents, TradeGraph::complete_edges(n_agents), graph.weights};
    case GraphKind::cycle:
        return {n_agents, TradeGraph::cycle_edges(n_agents), graph.weights};
    case GraphKind::star:
        return {n_agents, TradeGraph::star_edges(n_agents), graph.weights};
    case GraphKind::path:
        return {n_agents, TradeGraph::path_edges(n_agents), graph.weights};
    case GraphKind::edge_list:
        if (graph.edges.empty()) {
            throw ConfigError("graph.edges: required for kind \"edge_list\"");
        }
        return {n_agents, graph.edges, graph.weights};
    }
    throw ConfigError("graph.kind: unknown kind");
}

WealthVector RunConfig::build_initial(RngStreams& rng) const {
    if (std::holds_alternative<UniformInit>(initial)) {
        return WealthVector::uniform(n_agents);
    }
    if (std::holds_alternative<RandomSimplexInit>(initial)) {
        return WealthVector::random_simplex(n_agents, rng);
    }
    return WealthVector::initial(std::get<ExplicitInit>(initial).shares);
}

PolicySet RunConfig::build_policies() const {
    PolicySet policies;
    policies.delta = delta;
    policies.fraction = b_policy;
    policies.bias = p_policy;
    return policies;
}

double RunConfig::initial_norm2_squared() const {
    if (std::holds_alternative<RandomSimplexInit>(initial)) {
        throw RuntimeFailure("initial_norm2_squared: random-simplex initial wealth varies "
                             "per run");
    }
    if (std::holds_alternative<UniformInit>(initial)) {
        return 1.0 / static_cast<double>(n_agents);
    }
    return norm2_squared(WealthVector::initial(std::get<ExplicitInit>(initial).shares));
}

std::uint64_t next_sample_step(std::uint64_t current, std::uint64_t record_every,
                               bool geometric) {
    const std::uint64_t linear = current + record_every;
    if (!geometric) return linear;
    const std::uint64_t grown = current + (current >> 2); // stride grows 25% per sample
    return std::max(linear, grown);
}

} // namespace yardsale
