#include "yardsale/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "yardsale/errors.hpp"

namespace yardsale {

TradeGraph::TradeGraph(std::uint32_t n_agents,
                       std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                       std::vector<double> weights)
    : n_agents_(n_agents) {
    if (n_agents < 2) {
        throw ConfigError("graph: need at least 2 agents, got " + std::to_string(n_agents));
    }
    if (edges.empty()) {
        throw ConfigError("graph: at least one edge is required");
    }
    if (!weights.empty() && weights.size() != edges.size()) {
        throw ConfigError("graph: weights length " + std::to_string(weights.size()) +
                          " does not match edge count " + std::to_string(edges.size()));
    }

    adjacency_.assign(static_cast<std::size_t>(n_agents) * n_agents, 0);
    edges_.reserve(edges.size());
    double total_weight = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        if (i >= n_agents || j >= n_agents) {
            throw ConfigError("graph: edge (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for " + std::to_string(n_agents) + " agents");
        }
        if (i == j) {
            throw ConfigError("graph: self-loop at agent " + std::to_string(i));
        }
        const std::uint32_t a = std::min(i, j);
        const std::uint32_t b = std::max(i, j);
        if (adjacent(a, b)) {
            throw ConfigError("graph: duplicate edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
        }
        adjacency_[static_cast<std::size_t>(a) * n_agents_ + b] = 1;
        adjacency_[static_cast<std::size_t>(b) * n_agents_ + a] = 1;

        double w = weights.empty() ? 1.0 : weights[k];
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ConfigError("graph: weight of edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ") must be positive, got " + std::to_string(w));
        }
        edges_.push_back(Edge{a, b, w});
        total_weight += w;
    }

    cumulative_.reserve(edges_.size());
    double running = 0.0;
    for (auto& e : edges_) {
        e.weight /= total_weight;
        running += e.weight;
        cumulative_.push_back(running);
    }
    cumulative_.back() = 1.0; // absorb rounding so every variate in (0,1) maps to an edge
}

std::size_t TradeGraph::pick(double variate) const {
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), variate);
    return static_cast<std::size_t>(it - cumulative_.begin());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
TradeGraph::complete_edges(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return edges;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TradeGraph::cycle_edges(std::uint32_t n) {
    if (n < 3) throw ConfigError("graph: cycle needs at least 3 agents");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return edges;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TradeGraph::star_edges(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return edges;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TradeGraph::path_edges(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return edges;
}

} // namespace yardsale
