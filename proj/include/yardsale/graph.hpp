#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace yardsale {

// Undirected trading graph: which agent pairs may trade, and with what
// probability a pair is drawn. Direction is irrelevant to the trade rule
// (the poorer/richer relabeling erases it), so weights live on unordered
// pairs; a drawn pair is always reported with the lower index first.
class TradeGraph {
public:
    struct Edge {
        std::uint32_t a; // a < b
        std::uint32_t b;
        double weight; // normalized; positive
    };

    // Edges as unordered {i,j} pairs; weights optional (uniform when empty),
    // normalized to sum 1. Throws ConfigError on self-loops, duplicates,
    // out-of-range indices, empty edge set, or nonpositive weights.
    TradeGraph(std::uint32_t n_agents, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
               std::vector<double> weights = {});

    std::uint32_t n_agents() const { return n_agents_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(std::uint32_t i, std::uint32_t j) const {
        return adjacency_[static_cast<std::size_t>(i) * n_agents_ + j] != 0;
    }

    // Maps a uniform (0,1) variate to an edge index via the cumulative
    // weight table. Pure; deterministic in the variate.
    std::size_t pick(double variate) const;

    // Canonical edge enumerations for the named graph kinds. Weights given
    // in a config apply in this order.
    static std::vector<std::pair<std::uint32_t, std::uint32_t>> complete_edges(std::uint32_t n);
    static std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_edges(std::uint32_t n);
    static std::vector<std::pair<std::uint32_t, std::uint32_t>> star_edges(std::uint32_t n);
    static std::vector<std::pair<std::uint32_t, std::uint32_t>> path_edges(std::uint32_t n);

    static TradeGraph complete(std::uint32_t n) { return {n, complete_edges(n)}; }
    static TradeGraph cycle(std::uint32_t n) { return {n, cycle_edges(n)}; }
    static TradeGraph star(std::uint32_t n) { return {n, star_edges(n)}; }
    static TradeGraph path(std::uint32_t n) { return {n, path_edges(n)}; }

private:
    std::uint32_t n_agents_;
    std::vector<Edge> edges_;
    std::vector<double> cumulative_;
    std::vector<std::uint8_t> adjacency_; // n x n, symmetric, zero diagonal
};

} // namespace yardsale
