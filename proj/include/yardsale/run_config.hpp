#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "yardsale/graph.hpp"
#include "yardsale/policy.hpp"
#include "yardsale/rng.hpp"
#include "yardsale/wealth.hpp"

namespace yardsale {

enum class GraphKind { complete, cycle, star, path, edge_list };

struct GraphSpec {
    GraphKind kind = GraphKind::complete;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // edge_list only
    std::vector<double> weights; // optional; canonical edge order for named kinds
};

struct UniformInit {};
struct RandomSimplexInit {};
struct ExplicitInit {
    std::vector<double> shares;
};
using InitialWealthSpec = std::variant<UniformInit, RandomSimplexInit, ExplicitInit>;

// Everything one run (or an ensemble of runs) needs. Mirrors the model data:
// agent count, initial shares, graph, pair weights, policies, risk floor,
// plus execution knobs.
struct RunConfig {
    // model
    std::uint32_t n_agents = 0;
    double delta = 0.01;
    InitialWealthSpec initial = UniformInit{};

    // graph
    GraphSpec graph;

    // policies
    FractionPolicy b_policy = ConstantFraction{0.25};
    BiasPolicy p_policy = FairCoin{};

    // run control
    std::uint64_t max_steps = 10'000'000;
    double stop_gap = 1e-9; // terminate once condensation_gap < stop_gap
    std::uint64_t renormalize_every = 0; // 0 = never rescale the share sum
    std::uint64_t record_every = 100;
    bool record_geometric = false; // grow the sampling stride by 5/4 per sample
    bool record_wealth = false;    // keep per-agent snapshots at sample points
    std::uint64_t master_seed = 1;
    std::uint32_t run_index = 0; // single runs only; ensembles use 0..n_runs-1
    std::uint32_t n_runs = 1;
    double dominance_threshold = 0.99; // in (1/2, 1)
    std::uint32_t threads = 0;         // 0 = hardware concurrency
    double wealthy_threshold = 0.01;   // for the final wealthy-set report

    // Throws ConfigError naming the offending field.
    void validate() const;

    TradeGraph build_graph() const;
    WealthVector build_initial(RngStreams& rng) const;
    PolicySet build_policies() const;

    // Squared norm of the initial vector, when it is deterministic
    // (uniform or explicit). Throws for random-simplex initials.
    double initial_norm2_squared() const;
};

// Sampling schedule shared by every run of a config: step 0, then steps
// spaced record_every apart (or geometrically growing strides). State
// independent, so ensemble series align across runs.
std::uint64_t next_sample_step(std::uint64_t current, std::uint64_t record_every,
                               bool geometric);

} // namespace yardsale
