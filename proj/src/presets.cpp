#include "yardsale/presets.hpp"

namespace yardsale::presets {

namespace {

constexpr std::string_view kFairComplete = R"({
  "model": {"n_agents": 10, "delta": 0.01, "initial_wealth": "uniform"},
  "graph": {"kind": "complete"},
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "fair"}
  },
  "run": {
    "max_steps": 10000000, "stop_gap": 1e-6, "record_every": 1000,
    "seed": 414213562, "n_runs": 500, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "summary"]}
})";

constexpr std::string_view kWhoWins = R"({
  "model": {"n_agents": 3, "delta": 0.01, "initial_wealth": [0.5, 0.3, 0.2]},
  "graph": {"kind": "complete"},
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "fair"}
  },
  "run": {
    "max_steps": 10000000, "stop_gap": 1e-9, "record_every": 100,
    "seed": 271828182, "n_runs": 10000, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "summary"]}
})";

constexpr std::string_view kFig1Local = R"({
  "model": {"n_agents": 10, "delta": 0.01, "initial_wealth": "uniform"},
  "graph": {
    "kind": "edge_list",
    "edges": [[0,1],[1,2],[2,3],[3,4],[4,0],[1,5],[5,6],[6,2],[3,7],[7,8],[8,9],[9,4],[5,9]]
  },
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "fair"}
  },
  "run": {
    "max_steps": 10000000, "stop_gap": 1e-6, "record_every": 500,
    "seed": 161803398, "n_runs": 500, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "dot", "svg", "summary"], "wealthy_threshold": 0.01}
})";

constexpr std::string_view kWealthAdvantage = R"({
  "model": {"n_agents": 5, "delta": 0.01, "initial_wealth": "uniform"},
  "graph": {"kind": "complete"},
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "constant", "p": 0.6}
  },
  "run": {
    "max_steps": 10000000, "stop_gap": 1e-6, "record_every": 200,
    "seed": 577215664, "n_runs": 200, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "summary"]}
})";

constexpr std::string_view kPovertySaturating = R"({
  "model": {"n_agents": 5, "delta": 0.2, "initial_wealth": "uniform"},
  "graph": {"kind": "complete"},
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "saturating_poverty", "kappa": 1.0, "floor": 0.3}
  },
  "run": {
    "max_steps": 10000000, "stop_gap": 1e-6, "record_every": 1000,
    "seed": 141421356, "n_runs": 200, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "summary"]}
})";

constexpr std::string_view kMoukarzel = R"({
  "model": {"n_agents": 5, "delta": 0.01, "initial_wealth": "uniform"},
  "graph": {"kind": "complete"},
  "policies": {
    "b_policy": {"kind": "constant", "b": 0.25},
    "p_policy": {"kind": "constant", "p": 0.49}
  },
  "run": {
    "max_steps": 1000000, "stop_gap": 1e-6, "record_every": 1000,
    "seed": 662607015, "n_runs": 200, "dominance_threshold": 0.99
  },
  "output": {"formats": ["csv", "summary"]}
})";

} // namespace

const std::vector<Preset>& all() {
    static const std::vector<Preset> presets = {
        {"fair-complete",
         "fair coin on the complete graph (N=10): global condensation to one owner",
         kFairComplete},
        {"who-wins",
         "complete graph N=3, X0=(0.5,0.3,0.2): winner frequencies match initial shares",
         kWhoWins},
        {"fig1-local",
         "irregular incomplete graph: wealthy survivors form an independent set",
         kFig1Local},
        {"wealth-advantage",
         "richer agent wins with p=0.6: condensation with a wealth-acquired advantage",
         kWealthAdvantage},
        {"poverty-saturating",
         "admissible poverty advantage (saturating bias, kappa=1, delta=0.2)",
         kPovertySaturating},
        {"moukarzel",
         "fixed p=0.49, outside the admissible regime; condensation rate reported, "
         "no pass/fail claim",
         kMoukarzel},
    };
    return presets;
}

const Preset* find(std::string_view name) {
    for (const auto& p : all()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> fig1_edges() {
    return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 6},
            {6, 2}, {3, 7}, {7, 8}, {8, 9}, {9, 4}, {5, 9}};
}

} // namespace yardsale::presets
