#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "yardsale/metrics.hpp"
#include "yardsale/model.hpp"
#include "yardsale/run_config.hpp"

namespace yardsale {

enum class StopReason { gap_reached, max_steps_reached };

// One point of a run's diagnostic time series.
struct Sample {
    std::uint64_t step = 0;
    double norm2_sq = 0.0;
    double gini = 0.0;
    double gap = 0.0;
    double cum_stake_sq = 0.0;     // running sum of (B * x[poorer])^2 up to this step
    std::vector<double> wealth;    // per-agent snapshot; empty unless requested
};

struct RunResult {
    explicit RunResult(WealthVector state) : final_state(std::move(state)) {}

    WealthVector final_state;
    std::uint64_t steps_executed = 0;
    StopReason stop_reason = StopReason::max_steps_reached;
    std::vector<Sample> samples; // strictly increasing in step; last one is the final state
    double cumulative_stake_sq = 0.0;
    std::uint64_t admissibility_violations = 0;
    CondensationReport wealthy_report;
    std::uint32_t run_index = 0;
};

struct SeriesPoint {
    std::uint64_t step = 0;
    double mean = 0.0;
    double se = 0.0; // standard error of the mean across runs
};

struct EnsembleSummary {
    std::uint32_t n_runs = 0;
    double dominance_threshold = 0.0;
    // Fraction of runs in which the agent ended above the dominance
    // threshold; a run must also have condensed (gap_reached) to count.
    std::vector<double> winner_frequencies;
    double condensation_rate = 0.0;  // fraction with stop_reason == gap_reached
    double independence_rate = 0.0;  // fraction whose wealthy set is graph-independent
    double mean_cumulative_stake_sq = 0.0;
    double se_cumulative_stake_sq = 0.0;
    std::vector<double> mean_final_wealth; // per agent; fair runs stay near the initial shares
    std::vector<double> se_final_wealth;
    double mean_final_norm2_sq = 0.0;
    double mean_final_gini = 0.0;
    // Ensemble means over the shared sampling grid. Runs that stopped early
    // contribute their final value at later grid steps.
    std::vector<SeriesPoint> norm2_series;
    std::vector<SeriesPoint> gini_series;
    // Paired per-run differences of norm2_sq between consecutive grid steps;
    // nonnegative in expectation for admissible policies.
    std::vector<SeriesPoint> norm2_step_diffs;
    std::uint64_t total_admissibility_violations = 0;
    std::uint32_t runs_with_violations = 0;
    std::uint32_t runs_hit_max_steps = 0;
};

// Evaluates the admissibility condition on a realized trade, using the
// pre-trade wealths recorded in the event.
bool track_admissibility(const TradeEvent& event, double delta);

// Executes one trajectory: steps until the condensation gap drops below
// stop_gap or max_steps is reached, recording diagnostics on the sampling
// schedule plus the final state. Deterministic in (master_seed, run_index).
RunResult run_single(const RunConfig& config);
RunResult run_single(const RunConfig& config, std::uint32_t run_index);

// Executes config.n_runs independent runs (run indices 0..n_runs-1, or
// config.run_index for a single run), possibly across config.threads
// workers. The reduction is sequential in run-index order, so the summary
// is bit-identical regardless of scheduling. Run failures are rethrown with
// the run index attached. If `representative` is non-null it receives the
// lowest-indexed run's full result.
EnsembleSummary run_ensemble(const RunConfig& config, RunResult* representative = nullptr);

} // namespace yardsale
