#include "yardsale/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

#include "yardsale/errors.hpp"
#include "yardsale/trade_algebra.hpp"

namespace yardsale {

bool track_admissibility(const TradeEvent& event, double delta) {
    return check_admissibility(TradeAlgebraInput{event.poorer_wealth_before,
                                                 event.richer_wealth_before, event.fraction,
                                                 event.win_prob, delta});
}

namespace {

// Convergence test: true when no edge has both endpoints at or above
// stop_gap. Early-exits on the first rich edge, so it is O(1) per step for
// states far from condensation; the exact gap is only computed at sample
// points.
bool locally_condensed(const WealthVector& x, const TradeGraph& g, double stop_gap) {
    for (const auto& e : g.edges()) {
        if (std::min(x[e.a], x[e.b]) >= stop_gap) return false;
    }
    return true;
}

RunResult run_single_impl(const RunConfig& config, const TradeGraph& graph,
                          std::uint32_t run_index) {
    RngStreams rng(config.master_seed, run_index);
    WealthVector x = config.build_initial(rng);
    if (x.size() != config.n_agents) {
        throw ConfigError("model.initial_wealth: expected " + std::to_string(config.n_agents) +
                          " entries, got " + std::to_string(x.size()));
    }
    PolicySet policies = config.build_policies();

    std::vector<Sample> samples;
    double cum_stake_sq = 0.0;
    std::uint64_t violations = 0;

    auto record = [&](std::uint64_t step_no) {
        Sample s;
        s.step = step_no;
        s.norm2_sq = norm2_squared(x);
        s.gini = gini(x);
        s.gap = condensation_gap(x, graph);
        s.cum_stake_sq = cum_stake_sq;
        if (config.record_wealth) s.wealth = x.shares();
        samples.push_back(std::move(s));
    };

    record(0);
    std::uint64_t next_record =
        next_sample_step(0, config.record_every, config.record_geometric);

    std::uint64_t executed = 0;
    StopReason reason = StopReason::max_steps_reached;

    if (locally_condensed(x, graph, config.stop_gap)) {
        reason = StopReason::gap_reached;
    } else {
        for (std::uint64_t ell = 1; ell <= config.max_steps; ++ell) {
            const TradeEvent event = step(x, graph, policies, rng, ell);
            executed = ell;
            const double stake = event.fraction * event.poorer_wealth_before;
            cum_stake_sq += stake * stake;
            if (!track_admissibility(event, config.delta)) ++violations;
            if (config.renormalize_every != 0 && ell % config.renormalize_every == 0) {
                x.renormalize();
            }
            if (ell == next_record) {
                record(ell);
                next_record = next_sample_step(next_record, config.record_every,
                                               config.record_geometric);
            }
            if (locally_condensed(x, graph, config.stop_gap)) {
                reason = StopReason::gap_reached;
                break;
            }
        }
    }

    if (samples.back().step != executed) record(executed);

    CondensationReport report = wealthy_set(x, graph, config.wealthy_threshold);
    RunResult result(std::move(x));
    result.steps_executed = executed;
    result.stop_reason = reason;
    result.samples = std::move(samples);
    result.cumulative_stake_sq = cum_stake_sq;
    result.admissibility_violations = violations;
    result.wealthy_report = std::move(report);
    result.run_index = run_index;
    return result;
}

// Accumulates mean and standard error with a fixed summation order.
struct MeanAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double se() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var =
            std::max(0.0, (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace

RunResult run_single(const RunConfig& config, std::uint32_t run_index) {
    config.validate();
    const TradeGraph graph = config.build_graph();
    return run_single_impl(config, graph, run_index);
}

RunResult run_single(const RunConfig& config) { return run_single(config, config.run_index); }

EnsembleSummary run_ensemble(const RunConfig& config, RunResult* representative) {
    config.validate();
    const TradeGraph graph = config.build_graph();
    const std::uint32_t n = config.n_runs;

    std::vector<std::optional<RunResult>> results(n);
    std::vector<std::exception_ptr> failures(n);

    std::uint32_t worker_count = config.threads ? config.threads : std::thread::hardware_concurrency();
    worker_count = std::max(1u, std::min(worker_count, n));

    std::atomic<std::uint32_t> next_run{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint32_t r = next_run.fetch_add(1);
            if (r >= n) return;
            const std::uint32_t index = (n == 1) ? config.run_index : r;
            try {
                results[r].emplace(run_single_impl(config, graph, index));
            } catch (...) {
                failures[r] = std::current_exception();
            }
        }
    };

    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (std::uint32_t t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::uint32_t r = 0; r < n; ++r) {
        if (failures[r]) {
            try {
                std::rethrow_exception(failures[r]);
            } catch (const std::exception& e) {
                throw RuntimeFailure("run " + std::to_string(r) + ": " + e.what());
            }
        }
    }

    // Reduction, strictly in run-index order.
    EnsembleSummary summary;
    summary.n_runs = n;
    summary.dominance_threshold = config.dominance_threshold;
    summary.winner_frequencies.assign(config.n_agents, 0.0);

    std::vector<MeanAccumulator> final_wealth(config.n_agents);
    MeanAccumulator stake;
    MeanAccumulator final_norm2;
    MeanAccumulator final_gini;
    std::uint32_t condensed = 0;
    std::uint32_t independent = 0;

    std::uint64_t max_executed = 0;
    for (std::uint32_t r = 0; r < n; ++r) {
        const RunResult& run = *results[r];
        max_executed = std::max(max_executed, run.steps_executed);
        const bool gap_reached = run.stop_reason == StopReason::gap_reached;
        if (gap_reached) ++condensed;
        if (run.wealthy_report.is_independent) ++independent;
        if (run.admissibility_violations > 0) ++summary.runs_with_violations;
        summary.total_admissibility_violations += run.admissibility_violations;
        if (run.stop_reason == StopReason::max_steps_reached) ++summary.runs_hit_max_steps;
        stake.add(run.cumulative_stake_sq);
        final_norm2.add(run.samples.back().norm2_sq);
        final_gini.add(run.samples.back().gini);
        for (std::uint32_t a = 0; a < config.n_agents; ++a) {
            final_wealth[a].add(run.final_state[a]);
            if (gap_reached && run.final_state[a] > config.dominance_threshold) {
                summary.winner_frequencies[a] += 1.0;
            }
        }
    }
    for (auto& f : summary.winner_frequencies) f /= static_cast<double>(n);
    summary.condensation_rate = static_cast<double>(condensed) / static_cast<double>(n);
    summary.independence_rate = static_cast<double>(independent) / static_cast<double>(n);
    summary.mean_cumulative_stake_sq = stake.mean();
    summary.se_cumulative_stake_sq = stake.se();
    summary.mean_final_norm2_sq = final_norm2.mean();
    summary.mean_final_gini = final_gini.mean();
    for (const auto& acc : final_wealth) {
        summary.mean_final_wealth.push_back(acc.mean());
        summary.se_final_wealth.push_back(acc.se());
    }

    // Shared sampling grid: every run records at the same schedule steps
    // while alive; afterwards its final value carries forward.
    std::vector<std::uint64_t> grid;
    for (std::uint64_t s = 0; s <= max_executed;
         s = next_sample_step(s, config.record_every, config.record_geometric)) {
        grid.push_back(s);
        if (s == max_executed) break;
    }

    auto value_at = [&](const RunResult& run, std::size_t grid_idx,
                        std::uint64_t grid_step) -> const Sample& {
        if (grid_step <= run.steps_executed) return run.samples[grid_idx];
        return run.samples.back();
    };

    for (std::size_t k = 0; k < grid.size(); ++k) {
        MeanAccumulator norm2_acc;
        MeanAccumulator gini_acc;
        for (std::uint32_t r = 0; r < n; ++r) {
            const Sample& s = value_at(*results[r], k, grid[k]);
            norm2_acc.add(s.norm2_sq);
            gini_acc.add(s.gini);
        }
        summary.norm2_series.push_back({grid[k], norm2_acc.mean(), norm2_acc.se()});
        summary.gini_series.push_back({grid[k], gini_acc.mean(), gini_acc.se()});
        if (k > 0) {
            MeanAccumulator diff_acc;
            for (std::uint32_t r = 0; r < n; ++r) {
                const Sample& prev = value_at(*results[r], k - 1, grid[k - 1]);
                const Sample& cur = value_at(*results[r], k, grid[k]);
                diff_acc.add(cur.norm2_sq - prev.norm2_sq);
            }
            summary.norm2_step_diffs.push_back({grid[k], diff_acc.mean(), diff_acc.se()});
        }
    }

    if (representative != nullptr) {
        *representative = std::move(*results[0]);
    }
    return summary;
}

} // namespace yardsale
