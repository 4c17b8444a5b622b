#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "yardsale/graph.hpp"
#include "yardsale/harness.hpp"

namespace yardsale {

// Renders a double with 17 significant digits, enough for an exact
// binary64 round-trip through strtod.
std::string format_g17(double v);

// CSV time series: header `step,norm2_sq,gini,gap,cum_stake_sq`, one row per
// sample in step order; per-agent wealth columns `w0..` appended when the
// run recorded snapshots. Byte-stable for equal seeds. Written to a temp
// file and atomically renamed into place.
void emit_timeseries(const RunResult& result, const std::filesystem::path& path);

// Graphviz DOT drawing of the final state: every edge drawn, node size and
// label scaled to final wealth, deterministic ordering and formatting.
void emit_graph_drawing(const RunResult& result, const TradeGraph& graph,
                        const std::filesystem::path& path);

// Static SVG rendering with a deterministic circular layout.
void emit_graph_svg(const RunResult& result, const TradeGraph& graph,
                    const std::filesystem::path& path);

// JSON summary of an ensemble: winner frequencies, condensation and
// independence rates, the summability diagnostic with its standard error,
// seed, and a config echo that parse_config accepts back.
void emit_summary(const EnsembleSummary& summary, const nlohmann::json& config_echo,
                  const std::filesystem::path& path);

// CSV of the ensemble-mean series over the shared sampling grid.
void emit_ensemble_series(const EnsembleSummary& summary, const std::filesystem::path& path);

} // namespace yardsale
