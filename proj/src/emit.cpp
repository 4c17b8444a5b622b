#include "yardsale/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "yardsale/errors.hpp"

namespace yardsale {

namespace fs = std::filesystem;

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

void write_atomically(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw RuntimeFailure("cannot open for writing: " + tmp.string());
        }
        out << content;
        if (!out) {
            throw RuntimeFailure("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw RuntimeFailure("rename failed for " + path.string() + ": " + ec.message());
    }
}

} // namespace

void emit_timeseries(const RunResult& result, const fs::path& path) {
    std::ostringstream out;
    const bool wealth_columns =
        !result.samples.empty() && !result.samples.front().wealth.empty();
    out << "step,norm2_sq,gini,gap,cum_stake_sq";
    if (wealth_columns) {
        for (std::size_t i = 0; i < result.samples.front().wealth.size(); ++i) {
            out << ",w" << i;
        }
    }
    out << "\n";
    for (const auto& s : result.samples) {
        out << s.step << ',' << format_g17(s.norm2_sq) << ',' << format_g17(s.gini) << ','
            << format_g17(s.gap) << ',' << format_g17(s.cum_stake_sq);
        if (wealth_columns) {
            for (double w : s.wealth) out << ',' << format_g17(w);
        }
        out << "\n";
    }
    write_atomically(path, out.str());
}

void emit_graph_drawing(const RunResult& result, const TradeGraph& graph, const fs::path& path) {
    const auto& x = result.final_state;
    std::ostringstream out;
    out << "graph trade_graph {\n";
    out << "  layout=\"circo\";\n";
    out << "  node [shape=circle, style=filled, fillcolor=\"gray70\", fixedsize=true];\n";
    for (std::uint32_t i = 0; i < x.size(); ++i) {
        const double side = 0.25 + 1.75 * std::sqrt(x[i]);
        out << "  a" << i << " [label=\"a" << i << "\\n" << format_fixed(x[i], 6)
            << "\", width=" << format_fixed(side, 4) << ", height=" << format_fixed(side, 4)
            << "];\n";
    }
    for (const auto& e : graph.edges()) {
        out << "  a" << e.a << " -- a" << e.b << ";\n";
    }
    out << "}\n";
    write_atomically(path, out.str());
}

void emit_graph_svg(const RunResult& result, const TradeGraph& graph, const fs::path& path) {
    const auto& x = result.final_state;
    const double size = 640.0;
    const double center = size / 2.0;
    const double ring = 250.0;
    const auto n = static_cast<double>(x.size());

    auto node_x = [&](std::uint32_t i) {
        return center + ring * std::cos(-M_PI / 2.0 + 2.0 * M_PI * i / n);
    };
    auto node_y = [&](std::uint32_t i) {
        return center + ring * std::sin(-M_PI / 2.0 + 2.0 * M_PI * i / n);
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    for (const auto& e : graph.edges()) {
        out << "<line x1=\"" << format_fixed(node_x(e.a), 2) << "\" y1=\""
            << format_fixed(node_y(e.a), 2) << "\" x2=\"" << format_fixed(node_x(e.b), 2)
            << "\" y2=\"" << format_fixed(node_y(e.b), 2)
            << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    for (std::uint32_t i = 0; i < x.size(); ++i) {
        const double radius = 4.0 + 36.0 * std::sqrt(x[i]);
        out << "<circle cx=\"" << format_fixed(node_x(i), 2) << "\" cy=\""
            << format_fixed(node_y(i), 2) << "\" r=\"" << format_fixed(radius, 2)
            << "\" fill=\"#8a8a8a\" stroke=\"#333333\"/>\n";
    }
    for (std::uint32_t i = 0; i < x.size(); ++i) {
        out << "<text x=\"" << format_fixed(node_x(i), 2) << "\" y=\""
            << format_fixed(node_y(i) + 4.0, 2)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">a" << i
            << "</text>\n";
    }
    out << "</svg>\n";
    write_atomically(path, out.str());
}

void emit_summary(const EnsembleSummary& summary, const nlohmann::json& config_echo,
                  const fs::path& path) {
    nlohmann::json doc;
    doc["n_runs"] = summary.n_runs;
    doc["seed"] = config_echo.at("run").at("seed");
    doc["dominance_threshold"] = summary.dominance_threshold;
    doc["winner_frequencies"] = summary.winner_frequencies;
    doc["condensation_rate"] = summary.condensation_rate;
    doc["independence_rate"] = summary.independence_rate;
    doc["mean_cumulative_stake_sq"] = summary.mean_cumulative_stake_sq;
    doc["se_cumulative_stake_sq"] = summary.se_cumulative_stake_sq;
    doc["mean_final_wealth"] = summary.mean_final_wealth;
    doc["se_final_wealth"] = summary.se_final_wealth;
    doc["mean_final_norm2_sq"] = summary.mean_final_norm2_sq;
    doc["mean_final_gini"] = summary.mean_final_gini;
    doc["total_admissibility_violations"] = summary.total_admissibility_violations;
    doc["runs_with_violations"] = summary.runs_with_violations;
    doc["runs_hit_max_steps"] = summary.runs_hit_max_steps;
    doc["config"] = config_echo;
    write_atomically(path, doc.dump(2) + "\n");
}

void emit_ensemble_series(const EnsembleSummary& summary, const fs::path& path) {
    std::ostringstream out;
    out << "step,mean_norm2_sq,se_norm2_sq,mean_gini,se_gini\n";
    for (std::size_t k = 0; k < summary.norm2_series.size(); ++k) {
        const auto& n2 = summary.norm2_series[k];
        const auto& g = summary.gini_series[k];
        out << n2.step << ',' << format_g17(n2.mean) << ',' << format_g17(n2.se) << ','
            << format_g17(g.mean) << ',' << format_g17(g.se) << "\n";
    }
    write_atomically(path, out.str());
}

} // namespace yardsale
