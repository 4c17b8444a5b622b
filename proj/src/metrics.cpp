#include "yardsale/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace yardsale {

double norm2_squared(const WealthVector& x) {
    double total = 0.0;
    for (double s : x.shares()) total += s * s;
    return total;
}

double concentration_ratio(const WealthVector& x) {
    double sum_sq = 0.0;
    double sum_abs = 0.0;
    for (double s : x.shares()) {
        sum_sq += s * s;
        sum_abs += std::abs(s);
    }
    if (sum_abs == 0.0) {
        throw std::invalid_argument("concentration_ratio: zero vector");
    }
    return std::sqrt(sum_sq) / sum_abs;
}

double gini(const WealthVector& x) {
    // sum_ij |x_i - x_j| = 2 * sum_k (2k - N - 1) * x_(k) over the ascending
    // sort (1-based k), so G reduces to a single weighted pass.
    std::vector<double> sorted = x.shares();
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        acc += (2.0 * static_cast<double>(k + 1) - n - 1.0) * sorted[k];
    }
    return std::max(0.0, acc / n);
}

double condensation_gap(const WealthVector& x, const TradeGraph& g) {
    double gap = 0.0;
    for (const auto& e : g.edges()) {
        gap = std::max(gap, std::min(x[e.a], x[e.b]));
    }
    return gap;
}

CondensationReport wealthy_set(const WealthVector& x, const TradeGraph& g, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("wealthy_set: threshold must lie in (0,1), got " +
                                    std::to_string(threshold));
    }
    CondensationReport report;
    report.threshold = threshold;
    report.gap = condensation_gap(x, g);
    for (std::uint32_t i = 0; i < x.size(); ++i) {
        if (x[i] > threshold) report.wealthy.push_back(i);
    }
    report.is_independent = true;
    for (std::size_t a = 0; a < report.wealthy.size() && report.is_independent; ++a) {
        for (std::size_t b = a + 1; b < report.wealthy.size(); ++b) {
            if (g.adjacent(report.wealthy[a], report.wealthy[b])) {
                report.is_independent = false;
                break;
            }
        }
    }
    return report;
}

} // namespace yardsale
