#pragma once

#include <cstdint>
#include <vector>

#include "yardsale/graph.hpp"
#include "yardsale/wealth.hpp"

namespace yardsale {

// Agents above a wealth threshold and whether they form an independent set
// of the trading graph (no edge joins two of them). `gap` is the
// condensation gap of the same state.
struct CondensationReport {
    double gap = 0.0;
    std::vector<std::uint32_t> wealthy;
    bool is_independent = true;
    double threshold = 0.0;
};

// Sum of squared shares; lies in [1/N, 1]. 1/N only at the uniform vector,
// 1 only at a canonical basis vector.
double norm2_squared(const WealthVector& x);

// ||x||_2 / ||x||_1 in (0,1]; equals 1 iff the state is maximally
// concentrated (a canonical basis vector). Throws std::invalid_argument on
// an all-zero vector.
double concentration_ratio(const WealthVector& x);

// Gini index via the mean-absolute-difference form, computed exactly in
// O(N log N) by sorting. Shares sum to 1, so G = sum_ij |x_i - x_j| / (2N),
// in [0, (N-1)/N].
double gini(const WealthVector& x);

// Max over admissible pairs of min(x[i], x[j]). Zero exactly when every
// edge has an impoverished endpoint, i.e. the state is locally condensed;
// this is the quantity driven to zero by the convergence dynamics.
double condensation_gap(const WealthVector& x, const TradeGraph& g);

// Extracts agents with wealth > threshold and checks graph-independence.
// Requires threshold in (0,1).
CondensationReport wealthy_set(const WealthVector& x, const TradeGraph& g, double threshold);

} // namespace yardsale
