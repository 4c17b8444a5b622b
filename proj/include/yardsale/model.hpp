#pragma once

#include <cstdint>
#include <utility>

#include "yardsale/graph.hpp"
#include "yardsale/policy.hpp"
#include "yardsale/rng.hpp"
#include "yardsale/wealth.hpp"

namespace yardsale {

// One realized trade. `transfer` is the signed amount that left the poorer
// agent: transfer = coin * fraction * poorer_wealth_before, so coin = +1
// means the richer agent won.
struct TradeEvent {
    std::uint64_t step = 0; // 1-based step index
    std::uint32_t drawn_i = 0;
    std::uint32_t drawn_j = 0;
    std::uint32_t poorer = 0; // mu: no more wealth than richer, pre-trade
    std::uint32_t richer = 0; // nu
    double fraction = 0.0;    // B in [delta, 1)
    double win_prob = 0.0;    // p in (0, 1)
    int coin = 0;             // s in {-1, +1}
    double transfer = 0.0;
    double poorer_wealth_before = 0.0;
    double richer_wealth_before = 0.0;
};

// Relabels a drawn pair so the first index holds no more wealth than the
// second; ties keep the drawn order. Throws std::invalid_argument on equal
// or out-of-range indices.
std::pair<std::uint32_t, std::uint32_t> order_pair(const WealthVector& x, std::uint32_t i,
                                                   std::uint32_t j);

// Draws an admissible pair with probability equal to its normalized weight,
// consuming exactly one variate from the pair stream. Reported with the
// lower index first.
std::pair<std::uint32_t, std::uint32_t> sample_pair(const TradeGraph& g, RngStreams& rng);

// Evaluates both policies for one step, consuming exactly one variate from
// the fraction stream and one from the win-prob stream (even for constant
// policies, to keep stream alignment across policy swaps). Returns (B, p);
// throws PolicyViolation if either lands outside its contract range.
std::pair<double, double> evaluate_policies(const PolicySet& policies, std::uint64_t step_index,
                                            const WealthVector& x, std::uint32_t poorer,
                                            std::uint32_t richer, RngStreams& rng);

// s = +1 iff the coin variate W satisfies W <= p. Pure kernel plus a
// stream-consuming wrapper. Throws std::invalid_argument unless 0 < p < 1.
int coin_from(double win_prob, double coin_variate);
int flip_coin(double win_prob, RngStreams& rng);

// The trade rule: amount = coin * fraction * x[poorer] computed once, then
// one subtraction and one addition. Pure version returns the new vector.
// Requires x[poorer] <= x[richer] and fraction in (0,1).
WealthVector apply_trade(const WealthVector& x, std::uint32_t poorer, std::uint32_t richer,
                         double fraction, int coin);

// One full trade: sample pair, order it, evaluate policies, flip the coin,
// apply the transfer in place. Consumes exactly one variate from each of the
// four trade streams and updates policies.state.
TradeEvent step(WealthVector& x, const TradeGraph& g, PolicySet& policies, RngStreams& rng,
                std::uint64_t step_index);

} // namespace yardsale
