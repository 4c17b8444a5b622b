#include "yardsale/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "yardsale/errors.hpp"

namespace yardsale {

std::pair<std::uint32_t, std::uint32_t> order_pair(const WealthVector& x, std::uint32_t i,
                                                   std::uint32_t j) {
    if (i == j) {
        throw std::invalid_argument("order_pair: indices must differ, got " + std::to_string(i) +
                                    " twice");
    }
    if (i >= x.size() || j >= x.size()) {
        throw std::invalid_argument("order_pair: index out of range for " +
                                    std::to_string(x.size()) + " agents");
    }
    if (x[i] <= x[j]) return {i, j};
    return {j, i};
}

std::pair<std::uint32_t, std::uint32_t> sample_pair(const TradeGraph& g, RngStreams& rng) {
    const auto& e = g.edges()[g.pick(rng.next_pair())];
    return {e.a, e.b};
}

std::pair<double, double> evaluate_policies(const PolicySet& policies, std::uint64_t step_index,
                                            const WealthVector& x, std::uint32_t poorer,
                                            std::uint32_t richer, RngStreams& rng) {
    const PolicyContext ctx{step_index, x, poorer, richer, policies.state};
    const double u = rng.next_fraction();
    const double v = rng.next_win_prob();
    const double fraction = eval_fraction(policies.fraction, policies.delta, ctx, u);
    if (!(fraction >= policies.delta && fraction < 1.0)) {
        throw PolicyViolation("b-policy produced B = " + std::to_string(fraction) +
                              " outside [delta,1) at step " + std::to_string(step_index));
    }
    const double win_prob = eval_bias(policies.bias, policies.delta, ctx, v);
    if (!(win_prob > 0.0 && win_prob < 1.0)) {
        throw PolicyViolation("p-policy produced p = " + std::to_string(win_prob) +
                              " outside (0,1) at step " + std::to_string(step_index));
    }
    return {fraction, win_prob};
}

int coin_from(double win_prob, double coin_variate) {
    if (!(win_prob > 0.0 && win_prob < 1.0)) {
        throw std::invalid_argument("flip_coin: p must lie in (0,1), got " +
                                    std::to_string(win_prob));
    }
    return coin_variate <= win_prob ? +1 : -1;
}

int flip_coin(double win_prob, RngStreams& rng) { return coin_from(win_prob, rng.next_coin()); }

namespace {

// Shared by the pure and in-place paths so both round identically.
inline double transfer_amount(double poorer_wealth, double fraction, int coin) {
    const double stake = fraction * poorer_wealth;
    return coin > 0 ? stake : -stake;
}

} // namespace

WealthVector apply_trade(const WealthVector& x, std::uint32_t poorer, std::uint32_t richer,
                         double fraction, int coin) {
    if (poorer >= x.size() || richer >= x.size() || poorer == richer) {
        throw std::invalid_argument("apply_trade: bad agent indices");
    }
    if (!(x[poorer] <= x[richer])) {
        throw std::invalid_argument("apply_trade: first agent must not be wealthier");
    }
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw std::invalid_argument("apply_trade: fraction must lie in (0,1), got " +
                                    std::to_string(fraction));
    }
    if (coin != 1 && coin != -1) {
        throw std::invalid_argument("apply_trade: coin must be +1 or -1");
    }
    WealthVector out = x;
    out.apply_transfer(poorer, richer, transfer_amount(x[poorer], fraction, coin));
    return out;
}

TradeEvent step(WealthVector& x, const TradeGraph& g, PolicySet& policies, RngStreams& rng,
                std::uint64_t step_index) {
    const auto [i, j] = sample_pair(g, rng);
    const auto [poorer, richer] = order_pair(x, i, j);
    const auto [fraction, win_prob] =
        evaluate_policies(policies, step_index, x, poorer, richer, rng);
    const int coin = flip_coin(win_prob, rng);

    TradeEvent event;
    event.step = step_index;
    event.drawn_i = i;
    event.drawn_j = j;
    event.poorer = poorer;
    event.richer = richer;
    event.fraction = fraction;
    event.win_prob = win_prob;
    event.coin = coin;
    event.poorer_wealth_before = x[poorer];
    event.richer_wealth_before = x[richer];
    event.transfer = transfer_amount(x[poorer], fraction, coin);

    x.apply_transfer(poorer, richer, event.transfer);

    auto& mem = policies.state;
    mem.trades += 1;
    mem.cumulative_stake += fraction * event.poorer_wealth_before;
    mem.last_transfer = event.transfer;
    return event;
}

} // namespace yardsale
