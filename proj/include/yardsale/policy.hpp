#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "yardsale/wealth.hpp"

namespace yardsale {

// --- transfer-fraction policies (produce B in [delta, 1)) ------------------

struct ConstantFraction {
    double value = 0.25;
};

// Per-agent risk appetite: the poorer agent's coefficient sets the stake.
struct PerAgentFraction {
    std::vector<double> coeffs; // one per agent, each in [delta, 1)
};

// B drawn uniformly from [lo, hi) each trade, delta <= lo < hi <= 1.
struct UniformFraction {
    double lo = 0.0; // 0 means "use delta"
    double hi = 0.5;
};

using FractionPolicy = std::variant<ConstantFraction, PerAgentFraction, UniformFraction>;

// --- win-bias policies (produce p in (0, 1)) --------------------------------
//
// p is the probability that the richer agent wins the trade; p > 1/2 is a
// wealth-acquired advantage, p < 1/2 a poverty-acquired one.

struct FairCoin {};

struct ConstantBias {
    double value = 0.5;
};

// Poverty advantage that saturates at `floor` and never exceeds what the
// admissibility bound allows: p = max(floor, 1/2 - kappa*delta*x_mu /
// (4*(x_nu - x_mu))), with p = floor at equal wealths and a one-sided
// rounding guard keeping the produced bias admissible pathwise. For
// kappa <= 1 this preserves the expected squared-norm growth.
struct SaturatingPovertyBias {
    double kappa = 1.0; // in (0, 1]
    double floor = 0.3; // in (0, 1)
};

using BiasPolicy = std::variant<FairCoin, ConstantBias, SaturatingPovertyBias>;

// --- per-run policy state ----------------------------------------------------
//
// History summaries a policy may read; updated by the stepper after every
// trade. Kept O(1) per run: policies see the current state plus whatever
// they accumulate here, not the full trajectory.
struct PolicyState {
    std::uint64_t trades = 0;
    double cumulative_stake = 0.0; // running sum of B * x[poorer]
    double last_transfer = 0.0;    // signed amount that left the poorer agent
};

struct PolicySet {
    double delta = 0.01; // risk floor, in (0,1); every B satisfies delta <= B < 1
    FractionPolicy fraction = ConstantFraction{};
    BiasPolicy bias = FairCoin{};
    PolicyState state{};
};

// What a policy sees when evaluated for step `step_index`.
struct PolicyContext {
    std::uint64_t step_index;
    const WealthVector& wealth; // pre-trade state
    std::uint32_t poorer;
    std::uint32_t richer;
    const PolicyState& memory;
};

// Pure evaluation kernels; `variate` is the uniform draw in (0,1) reserved
// for this policy (consumed even by constant policies so that experiments
// differing in one policy stay coupled on all other randomness).
double eval_fraction(const FractionPolicy& policy, double delta, const PolicyContext& ctx,
                     double variate);
double eval_bias(const BiasPolicy& policy, double delta, const PolicyContext& ctx,
                 double variate);

// Config-time validation; throws ConfigError naming the offending field.
void validate_policies(const PolicySet& set, std::uint32_t n_agents);

} // namespace yardsale
