#include "yardsale/policy.hpp"

#include <algorithm>
#include <string>

#include "yardsale/errors.hpp"

namespace yardsale {

namespace {

struct FractionEval {
    double delta;
    const PolicyContext& ctx;
    double variate;

    double operator()(const ConstantFraction& p) const { return p.value; }
    double operator()(const PerAgentFraction& p) const { return p.coeffs[ctx.poorer]; }
    double operator()(const UniformFraction& p) const {
        const double lo = p.lo > 0.0 ? p.lo : delta;
        return lo + variate * (p.hi - lo);
    }
};

struct BiasEval {
    double delta;
    const PolicyContext& ctx;

    double operator()(const FairCoin&) const { return 0.5; }
    double operator()(const ConstantBias& p) const { return p.value; }
    double operator()(const SaturatingPovertyBias& p) const {
        const double poorer = ctx.wealth[ctx.poorer];
        const double richer = ctx.wealth[ctx.richer];
        const double gap = richer - poorer;
        if (gap <= 0.0) return p.floor;
        const double pull = p.kappa * delta * poorer / (4.0 * gap);
        // One-sided guard: aiming at the boundary exactly would let rounding
        // of the admissibility check flip the sign on ulp-scale margins.
        const double unclamped = 0.5 - pull + 1e-12 * (1.0 + pull);
        return std::max(p.floor, unclamped);
    }
};

} // namespace

double eval_fraction(const FractionPolicy& policy, double delta, const PolicyContext& ctx,
                     double variate) {
    return std::visit(FractionEval{delta, ctx, variate}, policy);
}

double eval_bias(const BiasPolicy& policy, double delta, const PolicyContext& ctx,
                 double /*variate*/) {
    // The bias variate is reserved for randomized bias policies; none of the
    // shipped ones use it, but the stepper draws it unconditionally.
    return std::visit(BiasEval{delta, ctx}, policy);
}

void validate_policies(const PolicySet& set, std::uint32_t n_agents) {
    const double delta = set.delta;
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("model.delta: must lie in (0,1), got " + std::to_string(delta));
    }

    if (const auto* c = std::get_if<ConstantFraction>(&set.fraction)) {
        if (!(c->value >= delta && c->value < 1.0)) {
            throw ConfigError("policies.b_policy.b: must lie in [delta,1) = [" +
                              std::to_string(delta) + ",1), got " + std::to_string(c->value));
        }
    } else if (const auto* a = std::get_if<PerAgentFraction>(&set.fraction)) {
        if (a->coeffs.size() != n_agents) {
            throw ConfigError("policies.b_policy.coeffs: expected " + std::to_string(n_agents) +
                              " entries, got " + std::to_string(a->coeffs.size()));
        }
        for (std::size_t i = 0; i < a->coeffs.size(); ++i) {
            if (!(a->coeffs[i] >= delta && a->coeffs[i] < 1.0)) {
                throw ConfigError("policies.b_policy.coeffs[" + std::to_string(i) +
                                  "]: must lie in [delta,1), got " + std::to_string(a->coeffs[i]));
            }
        }
    } else if (const auto* u = std::get_if<UniformFraction>(&set.fraction)) {
        const double lo = u->lo > 0.0 ? u->lo : delta;
        if (!(lo >= delta)) {
            throw ConfigError("policies.b_policy.lo: must be >= delta, got " +
                              std::to_string(u->lo));
        }
        if (!(u->hi > lo && u->hi <= 1.0)) {
            throw ConfigError("policies.b_policy.hi: must lie in (lo,1], got " +
                              std::to_string(u->hi));
        }
    }

    if (const auto* c = std::get_if<ConstantBias>(&set.bias)) {
        if (!(c->value > 0.0 && c->value < 1.0)) {
            throw ConfigError("policies.p_policy.p: must lie in (0,1), got " +
                              std::to_string(c->value));
        }
    } else if (const auto* s = std::get_if<SaturatingPovertyBias>(&set.bias)) {
        if (!(s->kappa > 0.0 && s->kappa <= 1.0)) {
            throw ConfigError("policies.p_policy.kappa: must lie in (0,1], got " +
                              std::to_string(s->kappa));
        }
        if (!(s->floor > 0.0 && s->floor < 1.0)) {
            throw ConfigError("policies.p_policy.floor: must lie in (0,1), got " +
                              std::to_string(s->floor));
        }
    }
}

} // namespace yardsale
