#include "yardsale/trade_algebra.hpp"

#include <stdexcept>
#include <string>

namespace yardsale {

double expected_norm_change(const TradeAlgebraInput& in) {
    const double stake = in.fraction * in.poorer_wealth;
    return (4.0 * in.win_prob - 2.0) * stake * (in.richer_wealth - in.poorer_wealth) +
           2.0 * stake * stake;
}

double brute_force_norm_change(const TradeAlgebraInput& in) {
    const double mu = in.poorer_wealth;
    const double nu = in.richer_wealth;
    const double before = mu * mu + nu * nu;

    const double mu_win = mu - in.fraction * mu; // richer won, poorer paid
    const double nu_win = nu + in.fraction * mu;
    const double mu_lose = mu + in.fraction * mu;
    const double nu_lose = nu - in.fraction * mu;

    const double after_win = mu_win * mu_win + nu_win * nu_win;
    const double after_lose = mu_lose * mu_lose + nu_lose * nu_lose;

    return in.win_prob * (after_win - before) + (1.0 - in.win_prob) * (after_lose - before);
}

bool check_admissibility(const TradeAlgebraInput& in) {
    return (4.0 * in.win_prob - 2.0) * (in.richer_wealth - in.poorer_wealth) >=
           -in.risk_floor * in.poorer_wealth;
}

double min_admissible_p(double poorer_wealth, double richer_wealth, double risk_floor) {
    if (poorer_wealth > richer_wealth) {
        throw std::invalid_argument("min_admissible_p: poorer wealth exceeds richer wealth");
    }
    const double gap = richer_wealth - poorer_wealth;
    if (gap <= 0.0) return 0.0; // equal wealths: any p is admissible
    const double p = 0.5 - risk_floor * poorer_wealth / (4.0 * gap);
    return p > 0.0 ? p : 0.0;
}

double stake_squared_bound(const TradeAlgebraInput& in) {
    if (!check_admissibility(in)) {
        throw std::invalid_argument("stake_squared_bound: input violates the admissibility "
                                    "condition");
    }
    const double stake = in.fraction * in.poorer_wealth;
    return stake * stake;
}

} // namespace yardsale
