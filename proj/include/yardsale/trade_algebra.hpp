#pragma once

namespace yardsale {

// Operands of the single-trade expectation algebra. Plain aggregate; the
// functions below assume poorer_wealth <= richer_wealth, fraction in
// [risk_floor, 1), win_prob in (0,1), risk_floor in (0,1) unless stated.
struct TradeAlgebraInput {
    double poorer_wealth = 0.0; // x_mu >= 0
    double richer_wealth = 0.0; // x_nu >= x_mu
    double fraction = 0.0;      // B
    double win_prob = 0.5;      // p
    double risk_floor = 0.01;   // delta
};

// Conditional expected change of the squared Euclidean norm in one trade,
// closed form: (4p-2) * B * x_mu * (x_nu - x_mu) + 2 * (B * x_mu)^2.
double expected_norm_change(const TradeAlgebraInput& in);

// The same expectation by direct enumeration of the two coin outcomes,
// restricted to the two affected coordinates. Independent oracle for
// expected_norm_change; kept free of any shared sub-expression with it.
double brute_force_norm_change(const TradeAlgebraInput& in);

// Bias admissibility: (4p-2) * (x_nu - x_mu) >= -delta * x_mu. Holds for any
// p >= 1/2; constrains how strong a poverty advantage may be.
bool check_admissibility(const TradeAlgebraInput& in);

// Smallest admissible win probability for the given wealths: 0 at equal
// wealths, else max(0, 1/2 - delta*x_mu / (4*(x_nu - x_mu))). The boundary is
// closed: check_admissibility holds at exactly this value. Throws
// std::invalid_argument if poorer_wealth > richer_wealth.
double min_admissible_p(double poorer_wealth, double richer_wealth, double risk_floor);

// Admissibility implies expected_norm_change >= (B * x_mu)^2; returns that
// lower bound. Throws std::invalid_argument when the input is inadmissible.
double stake_squared_bound(const TradeAlgebraInput& in);

} // namespace yardsale
