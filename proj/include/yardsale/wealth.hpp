#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace yardsale {

class RngStreams;

// Wealth shares of the N agents, as fractions of the whole economy.
// Invariants: N >= 2, every share >= 0, |sum - 1| <= 1e-10. Shares may decay
// to zero over a run; a freshly initialized vector must be strictly positive.
class WealthVector {
public:
    // General state: nonnegative shares summing to 1. Throws ConfigError.
    explicit WealthVector(std::vector<double> shares);

    // Initial state: additionally requires every share in (0,1).
    static WealthVector initial(std::vector<double> shares);

    static WealthVector uniform(std::size_t n_agents);

    // Random point of the simplex via normalized exponential spacings,
    // consuming n variates from the init stream.
    static WealthVector random_simplex(std::size_t n_agents, RngStreams& rng);

    std::size_t size() const { return shares_.size(); }
    double operator[](std::size_t i) const { return shares_[i]; }
    const std::vector<double>& shares() const { return shares_; }

    double sum() const;

    // One subtraction and one addition; `amount` leaves `from` and enters
    // `to`. Callers guarantee |amount| < shares_[from] (transfer fraction
    // strictly below 1), which keeps every share nonnegative.
    void apply_transfer(std::size_t from, std::size_t to, double amount) {
        shares_[from] -= amount;
        shares_[to] += amount;
    }

    // Rescales the shares to sum exactly to 1 again; used by the optional
    // periodic renormalization of ultra-long runs.
    void renormalize();

    bool operator==(const WealthVector& other) const = default;

private:
    std::vector<double> shares_;
};

} // namespace yardsale
