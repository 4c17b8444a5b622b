#include "yardsale/wealth.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "yardsale/errors.hpp"
#include "yardsale/rng.hpp"

namespace yardsale {

namespace {
constexpr double kSumTolerance = 1e-10;
}

WealthVector::WealthVector(std::vector<double> shares) : shares_(std::move(shares)) {
    if (shares_.size() < 2) {
        throw ConfigError("wealth vector: need at least 2 agents, got " +
                          std::to_string(shares_.size()));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < shares_.size(); ++i) {
        if (!(shares_[i] >= 0.0) || !std::isfinite(shares_[i])) {
            throw ConfigError("wealth vector: share " + std::to_string(i) +
                              " must be finite and >= 0, got " + std::to_string(shares_[i]));
        }
        total += shares_[i];
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw ConfigError("wealth vector: shares must sum to 1 within 1e-10, got sum " +
                          std::to_string(total));
    }
}

WealthVector WealthVector::initial(std::vector<double> shares) {
    for (std::size_t i = 0; i < shares.size(); ++i) {
        if (!(shares[i] > 0.0 && shares[i] < 1.0)) {
            throw ConfigError("initial wealth: share " + std::to_string(i) +
                              " must lie strictly in (0,1), got " + std::to_string(shares[i]));
        }
    }
    return WealthVector(std::move(shares));
}

WealthVector WealthVector::uniform(std::size_t n_agents) {
    std::vector<double> shares(n_agents, 1.0 / static_cast<double>(n_agents));
    return WealthVector(std::move(shares));
}

WealthVector WealthVector::random_simplex(std::size_t n_agents, RngStreams& rng) {
    std::vector<double> shares(n_agents);
    double total = 0.0;
    for (auto& s : shares) {
        s = -std::log(rng.next_init()); // variate is in (0,1), so this is finite and > 0
        total += s;
    }
    for (auto& s : shares) s /= total;
    return initial(std::move(shares));
}

double WealthVector::sum() const {
    double total = 0.0;
    for (double s : shares_) total += s;
    return total;
}

void WealthVector::renormalize() {
    const double total = sum();
    if (total <= 0.0) return;
    for (auto& s : shares_) s /= total;
}

} // namespace yardsale
