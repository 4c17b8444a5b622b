#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace yardsale {

// The four variate streams a trade step consumes, plus one reserved for
// drawing a random initial wealth vector. Streams are seeded independently
// from (master_seed, run_index, tag) and never interleave, so swapping the
// policy that reads one stream cannot perturb the draws of another.
enum class Stream : std::uint32_t {
    pair_draw = 0, // which admissible pair trades
    fraction = 1,  // feeds the transfer-fraction policy (B)
    win_prob = 2,  // feeds the win-bias policy (p)
    coin = 3,      // decides the transfer direction (s)
    init = 4,      // initial wealth simplex draw
};

inline constexpr std::size_t kStreamCount = 5;

// Deterministic multi-stream uniform generator. Identical (master_seed,
// run_index) reproduce bit-identical variate sequences on every platform:
// the engine is mt19937_64 (output fully specified by the standard) and
// doubles are built from the raw 64-bit output directly rather than through
// std::uniform_real_distribution, whose results are implementation-defined.
class RngStreams {
public:
    RngStreams(std::uint64_t master_seed, std::uint64_t run_index);

    // Uniform variate in the open interval (0,1) from the given stream.
    double next(Stream s);

    double next_pair() { return next(Stream::pair_draw); }
    double next_fraction() { return next(Stream::fraction); }
    double next_win_prob() { return next(Stream::win_prob); }
    double next_coin() { return next(Stream::coin); }
    double next_init() { return next(Stream::init); }

    // Number of variates drawn so far from a stream.
    std::uint64_t draws(Stream s) const { return counts_[static_cast<std::size_t>(s)]; }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t run_index() const { return run_index_; }

    // Seed for one stream, exposed for reproducibility tests.
    static std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index,
                                     Stream tag);

private:
    std::uint64_t master_seed_;
    std::uint64_t run_index_;
    std::array<std::mt19937_64, kStreamCount> engines_;
    std::array<std::uint64_t, kStreamCount> counts_{};
};

} // namespace yardsale
