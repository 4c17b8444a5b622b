#include "yardsale/rng.hpp"

namespace yardsale {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; full-avalanche mix of one 64-bit word.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

std::uint64_t RngStreams::derive_seed(std::uint64_t master_seed, std::uint64_t run_index,
                                      Stream tag) {
    std::uint64_t h = mix64(master_seed + kGolden);
    h = mix64(h ^ (run_index + kGolden));
    h = mix64(h ^ (static_cast<std::uint64_t>(tag) + kGolden));
    return h;
}

RngStreams::RngStreams(std::uint64_t master_seed, std::uint64_t run_index)
    : master_seed_(master_seed), run_index_(run_index) {
    for (std::size_t i = 0; i < kStreamCount; ++i) {
        engines_[i].seed(derive_seed(master_seed, run_index, static_cast<Stream>(i)));
    }
}

double RngStreams::next(Stream s) {
    const auto i = static_cast<std::size_t>(s);
    ++counts_[i];
    // Top 53 bits, centered on the lattice: ((k + 0.5) * 2^-53) lies strictly
    // inside (0,1), so log() and the W <= p comparison are always well posed.
    const std::uint64_t bits = engines_[i]() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

} // namespace yardsale
