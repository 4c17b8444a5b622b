#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace yardsale::presets {

struct Preset {
    std::string_view name;
    std::string_view description;
    std::string_view text; // JSON config document
};

const std::vector<Preset>& all();

// Null when the name is unknown.
const Preset* find(std::string_view name);

// Edge list of the irregular incomplete graph used by the fig1-local
// preset; exposed so tests can build the same graph directly.
std::vector<std::pair<std::uint32_t, std::uint32_t>> fig1_edges();

} // namespace yardsale::presets
