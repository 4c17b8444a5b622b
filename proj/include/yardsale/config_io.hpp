#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "yardsale/run_config.hpp"

namespace yardsale {

struct OutputConfig {
    std::string directory = ".";
    bool csv = true;
    bool dot = false;
    bool svg = false;
    bool summary = true;
    bool wealth_columns = false;
};

struct ExperimentConfig {
    RunConfig run;
    OutputConfig output;
};

// Parses and fully validates a config document. Parsing is fail-closed:
// unknown keys are rejected, every numeric range is checked before any run
// starts, and every error names the offending key. Throws ConfigError.
ExperimentConfig parse_config(const std::filesystem::path& path);
ExperimentConfig parse_config_json(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);

// Canonical full-document echo with all defaults materialized. Feeding it
// back through parse_config reproduces an equivalent config.
nlohmann::json config_to_json(const ExperimentConfig& config);

} // namespace yardsale
