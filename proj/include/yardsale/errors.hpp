#pragma once

#include <stdexcept>
#include <string>

namespace yardsale {

// Raised for invalid configuration input: bad file, unknown key, value out
// of range. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a policy produces a transfer fraction outside [delta, 1) or a
// win probability outside (0, 1). Fatal for the run. Maps to exit code 3.
class PolicyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for non-config failures at run time (I/O, aborted runs). Exit code 3.
class RuntimeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace yardsale
