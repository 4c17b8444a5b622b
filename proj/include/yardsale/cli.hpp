#pragma once

namespace yardsale {

// Exit codes: 0 success, 2 configuration/usage error, 3 runtime error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

// Full CLI entry point, callable in-process for tests.
int cli_main(int argc, const char* const* argv);

} // namespace yardsale
